"""Command line entry point.

Exit codes: 0 when the round is accepted, 2 when detection events were
recorded, 1 on errors (bad input, unparsable transcripts).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .errors import InvestcoinError, ParseError
from .group import canonical_json, generate_params, toy_params
from .harness import (
    BEHAVIOURS,
    Adversary,
    ScenarioConfig,
    oracle_round,
    resolve_inputs,
    run_scenario,
    scenario_params,
    verify_transcript,
)

EXIT_ACCEPTED, EXIT_ERROR, EXIT_DETECTED = 0, 1, 2

TOY_SIZES = {"n": 2, "lam": 3, "l": 2}


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", default=None, help="scenario seed (string)")
    parser.add_argument("--config", type=Path, help="ScenarioConfig JSON file")
    parser.add_argument("--out", type=Path, help="output file (transcript or parameters)")
    parser.add_argument("--toy", action="store_true", help="use the p = 23 preset")
    parser.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="investcoin", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-params", help="search a safe-prime group")
    _common(p)
    p.add_argument("--q-bits", type=int, default=64)
    p.add_argument("-l", type=int, default=16)
    p.add_argument("-n", type=int, default=4)
    p.add_argument("--lambda", dest="lam", type=int, default=5)

    p = sub.add_parser("run-round", help="simulate one honest round")
    _common(p)

    p = sub.add_parser("attack", help="round with one cheating investor")
    _common(p)
    p.add_argument("behaviour", choices=[b for b in BEHAVIOURS if b != "honest"])
    p.add_argument("--investor", type=int, default=1)
    p.add_argument("--project", type=int, default=1)
    p.add_argument("--delta", type=int, default=1)

    p = sub.add_parser("transfer", help="round followed by one share transfer")
    _common(p)
    p.add_argument("--sender", type=int, default=1)
    p.add_argument("--receiver", type=int, default=2)
    p.add_argument("--project", type=int, default=1)
    p.add_argument("--amount", type=int, default=None, help="default: half the sender's holding")
    p.add_argument("--recheck", action="store_true", help="range re-test both updated commitments")

    p = sub.add_parser("verify-transcript", help="replay a JSON-lines transcript")
    _common(p)
    p.add_argument("transcript", type=Path)

    p = sub.add_parser("oracle-check", help="compare a round with plain integer sums")
    _common(p)
    return parser


def load_config(args) -> ScenarioConfig:
    if args.config is not None:
        cfg = ScenarioConfig.from_json(json.loads(args.config.read_text()))
    else:
        cfg = ScenarioConfig()
    if args.toy:
        cfg.toy = True
        for k, v in TOY_SIZES.items():
            setattr(cfg, k, v)
    if args.seed is not None:
        cfg.seed = args.seed.encode()
    return cfg


def _report(transcript, verdict, out: Path | None) -> int:
    if out is not None:
        transcript.write(out)
    summary = {"accepted": verdict.accepted, "aborted": verdict.aborted, "events": verdict.events}
    if verdict.totals is not None:
        summary["X"] = {str(j): str(v) for j, v in verdict.totals.items()}
    print(json.dumps(summary, indent=2))
    if verdict.accepted:
        return EXIT_ACCEPTED
    return EXIT_DETECTED


def cmd_gen_params(args) -> int:
    if args.toy:
        params = toy_params(**TOY_SIZES)
    else:
        seed = (args.seed or "").encode()
        params = generate_params(args.q_bits, args.l, args.n, args.lam, seed)
    text = json.dumps(params.to_json(), indent=2)
    if args.out:
        args.out.write_text(text + "\n")
    print(text)
    return EXIT_ACCEPTED


def cmd_run_round(args) -> int:
    return _report(*run_scenario(load_config(args)), args.out)


def cmd_attack(args) -> int:
    cfg = load_config(args)
    opts = {"project": args.project, "delta": args.delta}
    cfg.adversaries = [a for a in cfg.adversaries if a.investor != args.investor]
    cfg.adversaries.append(Adversary(args.investor, args.behaviour, opts))
    return _report(*run_scenario(cfg), args.out)


def cmd_transfer(args) -> int:
    cfg = load_config(args)
    cfg.range_recheck_on_transfer = cfg.range_recheck_on_transfer or args.recheck
    amount = args.amount
    if amount is None:
        x = resolve_inputs(cfg, scenario_params(cfg).m)
        amount = x[args.sender].get(args.project, 0) // 2
    cfg.transfers = list(cfg.transfers) + [(args.sender, args.receiver, args.project, amount)]
    return _report(*run_scenario(cfg), args.out)


def cmd_verify(args) -> int:
    ok = verify_transcript(args.transcript)
    print("accepted" if ok else "rejected")
    return EXIT_ACCEPTED if ok else EXIT_DETECTED


def cmd_oracle_check(args) -> int:
    cfg = load_config(args)
    _, verdict = run_scenario(cfg)
    expected = oracle_round(cfg)
    if verdict.totals is None:
        print("round aborted before decryption", file=sys.stderr)
        return EXIT_DETECTED
    ok = verdict.totals == expected["X"]
    print(canonical_json({"match": ok, "X": {str(j): str(v) for j, v in expected["X"].items()}}))
    return EXIT_ACCEPTED if ok else EXIT_DETECTED


COMMANDS = {
    "gen-params": cmd_gen_params,
    "run-round": cmd_run_round,
    "attack": cmd_attack,
    "transfer": cmd_transfer,
    "verify-transcript": cmd_verify,
    "oracle-check": cmd_oracle_check,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (InvestcoinError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
