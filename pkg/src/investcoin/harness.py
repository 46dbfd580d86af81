"""Deterministic simulation of complete investment rounds.

A scenario fixes the group size, the investors' amounts, the return factors,
optional cheating investors and optional transfers. ``run_scenario`` plays
every party against an in-memory message bus and returns the JSON-lines
transcript plus the administrator's verdict. ``verify_transcript`` replays the
recorded messages through a fresh administrator and re-derives every check.

All randomness comes from one seed, forked per party label, so the presence of
an adversary never changes what honest parties draw.
"""

from __future__ import annotations

import functools
import hashlib
import json
import logging
import random
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable

from . import protocol as P
from .adversary import extra_bit_proof, forged_range_proof, mismatched_range_proof
from .errors import InvestcoinError, ParameterConflict, ParseError, RangeRecheckFailed
from .group import GroupParams, OracleTable, generate_params, toy_params
from .keygen import Blackboard, pinned_zero_cipher
from .pedersen import commit
from .psa import PsaCiphertext, psa_enc
from .rangeproof import RangeProof

log = logging.getLogger(__name__)

BEHAVIOURS = (
    "honest",
    "mismatch",
    "negative-amount",
    "extra-bit",
    "recombination",
    "fresh-key",
    "fresh-key-pinned",
    "wrong-tags",
    "inflate-pay",
    "inflate-return",
    "silent",
)

PHASES = ("setup", "keygen", "board", "submit", "decrypt", "transfer", "alphas", "returns", "verdict")


def fork_rng(seed: bytes, label: str) -> random.Random:
    return random.Random(hashlib.sha256(seed + b"|" + label.encode()).digest())


@dataclass
class Adversary:
    investor: int
    behaviour: str
    params: dict = field(default_factory=dict)


@dataclass
class ScenarioConfig:
    q_bits: int = 64
    l: int = 16
    n: int = 4
    lam: int = 5
    seed: bytes = b"investcoin"
    investments: str | list[list[int]] = "random"
    alphas: str | list[int] = "random"
    adversaries: list[Adversary] = field(default_factory=list)
    transfers: list[tuple[int, int, int, int]] = field(default_factory=list)
    range_recheck_on_transfer: bool = False
    full_range_commit_randomness: bool = False
    toy: bool = False
    params_seed: bytes | None = None

    def validate(self) -> None:
        ids = [a.investor for a in self.adversaries]
        if len(set(ids)) != len(ids):
            raise ValueError("adversary ids must be distinct")
        for a in self.adversaries:
            if not 1 <= a.investor <= self.n:
                raise ValueError(f"adversary id {a.investor} outside 1..{self.n}")
            if a.behaviour not in BEHAVIOURS:
                raise ValueError(f"unknown behaviour {a.behaviour!r}")
        for i, i2, j, _ in self.transfers:
            if not (1 <= i <= self.n and 1 <= i2 <= self.n and i != i2):
                raise ValueError(f"bad transfer parties {i}, {i2}")
            if not 1 <= j <= self.lam - 2:
                raise ValueError(f"transfers only in real projects, got {j}")
        if self.full_range_commit_randomness:
            # ~r is PSA-encrypted, which only carries it mod p
            raise ParameterConflict("full-range commitment randomness cannot be recovered from the PSA layer")

    def to_json(self) -> dict:
        d = asdict(self)
        d["seed"] = self.seed.decode("latin-1")
        d["params_seed"] = None if self.params_seed is None else self.params_seed.decode("latin-1")
        d["lambda"] = d.pop("lam")
        d["transfers"] = [list(t) for t in self.transfers]
        return d

    @classmethod
    def from_json(cls, d: dict) -> "ScenarioConfig":
        d = dict(d)
        if "lambda" in d:
            d["lam"] = d.pop("lambda")
        for key in ("seed", "params_seed"):
            if isinstance(d.get(key), str):
                d[key] = d[key].encode("latin-1")
        d["adversaries"] = [a if isinstance(a, Adversary) else Adversary(**a) for a in d.get("adversaries", [])]
        d["transfers"] = [tuple(t) for t in d.get("transfers", [])]
        cfg = cls(**d)
        cfg.validate()
        return cfg


@functools.lru_cache(maxsize=32)
def _cached_params(q_bits: int, l: int, n: int, lam: int, seed: bytes) -> GroupParams:
    return generate_params(q_bits, l, n, lam, seed)


def scenario_params(cfg: ScenarioConfig) -> GroupParams:
    if cfg.toy:
        return toy_params(cfg.n, cfg.lam, cfg.l)
    return _cached_params(cfg.q_bits, cfg.l, cfg.n, cfg.lam, cfg.params_seed if cfg.params_seed is not None else cfg.seed)


def resolve_inputs(cfg: ScenarioConfig, m: int) -> dict[int, dict[int, int]]:
    """Plaintext investments x[i][j] over the real projects.

    Only integer arithmetic; shared by the simulation and the plaintext oracle.
    """
    real = list(range(1, cfg.lam - 1))
    if cfg.investments == "random":
        rng = fork_rng(cfg.seed, "inputs")
        x = {i: {j: rng.randint(0, m) for j in real} for i in range(1, cfg.n + 1)}
    else:
        rows = cfg.investments
        if len(rows) != cfg.n:
            raise ValueError("investment matrix needs one row per investor")
        x = {}
        for i, row in enumerate(rows, start=1):
            if len(row) == cfg.lam:
                if row[-2:] != [0, 0]:
                    raise ValueError("dummy projects take no investment")
                row = row[:-2]
            if len(row) != len(real):
                raise ValueError(f"row {i} must cover {len(real)} real projects")
            x[i] = dict(zip(real, row))
    return x


def resolve_alphas(cfg: ScenarioConfig, params: GroupParams) -> dict[int, int]:
    if cfg.alphas == "random":
        return P.sample_alphas(params, fork_rng(cfg.seed, "alphas"))
    values = list(cfg.alphas)
    if len(values) == cfg.lam:
        values = values[:-2]
    if len(values) != cfg.lam - 2:
        raise ValueError("need one return factor per real project")
    alphas = dict(zip(range(1, cfg.lam - 1), values))
    alphas[cfg.lam - 1] = alphas[cfg.lam] = 1
    return alphas


def oracle_round(cfg: ScenarioConfig) -> dict:
    """Expected aggregates and claims by direct integer arithmetic (no group operations)."""
    params = scenario_params(cfg)
    x = resolve_inputs(cfg, params.m)
    alphas = resolve_alphas(cfg, params)
    holdings = {i: {j: x[i].get(j, 0) for j in range(1, cfg.lam + 1)} for i in x}
    totals = {j: sum(holdings[i][j] for i in holdings) for j in range(0, cfg.lam + 1) if j}
    totals[0] = 0
    pay = {i: sum(holdings[i].values()) for i in holdings}
    for i, i2, j, delta in cfg.transfers:
        holdings[i][j] -= delta
        holdings[i2][j] += delta
    ret = {i: sum(alphas[j] * holdings[i][j] for j in alphas) for i in holdings}
    return {
        "X": dict(sorted(totals.items())),
        "C": pay,
        "E": ret,
        "sum_C": sum(pay.values()),
        "sum_X": sum(v for j, v in totals.items() if j),
        "sum_E": sum(ret.values()),
        "sum_alpha_X": sum(alphas[j] * totals[j] for j in alphas),
        "alphas": alphas,
    }


# transcript


def _ints(d: dict) -> dict:
    return {str(k): str(v) for k, v in d.items()}


def _cipher_map(d: dict[int, PsaCiphertext]) -> dict[str, str]:
    return {str(j): str(ct.c) for j, ct in d.items()}


def encode_submission(sub: dict) -> dict:
    return {
        "ciphers": _cipher_map(sub["ciphers"]),
        "ctildes": _cipher_map(sub["ctildes"]),
        "coms": _ints(sub["coms"]),
        "proofs": {str(j): p.to_json() for j, p in sub["proofs"].items()},
        "C": str(sub["C"]),
        "D": str(sub["D"]),
    }


def decode_submission(d: dict) -> dict:
    return {
        "ciphers": {int(j): PsaCiphertext(int(c), P.tag(int(j))) for j, c in d["ciphers"].items()},
        "ctildes": {int(j): PsaCiphertext(int(c), P.tilde_tag(int(j))) for j, c in d["ctildes"].items()},
        "coms": {int(j): int(c) for j, c in d["coms"].items()},
        "proofs": {int(j): RangeProof.from_json(p) for j, p in d["proofs"].items()},
        "C": int(d["C"]),
        "D": int(d["D"]),
    }


class MessageBus:
    """Synchronous in-memory delivery; every message becomes one transcript record."""

    def __init__(self) -> None:
        self.records: list[dict] = []

    def send(self, phase: str, sender, recipient, payload: dict) -> dict:
        rec = {"phase": phase, "from": sender, "to": recipient, "payload": payload, "sequence": len(self.records)}
        self.records.append(rec)
        return rec

    def count(self, phase: str, sender_is_investor: bool = True, recipient=None) -> int:
        return sum(
            1
            for r in self.records
            if r["phase"] == phase
            and (not sender_is_investor or isinstance(r["from"], int))
            and (recipient is None or r["to"] == recipient)
        )

    def lines(self) -> list[str]:
        return [json.dumps(r, sort_keys=True, separators=(",", ":")) for r in self.records]


@dataclass
class Transcript:
    records: list[dict]

    def lines(self) -> list[str]:
        return [json.dumps(r, sort_keys=True, separators=(",", ":")) for r in self.records]

    def dumps(self) -> str:
        return "\n".join(self.lines()) + "\n"

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps())


@dataclass
class Verdict:
    accepted: bool
    aborted: str | None
    b_t: dict[int, dict[int, bool]]
    consistent: dict[int, bool]
    b_p: dict[int, bool]
    b_r: dict[int, bool]
    totals: dict[int, int] | None
    investor_ledger: dict[int, int]
    project_ledger: dict[int, int]
    events: list[dict]
    messages: dict[str, int] = field(default_factory=dict)

    @classmethod
    def from_admin(cls, admin: P.Administrator, messages: dict[str, int] | None = None) -> "Verdict":
        st = admin.state
        return cls(
            accepted=admin.accepted(),
            aborted=st.aborted,
            b_t={i: dict(v) for i, v in st.b_t.items()},
            consistent=dict(st.consistent),
            b_p=dict(st.b_p),
            b_r=dict(st.b_r),
            totals=None if st.totals is None else dict(st.totals),
            investor_ledger=dict(st.investor_ledger),
            project_ledger=dict(st.project_ledger),
            events=[e.to_json() for e in st.events],
            messages=dict(messages or {}),
        )

    @property
    def detected(self) -> bool:
        return bool(self.events)

    def to_json(self) -> dict:
        return {
            "accepted": self.accepted,
            "aborted": self.aborted,
            "b_T": {str(i): {str(j): b for j, b in v.items()} for i, v in self.b_t.items()},
            "consistent": {str(i): b for i, b in self.consistent.items()},
            "b_P": {str(i): b for i, b in self.b_p.items()},
            "b_R": {str(i): b for i, b in self.b_r.items()},
            "X": None if self.totals is None else _ints(self.totals),
            "ledger": {"investors": _ints(self.investor_ledger), "projects": _ints(self.project_ledger)},
            "events": self.events,
        }


# parties


class InvestorDriver:
    """One investor, honest or following a cheating behaviour."""

    def __init__(self, setup: P.SystemSetup, inv: P.Investor, rng: random.Random, adversary: Adversary | None):
        self.setup = setup
        self.inv = inv
        self.rng = rng
        self.behaviour = adversary.behaviour if adversary else "honest"
        self.opts = adversary.params if adversary else {}
        self.pinned: PsaCiphertext | None = None

    def _project(self) -> int:
        return int(self.opts.get("project", 1))

    def submission(self) -> dict | None:
        setup, inv, b = self.setup, self.inv, self.behaviour
        params, ck = setup.params, setup.commit_key
        if b == "silent":
            return None
        j = self._project()
        if b == "negative-amount":
            inv.amounts[j] = -int(self.opts.get("amount", 1))
        elif b == "extra-bit":
            inv.amounts[j] = params.m + 1
        # amounts may be out of range on purpose, so encrypt without the range guard
        ciphers = {k: psa_enc(params, setup.oracle, inv.s, P.tag(k), inv.amounts[k]) for k in range(setup.lam + 1)}
        coms, ctildes = P.die_com(setup, inv)
        proofs = {}
        for k in range(1, setup.lam + 1):
            ctx = P.range_context(setup, inv.id, k)
            x, r = inv.amounts[k], inv.randomness[k]
            if k == j and b == "negative-amount":
                proofs[k] = forged_range_proof(ck, x, r, params.l, ctx, self.rng)
            elif k == j and b == "extra-bit":
                proofs[k] = extra_bit_proof(ck, x, r, params.l, ctx, self.rng)
            elif k == j and b == "recombination":
                proofs[k] = mismatched_range_proof(ck, x, r, params.l, ctx, self.rng, (x + 1) % (params.m + 1))
            else:
                proofs[k] = P.range_prove(ck, x, r, params.l, ctx, self.rng)
        if b == "mismatch":
            delta = int(self.opts.get("delta", 1))
            ciphers[j] = psa_enc(params, setup.oracle, inv.s, P.tag(j), inv.amounts[j] + delta)
        elif b in ("fresh-key", "fresh-key-pinned"):
            fresh = self.rng.randrange(params.exp_modulus)
            start = 0 if b == "fresh-key" else 1
            for k in range(start, setup.lam + 1):
                ciphers[k] = psa_enc(params, setup.oracle, fresh, P.tag(k), inv.amounts[k])
        elif b == "wrong-tags":
            wrong = self.opts.get("tag", f"t_bogus_{j}")
            ciphers[j] = PsaCiphertext(psa_enc(params, setup.oracle, inv.s, wrong, inv.amounts[j]).c, P.tag(j))
        c, d = inv.pay_claim()
        if b == "inflate-pay":
            delta = int(self.opts.get("delta", 1))
            if self.opts.get("field", "C") == "D":
                d += delta
            else:
                c += delta
        return {"ciphers": ciphers, "ctildes": ctildes, "coms": coms, "proofs": proofs, "C": c, "D": d}

    def return_claim(self, alphas: dict[int, int]) -> tuple[int, int] | None:
        if self.behaviour == "silent":
            return None
        e, f = self.inv.return_claim(alphas)
        if self.behaviour == "inflate-return":
            delta = int(self.opts.get("delta", 1))
            if self.opts.get("field", "E") == "F":
                f += delta
            else:
                e += delta
        return e, f


def _transfer_proof_or_forgery(
    setup: P.SystemSetup, inv: P.Investor, peer: int, j: int, delta: int, rho: int, outgoing: bool,
    index: int, members: int, rng: random.Random, recheck: bool,
) -> P.TransferOffer:
    try:
        return P.transfer_offer(setup, inv, peer, j, delta, rho, outgoing, index, members, rng, recheck)
    except RangeRecheckFailed:
        # a short seller cannot prove a non-negative holding and tries its luck
        sign = -1 if outgoing else 1
        x = inv.amounts[j] + sign * delta
        r = inv.randomness[j] + sign * rho
        bits = P.recheck_bits(setup.params, members)
        proof = forged_range_proof(setup.commit_key, x, r, bits, P.transfer_context(setup, index, inv.id, j), rng)
        sender, receiver = (inv.id, peer) if outgoing else (peer, inv.id)
        return P.TransferOffer(sender, receiver, j, commit(setup.commit_key, delta, rho), proof)


def _setup_record(setup: P.SystemSetup, cfg: ScenarioConfig) -> dict:
    return {
        "params": setup.params.to_json(),
        "programmed": setup.oracle.programmed_json(),
        "options": {"range_recheck_on_transfer": cfg.range_recheck_on_transfer},
    }


@dataclass
class RoundRun:
    """Everything a finished simulation holds, including the parties' private state."""

    setup: P.SystemSetup
    admin: P.Administrator
    drivers: dict[int, InvestorDriver]
    inputs: dict[int, dict[int, int]]
    transcript: Transcript
    verdict: Verdict


def run_scenario(cfg: ScenarioConfig) -> tuple[Transcript, Verdict]:
    run = play_round(cfg)
    return run.transcript, run.verdict


def play_round(cfg: ScenarioConfig) -> RoundRun:
    cfg.validate()
    params = scenario_params(cfg)
    if cfg.n != params.n or cfg.lam != params.lam:
        raise ParameterConflict("scenario and parameter sizes differ")
    seed = cfg.seed
    members = list(range(1, cfg.n + 1))
    rngs = {i: fork_rng(seed, f"investor/{i}") for i in members}
    setup, keys, tkeys = P.die_set(params, fork_rng(seed, "admin"), rngs)
    bus = MessageBus()

    bus.send("setup", "admin", "all", _setup_record(setup, cfg))
    bus.send("setup", "admin", "admin", {"betas": [str(b) for b in setup.betas]})
    for family, net in (("s", keys), ("s~", tkeys)):
        for i in members:
            for i2 in members:
                if i != i2:
                    bus.send("keygen", i, i2, {"family": family, "share": "sealed"})
        for i2 in members:
            bus.send("keygen", i2, "admin", {"family": family, "column_sum": str(net.column_sums[i2])})
    for family, net in (("s", keys), ("s~", tkeys)):
        for i2 in members:
            for i in members:
                bus.send("board", i2, "board", {"family": family, "row": str(i), "T": str(net.board.entries[(i, i2)].c)})

    admin = P.Administrator.from_networks(setup, keys, tkeys, recheck_transfers=cfg.range_recheck_on_transfer)
    admin.check_setup()

    x = resolve_inputs(cfg, params.m)
    adversaries = {a.investor: a for a in cfg.adversaries}
    drivers = {}
    for i in members:
        inv = P.new_investor(setup, i, keys.key(i), tkeys.key(i), x[i], rngs[i])
        drivers[i] = InvestorDriver(setup, inv, rngs[i], adversaries.get(i))

    # first batch: ciphers, commitments, range proofs and payment claims together
    for i in members:
        sub = drivers[i].submission()
        if sub is None:
            continue
        bus.send("submit", i, "admin", encode_submission(sub))
        admin.receive_submission(i, sub)
    admin.close_payments()
    st = admin.state
    if st.aborted:
        bus.send("decrypt", "admin", "all", {"aborted": st.aborted})
    else:
        bus.send("decrypt", "admin", "all", {"X": _ints(st.totals)})

    if not st.aborted:
        for k, (i, i2, j, delta) in enumerate(cfg.transfers):
            rng = fork_rng(seed, f"transfer/{k}")
            rho = rng.randint(0, params.m)
            bus.send("transfer", i, i2, {"index": str(k), "agreement": "sealed"})
            offers = {}
            for who, peer, outgoing in ((i, i2, True), (i2, i, False)):
                offers[who] = _transfer_proof_or_forgery(
                    setup, drivers[who].inv, peer, j, delta, rho, outgoing, k, len(members), rngs[who],
                    cfg.range_recheck_on_transfer,
                )
            verdict = None
            for who in (i, i2):
                bus.send("transfer", who, "admin", {"index": str(k), "offer": offers[who].to_json()})
                verdict = admin.receive_transfer(k, offers[who], who)
            bus.send("transfer", "admin", [i, i2], {"index": str(k), "accepted": bool(verdict)})
            if verdict:
                P.apply_transfer(drivers[i].inv, j, delta, rho, outgoing=True)
                P.apply_transfer(drivers[i2].inv, j, delta, rho, outgoing=False)

    alphas = resolve_alphas(cfg, params)
    bus.send("alphas", "projects", "all", {"alphas": _ints(alphas)})
    admin.publish_alphas(alphas)
    # second batch: return claims
    if not st.aborted:
        for i in members:
            claim = drivers[i].return_claim(alphas)
            if claim is None:
                continue
            bus.send("returns", i, "admin", {"E": str(claim[0]), "F": str(claim[1])})
            admin.receive_returns(i, *claim)
        admin.close_returns()

    messages = {
        "keygen": bus.count("keygen"),
        "submit": bus.count("submit", recipient="admin"),
        "returns": bus.count("returns", recipient="admin"),
        "transfer": bus.count("transfer"),
    }
    _check_message_shape(cfg, messages, st.aborted is None)
    verdict = Verdict.from_admin(admin, messages)
    bus.send("verdict", "admin", "all", verdict.to_json())
    return RoundRun(setup, admin, drivers, x, Transcript(bus.records), verdict)


def _check_message_shape(cfg: ScenarioConfig, messages: dict[str, int], completed: bool) -> None:
    silent = sum(1 for a in cfg.adversaries if a.behaviour == "silent")
    if messages["keygen"] != 2 * cfg.n * cfg.n:
        raise AssertionError(f"keygen used {messages['keygen']} messages, expected 2 * n^2")
    if messages["submit"] != cfg.n - silent:
        raise AssertionError("each investor sends exactly one payment batch")
    if completed and messages["returns"] != cfg.n - silent:
        raise AssertionError("each investor sends exactly one return batch")


# replay


def parse_transcript(lines: Iterable[str]) -> list[dict]:
    records = []
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(lineno, f"invalid JSON: {exc.msg}") from exc
        if not isinstance(rec, dict) or set(rec) != {"phase", "from", "to", "payload", "sequence"}:
            raise ParseError(lineno, "record needs phase, from, to, payload, sequence")
        if rec["phase"] not in PHASES:
            raise ParseError(lineno, f"unknown phase {rec['phase']!r}")
        if rec["sequence"] != len(records):
            raise ParseError(lineno, f"sequence {rec['sequence']} out of order")
        records.append(rec)
    if not records or records[-1]["phase"] != "verdict":
        raise ParseError(len(records), "transcript truncated: no verdict record")
    return records


def replay(records: list[dict]) -> tuple[P.Administrator, dict]:
    """Rebuild the administrator from a transcript and re-run all of its checks."""
    setup_rec = next(r for r in records if r["phase"] == "setup" and r["to"] == "all")["payload"]
    secret = next(r for r in records if r["phase"] == "setup" and r["to"] == "admin")["payload"]
    params = GroupParams.from_json(setup_rec["params"])
    oracle = OracleTable.from_programmed(params, setup_rec["programmed"])
    from .pedersen import CommitKey

    setup = P.SystemSetup(params, oracle, CommitKey.from_params(params), [int(b) for b in secret["betas"]])
    members = list(range(1, params.n + 1))
    sums = {"s": {}, "s~": {}}
    boards = {"s": Blackboard(P.tag(0)), "s~": Blackboard(P.TILDE_BOARD_TAG)}
    for r in records:
        pl = r["payload"]
        if r["phase"] == "keygen" and r["to"] == "admin":
            sums[pl["family"]][r["from"]] = int(pl["column_sum"])
        elif r["phase"] == "board":
            board = boards[pl["family"]]
            board.entries[(int(pl["row"]), r["from"])] = PsaCiphertext(int(pl["T"]), board.tag)
    admin = P.Administrator(
        setup, members, boards["s"], sums["s"], boards["s~"], sums["s~"],
        recheck_transfers=bool(setup_rec["options"].get("range_recheck_on_transfer")),
    )
    admin.check_setup()
    for r in records:
        if r["phase"] == "submit":
            admin.receive_submission(r["from"], decode_submission(r["payload"]))
    admin.close_payments()
    for r in records:
        if r["phase"] == "transfer" and r["to"] == "admin":
            admin.receive_transfer(int(r["payload"]["index"]), P.TransferOffer.from_json(r["payload"]["offer"]), r["from"])
    alphas_rec = next(r for r in records if r["phase"] == "alphas")
    admin.publish_alphas({int(j): int(a) for j, a in alphas_rec["payload"]["alphas"].items()})
    if not admin.state.aborted:
        for r in records:
            if r["phase"] == "returns":
                admin.receive_returns(r["from"], int(r["payload"]["E"]), int(r["payload"]["F"]))
        admin.close_returns()
    return admin, records[-1]["payload"]


def verify_transcript(source: str | Path | Iterable[str]) -> bool:
    """True iff the replayed round is accepted and matches the recorded verdict."""
    if isinstance(source, (str, Path)):
        lines = Path(source).read_text().splitlines()
    else:
        lines = list(source)
    records = parse_transcript(lines)
    try:
        admin, recorded = replay(records)
    except (InvestcoinError, KeyError, ValueError, StopIteration) as exc:
        log.info("replay failed: %s", exc)
        return False
    recomputed = Verdict.from_admin(admin).to_json()
    if recomputed != recorded:
        log.info("recorded verdict differs from replay")
        return False
    return recomputed["accepted"]


def pinned_cipher_for(setup: P.SystemSetup, keys, i: int) -> PsaCiphertext:
    return pinned_zero_cipher(setup.params, keys.board, i, keys.members)
