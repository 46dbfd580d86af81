import json

import pytest

from investcoin.errors import ParameterConflict, ParseError
from investcoin.harness import (
    BEHAVIOURS,
    Adversary,
    ScenarioConfig,
    fork_rng,
    oracle_round,
    run_scenario,
    verify_transcript,
)


def small_cfg(**kw):
    base = dict(q_bits=64, l=16, n=3, lam=4, seed=b"h")
    base.update(kw)
    return ScenarioConfig(**base)


def test_fork_rng_independent():
    assert fork_rng(b"s", "a").random() == fork_rng(b"s", "a").random()
    assert fork_rng(b"s", "a").random() != fork_rng(b"s", "b").random()


def test_zero_investments():
    cfg = small_cfg(investments=[[0, 0]] * 3)
    _, v = run_scenario(cfg)
    assert v.accepted and set(v.totals.values()) == {0}
    assert all(x == 0 for x in v.investor_ledger.values())


def test_identity_like_oracle():
    cfg = small_cfg(n=2, investments=[[1, 0], [0, 1]])
    assert oracle_round(cfg)["X"] == {0: 0, 1: 1, 2: 1, 3: 0, 4: 0}


def test_random_toy_matches_oracle():
    for seed in range(10):
        cfg = ScenarioConfig(toy=True, n=2, lam=3, l=2, seed=bytes([seed]))
        _, v = run_scenario(cfg)
        assert v.accepted and v.totals == oracle_round(cfg)["X"]


@pytest.mark.parametrize("behaviour", [b for b in BEHAVIOURS if b != "honest"])
def test_every_behaviour_detected(behaviour):
    _, v = run_scenario(small_cfg(adversaries=[Adversary(2, behaviour)]))
    assert not v.accepted and v.events


def test_mismatch_reports_investor():
    _, v = run_scenario(small_cfg(adversaries=[Adversary(3, "mismatch", {"delta": 1})]))
    assert v.consistent[3] is False and v.events[0]["investor"] == "3"


def test_message_counts():
    _, v = run_scenario(small_cfg())
    assert v.messages["keygen"] == 2 * 3 * 3
    assert v.messages["submit"] == 3 and v.messages["returns"] == 3


def test_config_validation():
    with pytest.raises(ValueError):
        small_cfg(adversaries=[Adversary(1, "mismatch"), Adversary(1, "silent")]).validate()
    with pytest.raises(ValueError):
        small_cfg(adversaries=[Adversary(9, "mismatch")]).validate()
    with pytest.raises(ValueError):
        small_cfg(transfers=[(1, 2, 3, 1)]).validate()
    with pytest.raises(ParameterConflict):
        small_cfg(full_range_commit_randomness=True).validate()


def test_config_json_roundtrip():
    cfg = small_cfg(adversaries=[Adversary(1, "inflate-pay", {"field": "D"})], transfers=[(1, 2, 1, 5)])
    again = ScenarioConfig.from_json(json.loads(json.dumps(cfg.to_json())))
    assert again == cfg


def test_transcript_replay_and_mutation():
    transcript, v = run_scenario(small_cfg())
    lines = transcript.lines()
    assert verify_transcript(lines)
    k = next(i for i, l in enumerate(lines) if '"phase":"submit"' in l)
    rec = json.loads(lines[k])
    com = rec["payload"]["coms"]["1"]
    rec["payload"]["coms"]["1"] = com[:-1] + str((int(com[-1]) + 1) % 10)
    bad = lines[:k] + [json.dumps(rec, sort_keys=True, separators=(",", ":"))] + lines[k + 1 :]
    assert not verify_transcript(bad)


def test_truncated_and_garbled():
    lines = run_scenario(small_cfg())[0].lines()
    with pytest.raises(ParseError):
        verify_transcript(lines[:-1])
    with pytest.raises(ParseError) as info:
        verify_transcript(lines[:3] + ["{not json"] + lines[4:])
    assert info.value.line == 4


def test_integers_are_strings():
    cfg = small_cfg(adversaries=[Adversary(1, "mismatch")], transfers=[(2, 3, 1, 1)])
    lines = run_scenario(cfg)[0].lines()

    def walk(obj):
        if isinstance(obj, dict):
            return all(walk(v) for v in obj.values())
        if isinstance(obj, list):
            return all(walk(v) for v in obj)
        return not isinstance(obj, int) or isinstance(obj, bool)

    for line in lines:
        rec = json.loads(line)
        assert walk(rec["payload"])
