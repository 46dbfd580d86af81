"""
Cheating investors
==================

Run the same round once per misbehaviour and print what the administrator
notices first.
"""

from investcoin.harness import BEHAVIOURS, Adversary, ScenarioConfig, run_scenario

for behaviour in BEHAVIOURS[1:]:
    cfg = ScenarioConfig(n=3, lam=4, seed=b"cheat", adversaries=[Adversary(2, behaviour)])
    _, v = run_scenario(cfg)
    first = v.events[0]
    print(f"{behaviour:17} accepted={v.accepted!s:5} {first['phase']}: {first['reason'][:70]}")
