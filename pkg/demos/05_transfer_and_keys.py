"""
Transfers and key updates
=========================

Investor 1 sells part of a stake to investor 2 between payment and returns.
Then the key network loses two members and gains one.
"""

import random

from investcoin.group import OracleTable, generate_params
from investcoin.harness import ScenarioConfig, play_round, resolve_inputs, scenario_params
from investcoin.keygen import UPDATE_MESSAGE_FACTOR, run_keygen

cfg = ScenarioConfig(n=3, lam=4, seed=b"sale", range_recheck_on_transfer=True)
x = resolve_inputs(cfg, scenario_params(cfg).m)
cfg.transfers = [(1, 2, 1, x[1][1] // 3)]
run = play_round(cfg)
print("holdings before:", x[1][1], x[2][1])
print("after:", run.drivers[1].inv.amounts[1], run.drivers[2].inv.amounts[1])
print("accepted:", run.verdict.accepted, "conservation:", run.admin.conservation_holds())

# a short sale: the range re-test catches it
cfg.transfers = [(1, 2, 1, x[1][1] + 1)]
print("short sale events:", play_round(cfg).verdict.events)

params = generate_params(64, 16, 8, 5, b"keys")
net = run_keygen(params, OracleTable(params), 6, random.Random(2))
print("keygen messages:", net.message_count)
print("leave {2, 5}:", net.leave({2, 5}, random.Random(3)), "messages")
print("join 7:", net.join(7, random.Random(4)), "messages, bound", UPDATE_MESSAGE_FACTOR, "* n")
print("zero sum still holds:", net.zero_sum_holds())
