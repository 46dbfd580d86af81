"""
A whole investment round
========================

Four investors, three real projects, random amounts and return factors.
The administrator sees per-project totals and checks every claim.
"""

from investcoin.harness import ScenarioConfig, oracle_round, play_round

cfg = ScenarioConfig(q_bits=64, l=16, n=4, lam=5, seed=b"demo round")
run = play_round(cfg)
v = run.verdict

print("accepted:", v.accepted)
print("project totals X_j:", v.totals)
print("plain column sums: ", oracle_round(cfg)["X"])
print("payment bits:", v.b_p, "return bits:", v.b_r)
print("ledger:", v.investor_ledger)
print("messages:", v.messages)

# the transcript is JSON lines, integers as decimal strings
lines = run.transcript.lines()
print(len(lines), "records; first:", lines[0][:100], "...")
