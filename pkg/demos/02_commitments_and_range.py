"""
Commitments and the range test
==============================

Commit to an amount, prove it fits in l bits, then watch the three cheating
strategies fail.
"""

import random

from investcoin.adversary import extra_bit_proof, forged_range_proof, mismatched_range_proof
from investcoin.group import generate_params
from investcoin.pedersen import CommitKey, combine, commit, unv
from investcoin.rangeproof import range_check, range_prove

params = generate_params(64, 4, 3, 4, b"demo")
key = CommitKey.from_params(params)
rng = random.Random(1)
print("q =", params.q)

com = commit(key, 11, 42)
print("opens to (11, 42):", unv(key, com, 11, 42))

# commitments multiply, openings add
two = combine(key, [(com, 1), (commit(key, 3, 8), 2)])
print("com(11,42) * com(3,8)^2 opens to (17, 58):", unv(key, two, 17, 58))

proof = range_prove(key, 11, 42, 4, b"demo", rng)
print("honest proof:", range_check(key, com, proof, 4, b"demo") or "accepted")

n = key.order
attempts = {
    "extra bit (x = 20)": (20, extra_bit_proof(key, 20, 5, 4, b"demo", rng)),
    "negative (x = pq - 1)": (n - 1, forged_range_proof(key, n - 1, 5, 4, b"demo", rng)),
    "recombination (bits of 6)": (9, mismatched_range_proof(key, 9, 5, 4, b"demo", rng, 6)),
}
for name, (x, bad) in attempts.items():
    print(f"{name}: rejected by {range_check(key, commit(key, x, 5), bad, 4, b'demo')}")
