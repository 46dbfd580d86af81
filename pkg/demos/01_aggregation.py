"""
Private stream aggregation in a toy group
=========================================

Two investors encrypt amounts under keys that, together with the
administrator's key, sum to zero. Only the total comes out.
"""

import random

from investcoin.group import OracleTable, toy_params
from investcoin.keygen import run_keygen
from investcoin.psa import psa_dec, psa_enc

# p = 23, so the group QR_{529} has order 253
params = toy_params()
oracle = OracleTable(params)
net = run_keygen(params, oracle, 2, random.Random(0))
print("investor keys", net.keys(), "admin key", net.admin_key)
print("keys sum to zero mod pq:", net.zero_sum_holds())

c1 = psa_enc(params, oracle, net.key(1), "t_1", 2)
c2 = psa_enc(params, oracle, net.key(2), "t_1", 3)
print("ciphertexts", c1.c, c2.c)

# the hash parts cancel; 1 + p * 5 remains
print("total:", psa_dec(params, oracle, net.admin_key, "t_1", [c1, c2], bound=6))
