import random

import pytest

from investcoin.adversary import extra_bit_proof, forged_range_proof, mismatched_range_proof, non_bit_decomposition
from investcoin.errors import OutOfRange
from investcoin.pedersen import commit
from investcoin.rangeproof import RangeProof, range_check, range_prove, range_verify, split_randomness


def test_completeness_exhaustive(small_key, rng):
    for x in range(16):
        r = rng.randrange(small_key.order)
        proof = range_prove(small_key, x, r, 4, b"c", rng)
        assert range_verify(small_key, commit(small_key, x, r), proof, 4, b"c")


def test_out_of_range_refused(small_key, rng):
    for x in (-1, 16):
        with pytest.raises(OutOfRange):
            range_prove(small_key, x, 3, 4, b"", rng)


def test_split_recombines(small_key, rng):
    r = rng.randrange(small_key.order)
    rs = split_randomness(small_key, r, 6, rng)
    assert sum(rk << k for k, rk in enumerate(rs)) % small_key.order == r


def test_non_bit_decomposition():
    for x in (-1, 5, 16, 1000):
        digits = non_bit_decomposition(x, 4)
        assert sum(d << k for k, d in enumerate(digits)) == x


def test_context_binding(small_key, rng):
    proof = range_prove(small_key, 9, 4, 4, b"a", rng)
    assert range_check(small_key, commit(small_key, 9, 4), proof, 4, b"b") is not None


def test_adversaries_rejected(small_key, rng):
    n = small_key.order
    r = rng.randrange(n)
    neg = forged_range_proof(small_key, n - 1, r, 4, b"", rng)
    assert range_check(small_key, commit(small_key, n - 1, r), neg, 4, b"").startswith("bit-proof")
    extra = extra_bit_proof(small_key, 16, r, 4, b"", rng)
    assert range_check(small_key, commit(small_key, 16, r), extra, 4, b"") == "bit-count"
    mis = mismatched_range_proof(small_key, 3, r, 4, b"", rng, other=4)
    assert range_check(small_key, commit(small_key, 3, r), mis, 4, b"") == "recombination"


def test_json_roundtrip(small_key, rng):
    proof = range_prove(small_key, 7, 1, 4, b"", rng)
    assert RangeProof.from_json(proof.to_json()) == proof
