"""Cheating provers for the range test, used by the attack scenarios and tests."""

from __future__ import annotations

import random

from .pedersen import CommitKey, commit
from .rangeproof import RangeProof, prove_bits, range_prove, split_randomness


def non_bit_decomposition(x: int, l: int) -> list[int]:
    """Digits that recombine to ``x`` over l positions; digit 0 absorbs the rest."""
    digits = [0] + [((x % (1 << l)) >> k) & 1 for k in range(1, l)]
    digits[0] = x - sum(d << k for k, d in enumerate(digits))
    return digits


def forged_range_proof(key: CommitKey, x: int, r: int, l: int, context: bytes, rng: random.Random) -> RangeProof:
    """Recombines to commit(x, r) exactly but needs a non-bit digit when x is out of range."""
    digits = non_bit_decomposition(x, l)
    return prove_bits(key, commit(key, x, r), digits, split_randomness(key, r, l, rng), context, rng, check=False)


def extra_bit_proof(key: CommitKey, x: int, r: int, l: int, context: bytes, rng: random.Random) -> RangeProof:
    """Honest proof over l + 1 bits, for an x that needs the extra bit."""
    return range_prove(key, x, r, l + 1, context, rng)


def mismatched_range_proof(
    key: CommitKey, x: int, r: int, l: int, context: bytes, rng: random.Random, other: int
) -> RangeProof:
    """Valid bit proofs for ``other`` presented against commit(x, r)."""
    bits = [(other >> k) & 1 for k in range(l)]
    return prove_bits(key, commit(key, x, r), bits, split_randomness(key, r, l, rng), context, rng)
