"""Pedersen commitments com = h1^x * h2^r in the order-pq subgroup mod p^2."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .group import GroupParams, powmod


@dataclass(frozen=True)
class CommitKey:
    h1: int
    h2: int
    modulus: int
    order: int

    @classmethod
    def from_params(cls, params: GroupParams) -> "CommitKey":
        return cls(params.h1, params.h2, params.modulus, params.exp_modulus)


@dataclass(frozen=True)
class Opening:
    x: int
    r: int


def commit(key: CommitKey, x: int, r: int) -> int:
    return powmod(key.h1, x % key.order, key.modulus) * powmod(key.h2, r % key.order, key.modulus) % key.modulus


def unv(key: CommitKey, com: int, x: int, r: int) -> bool:
    return commit(key, x, r) == com % key.modulus


def combine(key: CommitKey, coms: Iterable[tuple[int, int]]) -> int:
    """prod com_j^{e_j}; opens to the e-weighted sums of the openings."""
    acc = 1
    for com, e in coms:
        acc = acc * powmod(com, e % key.order, key.modulus) % key.modulus
    return acc


def random_randomness(key: CommitKey, rng: random.Random, bound: int, full_range: bool = False) -> int:
    """Commitment randomness from [0, bound], or uniform mod pq when ``full_range``."""
    if full_range:
        return rng.randrange(key.order)
    return rng.randint(0, bound)
