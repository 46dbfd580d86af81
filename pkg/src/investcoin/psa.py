"""Private stream aggregation over QR_{p^2}.

Each party encrypts x under tag t as (1 + p*x) * H(t)^s mod p^2. When the keys
of all parties and the aggregator sum to zero mod pq the hash parts cancel in
the product, leaving 1 + p * sum(x) mod p^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import MalformedAggregate, SumOutOfBound
from .group import GroupParams, OracleTable, powmod


@dataclass(frozen=True)
class PsaCiphertext:
    c: int
    tag: str

    def to_json(self) -> dict:
        return {"c": str(self.c), "tag": self.tag}

    @classmethod
    def from_json(cls, d: dict) -> "PsaCiphertext":
        return cls(int(d["c"]), d["tag"])


def encode(params: GroupParams, x: int) -> int:
    return (1 + params.p * x) % params.modulus


def psa_enc(params: GroupParams, oracle: OracleTable, key: int, tag: str, x: int) -> PsaCiphertext:
    mod = params.modulus
    c = encode(params, x) * powmod(oracle(tag), key % params.exp_modulus, mod) % mod
    return PsaCiphertext(c, tag)


def decode(params: GroupParams, v: int, bound: int | None = None) -> int:
    """Signed integer S with v = 1 + p*S mod p^2, |S| < p/2."""
    v %= params.modulus
    if v % params.p != 1 % params.p:
        raise MalformedAggregate(f"aggregate {v} is not 1 mod p")
    s = params.centered((v - 1) // params.p)
    if bound is not None and abs(s) > bound:
        raise SumOutOfBound(f"|{s}| exceeds {bound}")
    return s


def psa_dec(
    params: GroupParams,
    oracle: OracleTable,
    key: int,
    tag: str,
    ciphers: Sequence[PsaCiphertext],
    bound: int,
) -> int:
    if 2 * bound >= params.p:
        raise ValueError("bound must stay below p/2")
    mod = params.modulus
    v = powmod(oracle(tag), key % params.exp_modulus, mod)
    for ct in ciphers:
        if ct.tag != tag:
            raise ValueError(f"cipher for tag {ct.tag!r} passed to aggregate of {tag!r}")
        v = v * ct.c % mod
    return decode(params, v, bound)


def keyset_complement(params: GroupParams, keys: Iterable[int]) -> int:
    return -sum(keys) % params.exp_modulus
