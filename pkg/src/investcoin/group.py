"""Arithmetic in the quadratic residues modulo p^2 for a safe prime p = 2q + 1.

QR_{p^2} is cyclic of order pq. Group elements and exponents are plain Python
integers; exponents are reduced modulo pq and elements live in [1, p^2 - 1].

The hash-to-group oracle expands a tag with SHA-256 in counter mode, reduces
modulo p^2 and squares, so every hashed element is a square. Selected tags can
be *programmed* to fixed values, which the protocol setup uses to plant the
verification relation between the project tags.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, field
from typing import Iterable

import gmpy2
from sympy import isprime

from .errors import ParameterConflict, SearchExhausted

MAX_CANDIDATES = 200_000


def powmod(g: int, e: int, modulus: int) -> int:
    """Modular exponentiation as a plain int; a negative e inverts first."""
    return int(gmpy2.powmod(g, e, modulus))


@dataclass(frozen=True)
class GroupParams:
    q: int
    p: int
    l: int
    n: int
    lam: int
    q_prime: int
    h1: int = 0
    h2: int = 0
    seed: bytes = b""

    @property
    def m(self) -> int:
        return (1 << self.l) - 1

    @property
    def modulus(self) -> int:
        return self.p * self.p

    @property
    def exp_modulus(self) -> int:
        return self.p * self.q

    def reduce(self, e: int) -> int:
        return e % self.exp_modulus

    def centered(self, v: int) -> int:
        """Lift a residue mod p into (-p/2, p/2)."""
        v %= self.p
        return v - self.p if v > self.p // 2 else v

    def digest(self) -> bytes:
        return hashlib.sha256(canonical_json(self.to_json()).encode()).digest()

    def to_json(self) -> dict:
        return {
            "q": str(self.q),
            "p": str(self.p),
            "m": str(self.m),
            "l": str(self.l),
            "n": str(self.n),
            "lambda": str(self.lam),
            "q_prime": str(self.q_prime),
            "h1": str(self.h1),
            "h2": str(self.h2),
            "seed": self.seed.hex(),
        }

    @classmethod
    def from_json(cls, d: dict) -> "GroupParams":
        params = cls(
            q=int(d["q"]),
            p=int(d["p"]),
            l=int(d["l"]),
            n=int(d["n"]),
            lam=int(d["lambda"]),
            q_prime=int(d["q_prime"]),
            h1=int(d["h1"]),
            h2=int(d["h2"]),
            seed=bytes.fromhex(d["seed"]),
        )
        if "m" in d and int(d["m"]) != params.m:
            raise ValueError("m does not match l")
        return params


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def default_q_prime(q: int, m: int, lam: int) -> int:
    # largest integer strictly below q / (m * lam)
    return (q - 1) // (m * lam)


def _expand(domain: bytes, data: bytes, nbits: int) -> int:
    out = b""
    counter = 0
    while len(out) * 8 < nbits:
        out += hashlib.sha256(domain + counter.to_bytes(4, "big") + data).digest()
        counter += 1
    return int.from_bytes(out, "big") >> (len(out) * 8 - nbits)


def hash_to_qr(p: int, tag: str, domain: bytes = b"investcoin/H") -> int:
    """Deterministic square modulo p^2 derived from ``tag``; never 0 mod p."""
    modulus = p * p
    nbits = modulus.bit_length() + 64
    prefix = domain + b"|" + str(p).encode() + b"|"
    attempt = 0
    while True:
        data = prefix + tag.encode() + b"|" + str(attempt).encode()
        r = _expand(b"", data, nbits) % modulus
        if r % p:
            return r * r % modulus
        attempt += 1


def has_full_order(g: int, p: int, q: int) -> bool:
    modulus = p * p
    return powmod(g, p, modulus) != 1 and powmod(g, q, modulus) != 1 and powmod(g, p * q, modulus) == 1


def _generator(p: int, q: int, label: str) -> int:
    counter = 0
    while True:
        tag = label if counter == 0 else f"{label}/{counter}"
        g = hash_to_qr(p, tag, domain=b"investcoin/gen")
        if has_full_order(g, p, q):
            return g
        counter += 1


def generate_params(
    q_bits: int,
    l: int,
    n: int,
    lam: int,
    seed: bytes = b"",
    max_candidates: int = MAX_CANDIDATES,
) -> GroupParams:
    """Search for a safe prime p = 2q + 1 with q of exactly ``q_bits`` bits and q > m*n.

    Also derives the commitment generators h1, h2 of order pq from reserved
    hash tags, so nobody knows log_{h1}(h2).
    """
    if q_bits < 4:
        raise ValueError("q_bits must be at least 4")
    if l < 1 or n < 1:
        raise ValueError("l and n must be positive")
    if lam < 3:
        raise ValueError("lambda must be at least 3 (two dummy projects)")
    m = (1 << l) - 1
    lo = max(1 << (q_bits - 1), m * n + 1)
    hi = (1 << q_bits) - 1
    if lo > hi:
        raise ParameterConflict(f"q > m*n = {m * n} impossible with {q_bits}-bit q")

    rng = random.Random(hashlib.sha256(b"investcoin/params|" + seed).digest())
    q = None
    for _ in range(max_candidates):
        cand = rng.randint(lo, hi) | 1
        if cand > hi:
            continue
        if isprime(cand) and isprime(2 * cand + 1):
            q = cand
            break
    if q is None:
        raise SearchExhausted(f"no safe prime found in {max_candidates} candidates")

    q_prime = default_q_prime(q, m, lam)
    if q_prime < 1:
        raise ParameterConflict(f"q' < q/(m*lambda) leaves no room at q = {q}")
    p = 2 * q + 1
    return GroupParams(
        q=q,
        p=p,
        l=l,
        n=n,
        lam=lam,
        q_prime=q_prime,
        h1=_generator(p, q, "gen/h1"),
        h2=_generator(p, q, "gen/h2"),
        seed=seed,
    )


def toy_params(n: int = 2, lam: int = 3, l: int = 2) -> GroupParams:
    """The p = 23 preset used in tests and by ``--toy``."""
    q, p = 11, 23
    m = (1 << l) - 1
    if q <= m * n:
        raise ParameterConflict(f"toy group needs m*n < 11, got {m * n}")
    q_prime = default_q_prime(q, m, lam)
    if q_prime < 1:
        raise ParameterConflict("toy group too small for this lambda")
    return GroupParams(
        q=q, p=p, l=l, n=n, lam=lam, q_prime=q_prime,
        h1=_generator(p, q, "gen/h1"), h2=_generator(p, q, "gen/h2"), seed=b"toy",
    )


def power(params: GroupParams, g: int, e: int) -> int:
    """g^e mod p^2; a negative e raises the inverse to |e|."""
    return powmod(g, e % params.exp_modulus, params.modulus)


def product(params: GroupParams, terms: Iterable[tuple[int, int]]) -> int:
    acc = 1
    mod = params.modulus
    for g, e in terms:
        acc = acc * powmod(g, e % params.exp_modulus, mod) % mod
    return acc


def inverse(params: GroupParams, g: int) -> int:
    return powmod(g, -1, params.modulus)


def in_subgroup(params: GroupParams, g: int) -> bool:
    return g % params.p != 0 and powmod(g, params.exp_modulus, params.modulus) == 1


@dataclass
class OracleTable:
    """Random-oracle view of H: hashed on demand, with optional programmed tags."""

    params: GroupParams
    entries: dict[str, int] = field(default_factory=dict)
    programmed: set[str] = field(default_factory=set)

    def __call__(self, tag: str) -> int:
        return hash_to_group(self, tag)

    def program(self, tag: str, value: int) -> None:
        if tag in self.entries and tag not in self.programmed:
            raise ValueError(f"tag {tag!r} already answered by the hash")
        self.entries[tag] = value % self.params.modulus
        self.programmed.add(tag)

    def programmed_json(self) -> dict[str, str]:
        return {t: str(self.entries[t]) for t in sorted(self.programmed)}

    @classmethod
    def from_programmed(cls, params: GroupParams, d: dict[str, str]) -> "OracleTable":
        table = cls(params)
        for tag, value in d.items():
            table.program(tag, int(value))
        return table


def hash_to_group(oracle: OracleTable, tag: str) -> int:
    if not tag:
        raise ValueError("empty tag")
    hit = oracle.entries.get(tag)
    if hit is None:
        hit = hash_to_qr(oracle.params.p, tag)
        oracle.entries[tag] = hit
    return hit


def random_exponent(params: GroupParams, rng: random.Random) -> int:
    return rng.randrange(params.exp_modulus)

