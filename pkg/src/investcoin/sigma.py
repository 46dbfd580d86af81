"""Proof of knowledge of one out of two discrete logarithms.

For a base h and elements R, S the prover shows it knows r with R = h^r or s
with S = h^s without revealing which. The known branch is run as an ordinary
Schnorr proof; the other branch is simulated from a pre-chosen challenge share
and response. The verifier only checks v = v1 + v2 and both Schnorr equations.

Exponents live modulo pq. Challenges are drawn mod pq with 0 mapped to 1.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, fields
from typing import Callable

from .errors import WitnessMismatch
from .group import powmod
from .pedersen import CommitKey

ChallengeFn = Callable[[int, int], int]


@dataclass(frozen=True)
class OrStatement:
    h: int
    R: int
    S: int


@dataclass(frozen=True)
class OrProof:
    a1: int
    a2: int
    v1: int
    v2: int
    w1: int
    w2: int

    def to_json(self) -> list[str]:
        return [str(getattr(self, f.name)) for f in fields(self)]

    @classmethod
    def from_json(cls, values: list[str]) -> "OrProof":
        if len(values) != 6:
            raise ValueError("an OR proof has six fields")
        return cls(*(int(v) for v in values))


def length_prefixed(*parts: bytes) -> bytes:
    return b"".join(len(x).to_bytes(4, "big") + x for x in parts)


def int_bytes(v: int) -> bytes:
    return str(v).encode()


def key_digest(key: CommitKey) -> bytes:
    return hashlib.sha256(length_prefixed(b"investcoin/ck", *map(int_bytes, (key.h1, key.h2, key.modulus)))).digest()


def hash_to_challenge(order: int, data: bytes) -> int:
    nbytes = (order.bit_length() + 64 + 7) // 8
    out = b""
    counter = 0
    while len(out) < nbytes:
        out += hashlib.sha256(counter.to_bytes(4, "big") + data).digest()
        counter += 1
    v = int.from_bytes(out[:nbytes], "big") % order
    return v or 1


def fs_challenge(key: CommitKey, stmt: OrStatement, a1: int, a2: int, context: bytes) -> int:
    data = length_prefixed(
        b"investcoin/or",
        key_digest(key),
        *map(int_bytes, (stmt.h, stmt.R, stmt.S, a1, a2)),
        context,
    )
    return hash_to_challenge(key.order, data)


def _nonzero(rng: random.Random, order: int) -> int:
    return rng.randrange(1, order)


class OrProver:
    """Interactive prover: ``commit`` then ``respond`` to a challenge.

    ``respond`` may be called more than once on the same commitment, which is
    exactly the rewinding the special-soundness extractor needs.
    """

    def __init__(
        self,
        key: CommitKey,
        stmt: OrStatement,
        witness: int,
        position: int,
        rng: random.Random,
        check: bool = True,
    ) -> None:
        if position not in (1, 2):
            raise ValueError("position must be 1 or 2")
        target = stmt.R if position == 1 else stmt.S
        if check and powmod(stmt.h, witness % key.order, key.modulus) != target % key.modulus:
            raise WitnessMismatch(f"witness does not open branch {position}")
        self.key = key
        self.stmt = stmt
        self.witness = witness
        self.position = position
        n = key.order
        self._z = _nonzero(rng, n)
        self._v_sim = _nonzero(rng, n)
        self._w_sim = _nonzero(rng, n)
        mod = key.modulus
        other = stmt.S if position == 1 else stmt.R
        a_real = powmod(stmt.h, self._z, mod)
        a_sim = powmod(stmt.h, self._w_sim, mod) * powmod(other, -self._v_sim % n, mod) % mod
        self.a1, self.a2 = (a_real, a_sim) if position == 1 else (a_sim, a_real)

    def commit(self) -> tuple[int, int]:
        return self.a1, self.a2

    def respond(self, v: int) -> OrProof:
        n = self.key.order
        v_real = (v - self._v_sim) % n
        w_real = (self._z + v_real * self.witness) % n
        if self.position == 1:
            return OrProof(self.a1, self.a2, v_real, self._v_sim, w_real, self._w_sim)
        return OrProof(self.a1, self.a2, self._v_sim, v_real, self._w_sim, w_real)


def or_prove(
    key: CommitKey,
    stmt: OrStatement,
    witness: int,
    position: int,
    rng: random.Random,
    context: bytes = b"",
    challenge: int | ChallengeFn | None = None,
) -> OrProof:
    """Non-interactive (Fiat-Shamir over ``context``) unless ``challenge`` is given.

    ``challenge`` may be a fixed verifier challenge or a callable receiving
    (a1, a2).
    """
    prover = OrProver(key, stmt, witness, position, rng)
    a1, a2 = prover.commit()
    if challenge is None:
        v = fs_challenge(key, stmt, a1, a2, context)
    elif callable(challenge):
        v = challenge(a1, a2)
    else:
        v = challenge
    return prover.respond(v)


def or_verify(
    key: CommitKey,
    stmt: OrStatement,
    proof: OrProof,
    context: bytes = b"",
    challenge: int | None = None,
) -> bool:
    n, mod = key.order, key.modulus
    if challenge is None:
        challenge = fs_challenge(key, stmt, proof.a1, proof.a2, context)
    if (proof.v1 + proof.v2 - challenge) % n:
        return False
    lhs1 = powmod(stmt.h, proof.w1 % n, mod)
    rhs1 = proof.a1 * powmod(stmt.R, proof.v1 % n, mod) % mod
    if lhs1 != rhs1:
        return False
    lhs2 = powmod(stmt.h, proof.w2 % n, mod)
    rhs2 = proof.a2 * powmod(stmt.S, proof.v2 % n, mod) % mod
    return lhs2 == rhs2


def simulate(key: CommitKey, stmt: OrStatement, rng: random.Random) -> tuple[OrProof, int]:
    """Accepting interactive transcript without any witness: (proof, challenge)."""
    n, mod = key.order, key.modulus
    v1, v2, w1, w2 = (_nonzero(rng, n) for _ in range(4))
    a1 = powmod(stmt.h, w1, mod) * powmod(stmt.R, -v1 % n, mod) % mod
    a2 = powmod(stmt.h, w2, mod) * powmod(stmt.S, -v2 % n, mod) % mod
    return OrProof(a1, a2, v1, v2, w1, w2), (v1 + v2) % n


def extract(key: CommitKey, first: OrProof, second: OrProof) -> tuple[int, int]:
    """Witness from two accepting transcripts sharing (a1, a2): (position, witness)."""
    if (first.a1, first.a2) != (second.a1, second.a2):
        raise ValueError("transcripts do not share the commitment")
    n = key.order
    if (first.v1 - second.v1) % n:
        return 1, (first.w1 - second.w1) * powmod(first.v1 - second.v1, -1, n) % n
    if (first.v2 - second.v2) % n:
        return 2, (first.w2 - second.w2) * powmod(first.v2 - second.v2, -1, n) % n
    raise ValueError("transcripts share both challenge shares")
