"""Non-interactive range test for a committed amount in [0, 2^l - 1].

The prover commits to each bit of x with randomness r_k such that
sum r_k 2^k = r (mod pq), so the bit commitments recombine to the target
commitment. For every bit it proves knowledge of log_{h2} of either com_k
(bit 0) or com_k / h1 (bit 1). All per-bit challenges come from one hash over
the target, the whole bit-commitment vector, every announcement and the
context, so bit proofs cannot be mixed across proofs or contexts.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from .errors import OutOfRange
from .group import powmod
from .pedersen import CommitKey, commit
from .sigma import OrProof, OrProver, OrStatement, int_bytes, length_prefixed, hash_to_challenge, key_digest, or_verify


@dataclass(frozen=True)
class RangeProof:
    bit_coms: tuple[int, ...]
    bit_proofs: tuple[OrProof, ...]

    def to_json(self) -> dict:
        return {
            "l": str(len(self.bit_coms)),
            "bits": [[str(c), p.to_json()] for c, p in zip(self.bit_coms, self.bit_proofs)],
        }

    @classmethod
    def from_json(cls, d: dict) -> "RangeProof":
        bits = d["bits"]
        if int(d["l"]) != len(bits):
            raise ValueError("bit count does not match l")
        return cls(tuple(int(c) for c, _ in bits), tuple(OrProof.from_json(p) for _, p in bits))


def bit_statement(key: CommitKey, bit_com: int) -> OrStatement:
    return OrStatement(key.h2, bit_com, bit_com * powmod(key.h1, -1, key.modulus) % key.modulus)


def split_randomness(key: CommitKey, r: int, l: int, rng: random.Random) -> list[int]:
    n = key.order
    rs = [rng.randrange(n) for _ in range(l - 1)]
    partial = sum(rk << k for k, rk in enumerate(rs))
    rs.append((r - partial) * powmod(1 << (l - 1), -1, n) % n)
    return rs


def bit_challenges(
    key: CommitKey, com: int, bit_coms: list[int], announcements: list[tuple[int, int]], context: bytes
) -> list[int]:
    parts = [b"investcoin/range", key_digest(key), int_bytes(com), int_bytes(len(bit_coms))]
    for c, (a1, a2) in zip(bit_coms, announcements):
        parts += [int_bytes(c), int_bytes(a1), int_bytes(a2)]
    master = hashlib.sha256(length_prefixed(*parts, context)).digest()
    return [hash_to_challenge(key.order, length_prefixed(master, k.to_bytes(4, "big"))) for k in range(len(bit_coms))]


def prove_bits(
    key: CommitKey,
    com: int,
    bits: list[int],
    bit_rands: list[int],
    context: bytes,
    rng: random.Random,
    check: bool = True,
) -> RangeProof:
    """Bit commitments plus OR proofs for the given decomposition.

    With ``check=False`` the witnesses are not validated, which lets the
    adversarial drivers try to prove decompositions that are not bits.
    """
    bit_coms = [commit(key, b, rb) for b, rb in zip(bits, bit_rands)]
    provers = []
    for b, rb, c in zip(bits, bit_rands, bit_coms):
        position = 2 if b == 1 else 1
        provers.append(OrProver(key, bit_statement(key, c), rb, position, rng, check=check))
    announcements = [pr.commit() for pr in provers]
    challenges = bit_challenges(key, com, bit_coms, announcements, context)
    proofs = tuple(pr.respond(v) for pr, v in zip(provers, challenges))
    return RangeProof(tuple(bit_coms), proofs)


def range_prove(key: CommitKey, x: int, r: int, l: int, context: bytes, rng: random.Random) -> RangeProof:
    if not 0 <= x <= (1 << l) - 1:
        raise OutOfRange(f"{x} not in [0, 2^{l} - 1]")
    bits = [(x >> k) & 1 for k in range(l)]
    return prove_bits(key, commit(key, x, r), bits, split_randomness(key, r, l, rng), context, rng)


def range_check(key: CommitKey, com: int, proof: RangeProof, l: int, context: bytes) -> str | None:
    """None if the proof is accepted, otherwise a short failure reason."""
    if len(proof.bit_coms) != l or len(proof.bit_proofs) != l:
        return "bit-count"
    mod = key.modulus
    acc = 1
    for k, c in enumerate(proof.bit_coms):
        acc = acc * powmod(c, 1 << k, mod) % mod
    if acc != com % mod:
        return "recombination"
    announcements = [(p.a1, p.a2) for p in proof.bit_proofs]
    challenges = bit_challenges(key, com, list(proof.bit_coms), announcements, context)
    for k, (c, p, v) in enumerate(zip(proof.bit_coms, proof.bit_proofs, challenges)):
        if not or_verify(key, bit_statement(key, c), p, challenge=v):
            return f"bit-proof-{k}"
    return None


def range_verify(key: CommitKey, com: int, proof: RangeProof, l: int, context: bytes) -> bool:
    return range_check(key, com, proof, l, context) is None
