import random

import pytest

from investcoin.errors import WitnessMismatch
from investcoin.group import powmod
from investcoin.sigma import OrProof, OrProver, OrStatement, extract, fs_challenge, or_prove, or_verify, simulate


def _statement(key, rng, position):
    w = rng.randrange(key.order)
    known = powmod(key.h2, w, key.modulus)
    other = powmod(key.h1, rng.randrange(1, key.order), key.modulus)
    R, S = (known, other) if position == 1 else (other, known)
    return OrStatement(key.h2, R, S), w


@pytest.mark.parametrize("position", [1, 2])
def test_completeness(small_key, rng, position):
    for _ in range(20):
        stmt, w = _statement(small_key, rng, position)
        proof = or_prove(small_key, stmt, w, position, rng, context=b"ctx")
        assert or_verify(small_key, stmt, proof, context=b"ctx")


def test_context_binds(small_key, rng):
    stmt, w = _statement(small_key, rng, 1)
    proof = or_prove(small_key, stmt, w, 1, rng, context=b"a")
    assert not or_verify(small_key, stmt, proof, context=b"b")


def test_interactive_challenge(small_key, rng):
    stmt, w = _statement(small_key, rng, 2)
    proof = or_prove(small_key, stmt, w, 2, rng, challenge=77)
    assert or_verify(small_key, stmt, proof, challenge=77)
    assert not or_verify(small_key, stmt, proof, challenge=78)


def test_wrong_witness(small_key, rng):
    stmt, w = _statement(small_key, rng, 1)
    with pytest.raises(WitnessMismatch):
        or_prove(small_key, stmt, w + 1, 1, rng)


def test_mutated_fields_rejected(small_key, rng):
    stmt, w = _statement(small_key, rng, 1)
    proof = or_prove(small_key, stmt, w, 1, rng)
    values = proof.to_json()
    for k in range(6):
        bad = list(values)
        bad[k] = str(int(bad[k]) + 1)
        assert not or_verify(small_key, stmt, OrProof.from_json(bad))


def test_simulator(small_key, rng):
    stmt = OrStatement(small_key.h2, small_key.h1, small_key.h1 * small_key.h1 % small_key.modulus)
    for _ in range(10):
        proof, v = simulate(small_key, stmt, rng)
        assert or_verify(small_key, stmt, proof, challenge=v)


@pytest.mark.parametrize("position", [1, 2])
def test_extractor(small_key, rng, position):
    stmt, w = _statement(small_key, rng, position)
    prover = OrProver(small_key, stmt, w, position, rng)
    first, second = prover.respond(11), prover.respond(29)
    assert or_verify(small_key, stmt, first, challenge=11)
    assert or_verify(small_key, stmt, second, challenge=29)
    assert extract(small_key, first, second) == (position, w % small_key.order)


def test_fs_challenge_never_zero(small_key):
    stmt = OrStatement(small_key.h2, 1, 1)
    assert all(fs_challenge(small_key, stmt, a, a, b"") != 0 for a in range(1, 50))


def test_proof_json():
    p = OrProof(1, 2, 3, 4, 5, 6)
    assert OrProof.from_json(p.to_json()) == p
    with pytest.raises(ValueError):
        OrProof.from_json(["1"])
