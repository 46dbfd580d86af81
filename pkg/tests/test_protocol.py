import random

import pytest

from investcoin import protocol as P
from investcoin.errors import AmountOutOfRange, ConsistencyAbort, ReturnFactorOutOfRange
from investcoin.pedersen import commit, unv


@pytest.fixture
def world(medium):
    setup, keys, tkeys = P.die_set(medium, random.Random(11))
    rng = random.Random(12)
    invs = [
        P.new_investor(setup, i, keys.key(i), tkeys.key(i), [rng.randint(0, medium.m) for _ in setup.real_projects], rng)
        for i in keys.members
    ]
    return setup, keys, tkeys, invs


def test_betas_and_relation(medium):
    for seed in range(10):
        setup, _, _ = P.die_set(medium, random.Random(seed))
        b = setup.betas
        qp = medium.q_prime
        assert all(-qp <= x <= qp for x in b[:-2])
        assert -qp <= b[-2] <= qp - 1 and b[-1] == -1 - b[-2]
        assert setup.relation_holds()


def test_investor_amount_checks(world):
    setup, keys, tkeys, _ = world
    with pytest.raises(AmountOutOfRange):
        P.new_investor(setup, 1, 0, 0, {1: setup.params.m + 1}, random.Random(0))
    with pytest.raises(AmountOutOfRange):
        P.new_investor(setup, 1, 0, 0, {setup.lam: 1}, random.Random(0))


def test_honest_consistency_and_claims(world):
    setup, _, _, invs = world
    for inv in invs:
        ciphers = P.die_enc(setup, inv)
        coms, ctildes = P.die_com(setup, inv)
        a, b = P.check_consistency(setup, inv.id, ciphers, ctildes, coms)
        assert a == sum(setup.betas[j] * inv.amounts[j] for j in range(setup.lam + 1))
        assert P.die_unv_pay(setup, inv.id, ciphers, ctildes, coms, *inv.pay_claim())


def test_mismatch_aborts(world):
    setup, _, _, invs = world
    inv = invs[0]
    ciphers = P.die_enc(setup, inv)
    coms, ctildes = P.die_com(setup, inv)
    coms[1] = commit(setup.commit_key, inv.amounts[1] + 1, inv.randomness[1])
    with pytest.raises(ConsistencyAbort) as info:
        P.check_consistency(setup, inv.id, ciphers, ctildes, coms)
    assert info.value.investor == inv.id


def test_zero_matrix_decrypts_to_zero(world):
    setup, keys, _, _ = world
    rng = random.Random(0)
    ciphers = {}
    for i in keys.members:
        inv = P.new_investor(setup, i, keys.key(i), 0, [], rng)
        ciphers[i] = P.die_enc(setup, inv)
    assert set(P.die_dec(setup, keys.admin_key, ciphers, keys.members).values()) == {0}


def test_return_factor_examples(world):
    setup, _, _, invs = world
    inv = invs[1]
    coms, _ = P.die_com(setup, inv)
    zeros = {j: 0 for j in range(1, setup.lam + 1)}
    zeros[setup.lam - 1] = zeros[setup.lam] = 1
    assert P.die_unv_ret(setup, coms, zeros, 0, inv.randomness[setup.lam - 1] + inv.randomness[setup.lam])
    ones = {j: 1 for j in range(1, setup.lam + 1)}
    assert P.die_unv_ret(setup, coms, ones, *inv.pay_claim())
    e, f = inv.pay_claim()
    assert not P.die_unv_ret(setup, coms, ones, e + 1, f)
    with pytest.raises(ReturnFactorOutOfRange):
        P.check_alphas(setup, {**ones, 1: setup.params.q_prime + 1})
    with pytest.raises(ReturnFactorOutOfRange):
        P.check_alphas(setup, {**ones, setup.lam: 2})


def test_transfer_examples(world):
    setup, _, _, invs = world
    ck = setup.commit_key
    a, b = invs[0], invs[1]
    com_a = commit(ck, a.amounts[1], a.randomness[1])
    offer = P.transfer_offer(setup, a, b.id, 1, 0, 0, True, 0, 4, random.Random(0))
    assert offer.com == 1 and com_a * offer.com % ck.modulus == com_a
    delta, rho = a.amounts[1], 17
    P.apply_transfer(a, 1, delta, rho, outgoing=True)
    updated = com_a * pow(commit(ck, delta, rho), -1, ck.modulus) % ck.modulus
    assert unv(ck, updated, 0, a.randomness[1])
    assert P.TransferOffer.from_json(offer.to_json()) == offer
