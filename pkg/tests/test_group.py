import pytest

from investcoin.errors import ParameterConflict
from investcoin.group import (
    GroupParams,
    OracleTable,
    default_q_prime,
    generate_params,
    has_full_order,
    hash_to_qr,
    in_subgroup,
    inverse,
    power,
    powmod,
    product,
    toy_params,
)


def test_powmod_frozen():
    assert powmod(4, 5, 529) == 495
    assert powmod(4, -1, 529) * 4 % 529 == 1


def test_toy_preset(toy):
    assert (toy.p, toy.q, toy.m) == (23, 11, 3)
    assert toy.exp_modulus == 253
    assert has_full_order(toy.h1, 23, 11) and has_full_order(toy.h2, 23, 11)
    assert toy.h1 != toy.h2


def test_generate_params_tiny():
    params = generate_params(4, 2, 3, 3)
    assert (params.q, params.p) == (11, 23)


def test_generate_params_conflict():
    with pytest.raises(ParameterConflict):
        generate_params(4, 4, 3, 3)


def test_toy_conflict():
    with pytest.raises(ParameterConflict):
        toy_params(n=4)


def test_generated_prime_shape(medium):
    assert medium.q.bit_length() == 64
    assert medium.p == 2 * medium.q + 1
    assert medium.q > medium.m * medium.n
    assert medium.q_prime == default_q_prime(medium.q, medium.m, medium.lam)
    assert medium.q_prime * medium.m * medium.lam < medium.q


def test_generation_is_deterministic():
    a = generate_params(40, 8, 2, 3, b"same")
    b = generate_params(40, 8, 2, 3, b"same")
    assert a == b


def test_params_json_roundtrip(medium):
    assert GroupParams.from_json(medium.to_json()) == medium


def test_hash_lands_in_subgroup(toy, medium):
    for params in (toy, medium):
        for t in ("t_0", "t_1", "t~_3", "x"):
            h = hash_to_qr(params.p, t)
            assert in_subgroup(params, h)


def test_group_ops(toy):
    g = toy.h1
    assert power(toy, g, -1) == inverse(toy, g)
    assert product(toy, [(g, 3), (g, -3)]) == 1
    assert power(toy, g, toy.exp_modulus) == 1


def test_oracle_programming(toy):
    oracle = OracleTable(toy)
    oracle.program("t_9", 4)
    assert oracle("t_9") == 4
    oracle("t_1")
    with pytest.raises(ValueError):
        oracle.program("t_1", 4)
    with pytest.raises(ValueError):
        oracle("")
    again = OracleTable.from_programmed(toy, oracle.programmed_json())
    assert again("t_9") == 4
