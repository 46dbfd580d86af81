import random

import pytest

from investcoin.group import OracleTable, generate_params, toy_params
from investcoin.pedersen import CommitKey


@pytest.fixture(scope="session")
def toy():
    return toy_params()


@pytest.fixture(scope="session")
def small():
    # big enough that a commitment has a single opening below the bound we test
    return generate_params(32, 4, 3, 4, b"tests/small")


@pytest.fixture(scope="session")
def medium():
    return generate_params(64, 16, 4, 5, b"tests/medium")


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture
def small_key(small):
    return CommitKey.from_params(small)


@pytest.fixture
def small_oracle(small):
    return OracleTable(small)
