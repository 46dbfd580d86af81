import random

import pytest

from investcoin.errors import EmptyNetwork
from investcoin.group import OracleTable
from investcoin.keygen import UPDATE_MESSAGE_FACTOR, Blackboard, pinned_zero_cipher, run_keygen, verify_blackboard
from investcoin.psa import decode


@pytest.fixture
def net(medium):
    return run_keygen(medium, OracleTable(medium), 5, random.Random(3))


def test_zero_sum_and_messages(net):
    assert net.zero_sum_holds()
    assert net.message_count == 25


def test_blackboard_verifies(net, medium):
    verdicts = verify_blackboard(medium, net.oracle, net.board, net.members, net.column_sums)
    assert all(verdicts.values())


def test_misreported_column_detected(net, medium):
    sums = dict(net.column_sums)
    sums[3] += 1
    verdicts = verify_blackboard(medium, net.oracle, net.board, net.members, sums)
    assert verdicts == {1: True, 2: True, 3: False, 4: True, 5: True}


def test_pinned_zero_cipher(net, medium):
    # c_{i,0} = H(t0)^{s_i}: the plaintext slot is 0 and the key is the row sum
    h = net.oracle(net.tag)
    for i in net.members:
        c = pinned_zero_cipher(medium, net.board, i, net.members).c
        assert c == pow(h, net.key(i), medium.modulus)
        assert decode(medium, c * pow(h, -net.key(i) % medium.exp_modulus, medium.modulus)) == 0


def test_leave_and_join(net, medium):
    rng = random.Random(5)
    n = len(net.members)
    used = net.leave({2, 4}, rng)
    assert used == n - 2 and net.zero_sum_holds() and net.members == [1, 3, 5]
    used = net.join(9, rng)
    assert used == 3 * 3 + 1 and net.zero_sum_holds()
    assert used <= UPDATE_MESSAGE_FACTOR * 4
    assert all(verify_blackboard(medium, net.oracle, net.board, net.members, net.column_sums).values())
    with pytest.raises(ValueError):
        net.join(9, rng)
    with pytest.raises(EmptyNetwork):
        net.leave(set(net.members), rng)


def test_board_json(net):
    again = Blackboard.from_json(net.tag, net.members, net.board.to_json(net.members))
    assert again.entries == net.board.entries
