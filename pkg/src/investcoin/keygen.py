"""Decentralised additive key generation, blackboard check and key updates.

Investor i draws shares s_{i,i'} for every investor i' and keeps
s_i = sum_{i'} s_{i,i'}. Investor i' reports its column sum to the
administrator, whose key is minus the total of all column sums, so
s_0 + sum s_i = 0 (mod pq). Every investor also posts
T_{i,i'} = PSAEnc_{s_{i,i'}}(t_0, 0) for the shares it received; the
administrator checks each column against the reported sum, after which the
row product of T pins each investor's zero-slot cipher.

Key updates keep the share matrix square over the active investors:

* leave / fail of a set F: each survivor i' drops the shares it received from
  F, adds fresh randomness rho to its own diagonal share, reposts T_{i',i'}
  and reports its new column sum. One message per survivor.
* join of J: J sends a share to every current investor, each of them sends a
  share to J, everyone whose column changed reports the new sum.
  3n + 1 messages for n current investors.

Either way no event costs more than ``UPDATE_MESSAGE_FACTOR * n`` messages.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import EmptyNetwork, MalformedAggregate
from .group import GroupParams, OracleTable, powmod
from .psa import PsaCiphertext, decode, psa_enc

UPDATE_MESSAGE_FACTOR = 4


@dataclass
class Blackboard:
    tag: str
    entries: dict[tuple[int, int], PsaCiphertext] = field(default_factory=dict)

    def column(self, col: int, members: list[int]) -> list[PsaCiphertext]:
        return [self.entries[(row, col)] for row in members]

    def to_json(self, members: list[int]) -> list[list[str]]:
        return [[str(self.entries[(i, j)].c) for j in members] for i in members]

    @classmethod
    def from_json(cls, tag: str, members: list[int], rows: list[list[str]]) -> "Blackboard":
        board = cls(tag)
        if len(rows) != len(members) or any(len(r) != len(members) for r in rows):
            raise ValueError("blackboard must be square over the members")
        for i, row in zip(members, rows):
            for j, v in zip(members, row):
                board.entries[(i, j)] = PsaCiphertext(int(v), tag)
        return board


@dataclass
class KeyNetwork:
    """Simulation view of one key family: all shares, board and reports."""

    params: GroupParams
    oracle: OracleTable
    tag: str
    members: list[int]
    shares: dict[tuple[int, int], int]
    board: Blackboard
    column_sums: dict[int, int]
    admin_key: int
    message_count: int = 0

    def key(self, i: int) -> int:
        return sum(self.shares[(i, j)] for j in self.members) % self.params.exp_modulus

    def keys(self) -> dict[int, int]:
        return {i: self.key(i) for i in self.members}

    def zero_sum_holds(self) -> bool:
        return (self.admin_key + sum(self.keys().values())) % self.params.exp_modulus == 0

    def _post(self, row: int, col: int) -> None:
        self.board.entries[(row, col)] = psa_enc(self.params, self.oracle, self.shares[(row, col)], self.tag, 0)

    def _report(self, col: int) -> None:
        self.column_sums[col] = sum(self.shares[(row, col)] for row in self.members) % self.params.exp_modulus
        self.message_count += 1

    def _refresh_admin_key(self) -> None:
        self.admin_key = -sum(self.column_sums[c] for c in self.members) % self.params.exp_modulus

    def leave(self, departed: set[int], rng: random.Random) -> int:
        """Remove ``departed`` (leave or failure); returns messages used."""
        survivors = [i for i in self.members if i not in departed]
        if not survivors:
            raise EmptyNetwork("no investors survive the update")
        before = self.message_count
        for key in [k for k in self.shares if k[0] in departed or k[1] in departed]:
            del self.shares[key]
            self.board.entries.pop(key, None)
        for i in departed:
            self.column_sums.pop(i, None)
        self.members = survivors
        for i in survivors:
            self.shares[(i, i)] = (self.shares[(i, i)] + rng.randrange(self.params.exp_modulus)) % self.params.exp_modulus
            self._post(i, i)
            self._report(i)
        self._refresh_admin_key()
        return self.message_count - before

    def join(self, newcomer: int, rng: random.Random) -> int:
        if newcomer in self.members:
            raise ValueError(f"investor {newcomer} already in the network")
        before = self.message_count
        old = list(self.members)
        self.members = old + [newcomer]
        n = self.params.exp_modulus
        for i in self.members:
            self.shares[(newcomer, i)] = rng.randrange(n)
        for i in old:
            self.shares[(i, newcomer)] = rng.randrange(n)
        # shares J -> i and i -> J
        self.message_count += 2 * len(old)
        for i in self.members:
            self._post(newcomer, i)
            self._post(i, newcomer)
            self._report(i)
        self._refresh_admin_key()
        return self.message_count - before


def run_keygen(
    params: GroupParams,
    oracle: OracleTable,
    members: list[int] | int,
    rng: random.Random | dict[int, random.Random],
    tag: str = "t_0",
) -> KeyNetwork:
    """One-round share exchange among ``members``; n^2 messages in total.

    ``rng`` is either one generator or one per investor id.
    """
    if isinstance(members, int):
        members = list(range(1, members + 1))
    if not members:
        raise EmptyNetwork("keygen needs at least one investor")
    rngs = rng if isinstance(rng, dict) else {i: rng for i in members}
    shares = {(i, j): rngs[i].randrange(params.exp_modulus) for i in members for j in members}
    net = KeyNetwork(params, oracle, tag, list(members), shares, Blackboard(tag), {}, 0)
    # each investor: n - 1 shares to peers plus its column report
    net.message_count = len(members) * (len(members) - 1)
    for i in members:
        for j in members:
            net._post(i, j)
    for j in members:
        net._report(j)
    net._refresh_admin_key()
    return net


def verify_blackboard(
    params: GroupParams,
    oracle: OracleTable,
    board: Blackboard,
    members: list[int],
    column_sums: dict[int, int],
) -> dict[int, bool]:
    """Per column i': does the column decrypt to 0 under key -column_sum[i']?"""
    verdicts = {}
    mod = params.modulus
    h = oracle(board.tag)
    for col in members:
        v = powmod(h, -column_sums[col] % params.exp_modulus, mod)
        for ct in board.column(col, members):
            v = v * ct.c % mod
        try:
            verdicts[col] = decode(params, v) == 0
        except MalformedAggregate:
            verdicts[col] = False
    return verdicts


def pinned_zero_cipher(params: GroupParams, board: Blackboard, i: int, members: list[int]) -> PsaCiphertext:
    acc = 1
    for j in members:
        acc = acc * board.entries[(i, j)].c % params.modulus
    return PsaCiphertext(acc, board.tag)
