"""Investcoin: private investment rounds on top of PSA, Pedersen and range tests.

Projects are indexed 1..lam; slot 0 is the zero slot every investor encrypts
0 into, and slots lam-1, lam are dummy projects that carry no money but make
the administrator's secret weights beta satisfy

    prod_{j=0}^{lam} H(t_j)^{beta_j} = prod_{j=1}^{lam} H(~t_j)^{beta_j} = 1.

With that relation the beta-weighted product of one investor's ciphers
decrypts without any key, which lets the administrator link the encrypted
amounts to the committed ones.

Investor-side helpers are module functions; the administrator is a state
machine fed one message at a time so a recorded transcript can be replayed
through exactly the same checks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import psa
from .errors import (
    AmountOutOfRange,
    ConsistencyAbort,
    MalformedAggregate,
    MissingCipher,
    RangeRecheckFailed,
    ReturnFactorOutOfRange,
    SumOutOfBound,
    TransferMismatch,
    ZeroSlotViolation,
)
from .group import GroupParams, OracleTable, powmod
from .keygen import Blackboard, KeyNetwork, pinned_zero_cipher, run_keygen, verify_blackboard
from .pedersen import CommitKey, combine, commit, random_randomness, unv
from .psa import PsaCiphertext
from .rangeproof import RangeProof, range_check, range_prove

TILDE_BOARD_TAG = "t~_0"


def tag(j: int) -> str:
    return f"t_{j}"


def tilde_tag(j: int) -> str:
    return f"t~_{j}"


@dataclass
class SystemSetup:
    """Public parameters plus the administrator's secret weights ``betas``."""

    params: GroupParams
    oracle: OracleTable
    commit_key: CommitKey
    betas: list[int]

    @property
    def lam(self) -> int:
        return self.params.lam

    @property
    def dummies(self) -> tuple[int, int]:
        return self.lam - 1, self.lam

    @property
    def real_projects(self) -> range:
        return range(1, self.lam - 1)

    def relation_products(self) -> tuple[int, int]:
        mod = self.params.modulus
        first = 1
        for j in range(self.lam + 1):
            first = first * powmod(self.oracle(tag(j)), self.betas[j] % self.params.exp_modulus, mod) % mod
        second = 1
        for j in range(1, self.lam + 1):
            second = second * powmod(self.oracle(tilde_tag(j)), self.betas[j] % self.params.exp_modulus, mod) % mod
        return first, second

    def relation_holds(self) -> bool:
        return self.relation_products() == (1, 1)


def sample_betas(params: GroupParams, rng: random.Random) -> list[int]:
    qp, lam = params.q_prime, params.lam
    betas = [rng.randint(-qp, qp) for _ in range(lam - 1)]
    betas.append(rng.randint(-qp, qp - 1))
    betas.append(-1 - betas[-1])
    return betas


def program_oracle(params: GroupParams, betas: list[int]) -> OracleTable:
    oracle = OracleTable(params)
    lam, mod, order = params.lam, params.modulus, params.exp_modulus
    plain = 1
    for j in range(lam - 1):
        plain = plain * powmod(oracle(tag(j)), betas[j] % order, mod) % mod
    tilde = 1
    for j in range(1, lam - 1):
        tilde = tilde * powmod(oracle(tilde_tag(j)), betas[j] % order, mod) % mod
    for j in (lam - 1, lam):
        oracle.program(tag(j), plain)
        oracle.program(tilde_tag(j), tilde)
    return oracle


def die_set(
    params: GroupParams,
    admin_rng: random.Random,
    investor_rngs: dict[int, random.Random] | None = None,
) -> tuple[SystemSetup, KeyNetwork, KeyNetwork]:
    """Setup plus the two key families (s_i and ~s_i) for investors 1..n."""
    betas = sample_betas(params, admin_rng)
    oracle = program_oracle(params, betas)
    setup = SystemSetup(params, oracle, CommitKey.from_params(params), betas)
    if not setup.relation_holds():
        raise AssertionError("verification relation does not hold after programming")
    members = list(range(1, params.n + 1))
    rngs = investor_rngs or {i: admin_rng for i in members}
    keys = run_keygen(params, oracle, members, rngs, tag(0))
    tilde_keys = run_keygen(params, oracle, members, rngs, TILDE_BOARD_TAG)
    return setup, keys, tilde_keys


def sample_alphas(params: GroupParams, rng: random.Random) -> dict[int, int]:
    qp = params.q_prime
    alphas = {j: rng.randint(-qp, qp) for j in range(1, params.lam - 1)}
    alphas[params.lam - 1] = alphas[params.lam] = 1
    return alphas


# investor side


@dataclass
class Investor:
    id: int
    s: int
    s_tilde: int
    amounts: dict[int, int]
    randomness: dict[int, int]

    def pay_claim(self) -> tuple[int, int]:
        return sum(self.amounts.values()), sum(v for j, v in self.randomness.items() if j >= 1)

    def return_claim(self, alphas: dict[int, int]) -> tuple[int, int]:
        e = sum(alphas[j] * self.amounts[j] for j in alphas)
        f = sum(alphas[j] * self.randomness[j] for j in alphas)
        return e, f


def new_investor(
    setup: SystemSetup,
    investor_id: int,
    s: int,
    s_tilde: int,
    investments: dict[int, int] | list[int],
    rng: random.Random,
) -> Investor:
    """``investments`` covers the real projects 1..lam-2 (list) or any subset (dict)."""
    lam, m = setup.lam, setup.params.m
    if isinstance(investments, list):
        investments = {j: x for j, x in zip(setup.real_projects, investments)}
    amounts = {j: 0 for j in range(lam + 1)}
    for j, x in investments.items():
        if j not in setup.real_projects:
            if x:
                raise AmountOutOfRange(f"slot {j} must stay 0")
            continue
        if not 0 <= x <= m:
            raise AmountOutOfRange(f"x_{investor_id},{j} = {x} not in [0, {m}]")
        amounts[j] = x
    randomness = {j: random_randomness(setup.commit_key, rng, m) for j in range(1, lam + 1)}
    randomness[0] = 0
    return Investor(investor_id, s, s_tilde, amounts, randomness)


def check_amounts(setup: SystemSetup, inv: Investor) -> None:
    for j, x in inv.amounts.items():
        if j in setup.real_projects:
            if not 0 <= x <= setup.params.m:
                raise AmountOutOfRange(f"x_{inv.id},{j} = {x} not in [0, {setup.params.m}]")
        elif x:
            raise AmountOutOfRange(f"slot {j} must stay 0")


def die_enc(setup: SystemSetup, inv: Investor) -> dict[int, PsaCiphertext]:
    check_amounts(setup, inv)
    return {j: psa.psa_enc(setup.params, setup.oracle, inv.s, tag(j), inv.amounts[j]) for j in range(setup.lam + 1)}


def die_com(setup: SystemSetup, inv: Investor) -> tuple[dict[int, int], dict[int, PsaCiphertext]]:
    coms, ctildes = {}, {}
    for j in range(1, setup.lam + 1):
        coms[j] = commit(setup.commit_key, inv.amounts[j], inv.randomness[j])
        ctildes[j] = psa.psa_enc(setup.params, setup.oracle, inv.s_tilde, tilde_tag(j), inv.randomness[j])
    return coms, ctildes


def range_context(setup: SystemSetup, investor_id: int, project: int, label: str = "round") -> bytes:
    return setup.params.digest() + f"|{label}|{investor_id}|{project}".encode()


def die_tes(setup: SystemSetup, inv: Investor, rng: random.Random) -> dict[int, RangeProof]:
    return {
        j: range_prove(
            setup.commit_key, inv.amounts[j], inv.randomness[j], setup.params.l, range_context(setup, inv.id, j), rng
        )
        for j in range(1, setup.lam + 1)
    }


# administrator side


def weighted_sum(setup: SystemSetup, ciphers: dict[int, PsaCiphertext], first: int) -> int:
    """Centered plaintext of prod_j c_j^{beta_j}; the hash parts cancel by construction."""
    mod, order = setup.params.modulus, setup.params.exp_modulus
    v = 1
    for j in range(first, setup.lam + 1):
        v = v * powmod(ciphers[j].c, setup.betas[j] % order, mod) % mod
    return psa.decode(setup.params, v)


def check_consistency(
    setup: SystemSetup,
    investor_id: int,
    ciphers: dict[int, PsaCiphertext],
    ctildes: dict[int, PsaCiphertext],
    coms: dict[int, int],
) -> tuple[int, int]:
    """Raise ConsistencyAbort unless the beta-weighted commitment opens to (A_i, B_i)."""
    try:
        a = weighted_sum(setup, ciphers, 0)
        b = weighted_sum(setup, ctildes, 1)
    except MalformedAggregate as exc:
        raise ConsistencyAbort(investor_id, "malformed weighted aggregate") from exc
    weighted = combine(setup.commit_key, [(coms[j], setup.betas[j]) for j in range(1, setup.lam + 1)])
    if not unv(setup.commit_key, weighted, a, b):
        raise ConsistencyAbort(investor_id, "encrypted and committed amounts differ")
    return a, b


def die_unv_pay(
    setup: SystemSetup,
    investor_id: int,
    ciphers: dict[int, PsaCiphertext],
    ctildes: dict[int, PsaCiphertext],
    coms: dict[int, int],
    claim_c: int,
    claim_d: int,
) -> bool:
    check_consistency(setup, investor_id, ciphers, ctildes, coms)
    total = combine(setup.commit_key, [(coms[j], 1) for j in range(1, setup.lam + 1)])
    return unv(setup.commit_key, total, claim_c, claim_d)


def die_dec(setup: SystemSetup, s0: int, ciphers: dict[int, dict[int, PsaCiphertext]], members: list[int]) -> dict[int, int]:
    bound = setup.params.m * len(members)
    totals = {}
    for j in range(setup.lam + 1):
        column = []
        for i in members:
            ct = ciphers.get(i, {}).get(j)
            if ct is None:
                raise MissingCipher(f"no cipher from investor {i} for slot {j}")
            column.append(ct)
        totals[j] = psa.psa_dec(setup.params, setup.oracle, s0, tag(j), column, bound)
        if j == 0 and totals[0] != 0:
            raise ZeroSlotViolation(f"X_0 = {totals[0]}")
    return totals


def check_alphas(setup: SystemSetup, alphas: dict[int, int]) -> None:
    qp = setup.params.q_prime
    if sorted(alphas) != list(range(1, setup.lam + 1)):
        raise ReturnFactorOutOfRange("need one return factor per project")
    for j, a in alphas.items():
        if not -qp <= a <= qp:
            raise ReturnFactorOutOfRange(f"alpha_{j} = {a} outside [-{qp}, {qp}]")
    if (alphas[setup.lam - 1], alphas[setup.lam]) != (1, 1):
        raise ReturnFactorOutOfRange("dummy projects need return factor 1")


def die_unv_ret(setup: SystemSetup, coms: dict[int, int], alphas: dict[int, int], claim_e: int, claim_f: int) -> bool:
    check_alphas(setup, alphas)
    weighted = combine(setup.commit_key, [(coms[j], alphas[j]) for j in range(1, setup.lam + 1)])
    return unv(setup.commit_key, weighted, claim_e, claim_f)


def recheck_bits(params: GroupParams, members: int) -> int:
    # holdings after transfers never exceed a project total, which is <= m*n
    return (params.m * members).bit_length()


@dataclass
class TransferOffer:
    """One party's half of a transfer of ``delta`` in ``project`` from ``sender`` to ``receiver``."""

    sender: int
    receiver: int
    project: int
    com: int
    proof: RangeProof | None = None

    def to_json(self) -> dict:
        d = {"sender": str(self.sender), "receiver": str(self.receiver), "project": str(self.project), "com": str(self.com)}
        if self.proof is not None:
            d["proof"] = self.proof.to_json()
        return d

    @classmethod
    def from_json(cls, d: dict) -> "TransferOffer":
        proof = RangeProof.from_json(d["proof"]) if "proof" in d else None
        return cls(int(d["sender"]), int(d["receiver"]), int(d["project"]), int(d["com"]), proof)


def transfer_context(setup: SystemSetup, index: int, investor_id: int, project: int) -> bytes:
    return range_context(setup, investor_id, project, label=f"transfer/{index}")


def transfer_offer(
    setup: SystemSetup,
    inv: Investor,
    peer: int,
    project: int,
    delta: int,
    rho: int,
    outgoing: bool,
    index: int,
    members: int,
    rng: random.Random,
    recheck: bool = False,
) -> TransferOffer:
    """Party's transfer message; with ``recheck`` it proves its updated holding is >= 0."""
    com = commit(setup.commit_key, delta, rho)
    sender, receiver = (inv.id, peer) if outgoing else (peer, inv.id)
    proof = None
    if recheck:
        sign = -1 if outgoing else 1
        x = inv.amounts[project] + sign * delta
        r = inv.randomness[project] + sign * rho
        bits = recheck_bits(setup.params, members)
        try:
            proof = range_prove(setup.commit_key, x, r, bits, transfer_context(setup, index, inv.id, project), rng)
        except Exception as exc:
            raise RangeRecheckFailed(f"investor {inv.id} cannot hold {x} in project {project}") from exc
    return TransferOffer(sender, receiver, project, com, proof)


def apply_transfer(inv: Investor, project: int, delta: int, rho: int, outgoing: bool) -> None:
    sign = -1 if outgoing else 1
    inv.amounts[project] += sign * delta
    inv.randomness[project] += sign * rho


@dataclass
class Event:
    phase: str
    investor: int | None
    reason: str

    def to_json(self) -> dict:
        investor = None if self.investor is None else str(self.investor)
        return {"phase": self.phase, "investor": investor, "reason": self.reason}


@dataclass
class RoundState:
    submissions: dict[int, dict] = field(default_factory=dict)
    b_t: dict[int, dict[int, bool]] = field(default_factory=dict)
    consistent: dict[int, bool] = field(default_factory=dict)
    b_p: dict[int, bool] = field(default_factory=dict)
    totals: dict[int, int] | None = None
    alphas: dict[int, int] | None = None
    returns: dict[int, tuple[int, int]] = field(default_factory=dict)
    b_r: dict[int, bool] = field(default_factory=dict)
    investor_ledger: dict[int, int] = field(default_factory=dict)
    project_ledger: dict[int, int] = field(default_factory=dict)
    events: list[Event] = field(default_factory=list)
    aborted: str | None = None
    transfers: int = 0


class Administrator:
    """Administrator-side verifier for one round.

    Holds the public setup, the secret weights and both blackboards. The
    decryption key is derived from the reported column sums, never supplied.
    """

    def __init__(
        self,
        setup: SystemSetup,
        members: list[int],
        board: Blackboard,
        column_sums: dict[int, int],
        tilde_board: Blackboard,
        tilde_column_sums: dict[int, int],
        recheck_transfers: bool = False,
    ) -> None:
        self.setup = setup
        self.members = list(members)
        self.board = board
        self.column_sums = column_sums
        self.tilde_board = tilde_board
        self.tilde_column_sums = tilde_column_sums
        self.recheck_transfers = recheck_transfers
        self.s0 = -sum(column_sums[i] for i in members) % setup.params.exp_modulus
        self.state = RoundState()
        self.excluded: set[int] = set()
        self._pending: dict[tuple, tuple[int, TransferOffer]] = {}

    @classmethod
    def from_networks(cls, setup: SystemSetup, keys: KeyNetwork, tilde_keys: KeyNetwork, **kw) -> "Administrator":
        return cls(setup, keys.members, keys.board, dict(keys.column_sums), tilde_keys.board, dict(tilde_keys.column_sums), **kw)

    def _event(self, phase: str, investor: int | None, reason: str) -> None:
        self.state.events.append(Event(phase, investor, reason))

    def check_setup(self) -> bool:
        ok = True
        if not self.setup.relation_holds():
            self._event("setup", None, "verification relation broken")
            ok = False
        for board, sums in ((self.board, self.column_sums), (self.tilde_board, self.tilde_column_sums)):
            verdicts = verify_blackboard(self.setup.params, self.setup.oracle, board, self.members, sums)
            for col, good in verdicts.items():
                if not good:
                    self._event("setup", col, f"blackboard column fails ({board.tag})")
                    ok = False
        if not ok:
            self.state.aborted = "setup"
        return ok

    def receive_submission(self, investor_id: int, payload: dict) -> None:
        self.state.submissions[investor_id] = payload

    def close_payments(self) -> None:
        st, setup = self.state, self.setup
        ck, l = setup.commit_key, setup.params.l
        for i in self.members:
            sub = st.submissions.get(i)
            if sub is None:
                continue
            ciphers, ctildes, coms = sub["ciphers"], sub["ctildes"], sub["coms"]
            pinned = pinned_zero_cipher(setup.params, self.board, i, self.members)
            if ciphers[0].c != pinned.c:
                self._event("pay", i, "zero-slot cipher differs from blackboard product")
                self.excluded.add(i)
            st.b_t[i] = {}
            for j in range(1, setup.lam + 1):
                reason = range_check(ck, coms[j], sub["proofs"][j], l, range_context(setup, i, j))
                st.b_t[i][j] = reason is None
                if reason is not None:
                    self._event("range", i, f"project {j}: {reason}")
                    self.excluded.add(i)
            try:
                check_consistency(setup, i, ciphers, ctildes, coms)
                st.consistent[i] = True
            except ConsistencyAbort as exc:
                st.consistent[i] = False
                self._event("pay", i, f"consistency: {exc.reason}")
                self.excluded.add(i)
                continue
            total = combine(ck, [(coms[j], 1) for j in range(1, setup.lam + 1)])
            st.b_p[i] = unv(ck, total, sub["C"], sub["D"])
            if not st.b_p[i]:
                self._event("pay", i, "payment claim does not open the commitments")
        for i in self.members:
            if st.b_p.get(i) and i not in self.excluded:
                st.investor_ledger[i] = st.investor_ledger.get(i, 0) - st.submissions[i]["C"]
        try:
            ciphers = {i: sub["ciphers"] for i, sub in st.submissions.items()}
            st.totals = die_dec(setup, self.s0, ciphers, self.members)
        except (MissingCipher, ZeroSlotViolation, MalformedAggregate, SumOutOfBound) as exc:
            st.aborted = type(exc).__name__
            self._event("decrypt", None, f"{type(exc).__name__}: {exc}")
            st.investor_ledger.clear()
            return
        for j in range(1, setup.lam + 1):
            st.project_ledger[j] = st.totals[j]

    def receive_transfer(self, index: int, offer: TransferOffer, from_id: int) -> bool | None:
        """Record one half; once both halves are in, returns the acceptance verdict."""
        key = (index, offer.sender, offer.receiver, offer.project)
        other = self._pending.pop(key, None)
        if other is None:
            self._pending[key] = (from_id, offer)
            return None
        by_party = {other[0]: other[1], from_id: offer}
        self.state.transfers += 1
        try:
            self.settle_transfer(index, offer.sender, offer.receiver, offer.project, by_party)
        except (TransferMismatch, RangeRecheckFailed) as exc:
            self._event("transfer", offer.sender, f"{type(exc).__name__}: {exc}")
            return False
        return True

    def settle_transfer(self, index: int, sender: int, receiver: int, j: int, by_party: dict[int, TransferOffer]) -> None:
        """Move a committed amount from ``sender`` to ``receiver`` in project ``j``."""
        st, ck = self.state, self.setup.commit_key
        if st.aborted or st.alphas is not None:
            raise TransferMismatch("transfers only between payment and return phases")
        if set(by_party) != {sender, receiver}:
            raise TransferMismatch("transfer halves not from both parties")
        if by_party[sender].com != by_party[receiver].com:
            raise TransferMismatch("the two commitments differ")
        delta_com = by_party[sender].com
        coms_s = st.submissions[sender]["coms"]
        coms_r = st.submissions[receiver]["coms"]
        new_s = coms_s[j] * powmod(delta_com, -1, ck.modulus) % ck.modulus
        new_r = coms_r[j] * delta_com % ck.modulus
        if self.recheck_transfers:
            bits = recheck_bits(self.setup.params, len(self.members))
            for who, com in ((sender, new_s), (receiver, new_r)):
                proof = by_party[who].proof
                reason = "missing proof" if proof is None else range_check(
                    ck, com, proof, bits, transfer_context(self.setup, index, who, j)
                )
                if reason is not None:
                    raise RangeRecheckFailed(f"investor {who}: {reason}")
        coms_s[j] = new_s
        coms_r[j] = new_r

    def publish_alphas(self, alphas: dict[int, int]) -> None:
        check_alphas(self.setup, alphas)
        self.state.alphas = dict(alphas)

    def receive_returns(self, investor_id: int, claim_e: int, claim_f: int) -> None:
        self.state.returns[investor_id] = (claim_e, claim_f)

    def close_returns(self) -> None:
        st, setup = self.state, self.setup
        if st.aborted:
            return
        for i in self.members:
            if not st.consistent.get(i) or i not in st.returns:
                continue
            e, f = st.returns[i]
            st.b_r[i] = die_unv_ret(setup, st.submissions[i]["coms"], st.alphas, e, f)
            if not st.b_r[i]:
                self._event("return", i, "return claim does not open the commitments")
        # project debits only after every return verdict is in
        for i in self.members:
            if st.b_r.get(i) and i not in self.excluded:
                st.investor_ledger[i] = st.investor_ledger.get(i, 0) + st.returns[i][0]
        for j in range(1, setup.lam + 1):
            st.project_ledger[j] -= st.alphas[j] * st.totals[j]

    def conservation_holds(self) -> bool:
        st = self.state
        if st.aborted or st.totals is None or st.alphas is None:
            return False
        if any(i not in st.submissions or i not in st.returns for i in self.members):
            return False
        paid = sum(st.submissions[i]["C"] for i in self.members)
        returned = sum(st.returns[i][0] for i in self.members)
        collected = sum(st.totals[j] for j in range(1, self.setup.lam + 1))
        owed = sum(st.alphas[j] * st.totals[j] for j in range(1, self.setup.lam + 1))
        return paid == collected and returned == owed

    def accepted(self) -> bool:
        st = self.state
        return (
            st.aborted is None
            and not st.events
            and all(st.b_p.get(i) for i in self.members)
            and all(st.b_r.get(i) for i in self.members)
            and all(all(v.values()) for v in st.b_t.values())
            and self.conservation_holds()
        )
