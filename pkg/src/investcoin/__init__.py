"""Privacy-preserving investment rounds over QR_{p^2}.

Investors encrypt per-project amounts with private stream aggregation, commit
to them with Pedersen commitments and prove each amount lies in [0, 2^l - 1].
The administrator learns only the per-project totals and can check every
investor's payment and return claim against the commitments.
"""

from .errors import *  # noqa: F401,F403
from .group import GroupParams, OracleTable, generate_params, toy_params
from .harness import Adversary, ScenarioConfig, Transcript, Verdict, oracle_round, run_scenario, verify_transcript
from .keygen import UPDATE_MESSAGE_FACTOR, KeyNetwork, run_keygen, verify_blackboard
from .pedersen import CommitKey, commit, unv
from .protocol import Administrator, Investor, SystemSetup, die_set
from .psa import PsaCiphertext, psa_dec, psa_enc
from .rangeproof import RangeProof, range_prove, range_verify
from .sigma import OrProof, OrStatement, or_prove, or_verify

__version__ = "0.1.0"
