"""Single-chain ledger state machine for commit-reveal transactions."""

from .genesis import export_state, export_state_yaml, load_genesis, parse_genesis
from .state import (
    DEFAULT_COMMIT_TTL,
    DEFAULT_CONFIRMATION_DEPTH,
    Account,
    AccountStatus,
    CommitRef,
    LedgerConfig,
    LedgerState,
    TxEnvelope,
)
from .transitions import (
    ApplyResult,
    RejectionReason,
    advance_height,
    apply_commit,
    apply_reveal,
    apply_transaction,
    total_supply,
)

__all__ = [
    "export_state",
    "export_state_yaml",
    "load_genesis",
    "parse_genesis",
    "DEFAULT_COMMIT_TTL",
    "DEFAULT_CONFIRMATION_DEPTH",
    "Account",
    "AccountStatus",
    "CommitRef",
    "LedgerConfig",
    "LedgerState",
    "TxEnvelope",
    "ApplyResult",
    "RejectionReason",
    "advance_height",
    "apply_commit",
    "apply_reveal",
    "apply_transaction",
    "total_supply",
]
