import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import Dict, Optional

from ..crypto import (
    BURN_AUTH,
    AuthId,
    TxKind,
    VerifyReason,
    decode_commitment,
    decode_reveal,
    verify_reveal,
)
from ..errors import ValidationError
from .state import Account, AccountStatus, CommitRef, LedgerState, TxEnvelope

logger = logging.getLogger(__name__)


class RejectionReason(str, Enum):
    UNKNOWN_ACCOUNT = "UnknownAccount"
    ACCOUNT_LOCKED = "AccountLocked"
    ACCOUNT_SPENT = "AccountSpent"
    ADDR_MISMATCH = "AddrMismatch"
    NO_PENDING_COMMIT = "NoPendingCommit"
    TOO_EARLY = "TooEarly"
    COMMIT_EXPIRED = "CommitExpired"
    VERIFY_FAILED = "VerifyFailed"
    INSUFFICIENT_BALANCE = "InsufficientBalance"
    REPLAY_SPENT_COMMITMENT = "ReplaySpentCommitment"
    RESERVED_ACCOUNT = "ReservedAccount"
    DESTINATION_SPENT = "DestinationSpent"
    BURN_WITH_REMAINDER = "BurnWithRemainder"
    MALFORMED_PAYLOAD = "MalformedPayload"


@dataclass(frozen=True)
class ApplyResult:
    accepted: bool
    state: LedgerState
    rejection: Optional[RejectionReason] = None
    verify_reason: Optional[VerifyReason] = None
    detail: Optional[str] = None

    @classmethod
    def accept(cls, state: LedgerState) -> "ApplyResult":
        return cls(accepted=True, state=state)

    @classmethod
    def reject(
        cls,
        state: LedgerState,
        reason: RejectionReason,
        detail: Optional[str] = None,
        verify_reason: Optional[VerifyReason] = None,
    ) -> "ApplyResult":
        return cls(
            accepted=False,
            state=state,
            rejection=reason,
            verify_reason=verify_reason,
            detail=detail,
        )

    @property
    def label(self) -> str:
        """'Accepted', 'AccountLocked', 'VerifyFailed(AddrMismatch)', ..."""
        if self.accepted:
            return "Accepted"
        if self.verify_reason is not None:
            return f"{self.rejection.value}({self.verify_reason.value})"
        return self.rejection.value


def _credit(accounts: Dict[AuthId, Account], auth: AuthId, amount: int) -> None:
    existing = accounts.get(auth)
    if existing is None:
        accounts[auth] = Account(auth=auth, balance=amount)
    else:
        accounts[auth] = replace(existing, balance=existing.balance + amount)


def apply_commit(state: LedgerState, env: TxEnvelope) -> ApplyResult:
    """Lock an open account on a commitment. No balance moves."""
    if env.kind != TxKind.COMMIT:
        raise ValidationError(f"apply_commit expects a commit envelope, got {env.kind.name}")
    account_id = env.account

    if account_id == BURN_AUTH:
        return ApplyResult.reject(state, RejectionReason.RESERVED_ACCOUNT)
    try:
        commitment = decode_commitment(env.payload, account_id)
    except ValidationError as e:
        return ApplyResult.reject(state, RejectionReason.MALFORMED_PAYLOAD, str(e))

    account = state.account(account_id)
    if account is None:
        return ApplyResult.reject(state, RejectionReason.UNKNOWN_ACCOUNT)
    if account.status == AccountStatus.SPENT or account_id in state.spent_commitments:
        return ApplyResult.reject(state, RejectionReason.ACCOUNT_SPENT)
    if account.status == AccountStatus.LOCKED and state.is_live(account.pending):
        return ApplyResult.reject(
            state,
            RejectionReason.ACCOUNT_LOCKED,
            f"pending commit expires at height {account.pending.expiry_height}",
        )
    if commitment.addr_hash != account_id:
        return ApplyResult.reject(state, RejectionReason.ADDR_MISMATCH)

    ref = CommitRef(
        commit=commitment,
        height=state.height,
        expiry_height=state.height + state.config.commit_ttl,
    )
    locked = replace(account, status=AccountStatus.LOCKED, pending=ref)
    accounts = dict(state.accounts)
    accounts[account_id] = locked
    return ApplyResult.accept(state.evolve(accounts=accounts))


def apply_reveal(state: LedgerState, env: TxEnvelope) -> ApplyResult:
    """Execute a revealed transfer against the account's pending commitment.

    The destination is credited, the remainder moves to the reveal's next
    identifier and the revealed account is marked spent for good.
    """
    if env.kind != TxKind.REVEAL:
        raise ValidationError(f"apply_reveal expects a reveal envelope, got {env.kind.name}")
    account_id = env.account
    account = state.account(account_id)

    if account_id in state.spent_commitments or (
        account is not None and account.status == AccountStatus.SPENT
    ):
        return ApplyResult.reject(state, RejectionReason.REPLAY_SPENT_COMMITMENT)
    try:
        reveal = decode_reveal(env.payload)
    except ValidationError as e:
        return ApplyResult.reject(state, RejectionReason.MALFORMED_PAYLOAD, str(e))
    if account is None:
        return ApplyResult.reject(state, RejectionReason.UNKNOWN_ACCOUNT)
    if account.status != AccountStatus.LOCKED:
        return ApplyResult.reject(state, RejectionReason.NO_PENDING_COMMIT)

    ref = account.pending
    config = state.config
    if state.height < ref.height + config.confirmation_depth:
        return ApplyResult.reject(
            state,
            RejectionReason.TOO_EARLY,
            f"commit at height {ref.height} needs depth {config.confirmation_depth}",
        )
    if not state.is_live(ref):
        return ApplyResult.reject(state, RejectionReason.COMMIT_EXPIRED)

    verdict = verify_reveal(ref.commit, reveal, config.hash_algorithm)
    if not verdict.ok:
        return ApplyResult.reject(
            state, RejectionReason.VERIFY_FAILED, verdict.detail, verdict.reason
        )

    action = reveal.m
    if action.amount > account.balance:
        return ApplyResult.reject(
            state,
            RejectionReason.INSUFFICIENT_BALANCE,
            f"amount {action.amount} exceeds balance {account.balance}",
        )
    if action.dest == BURN_AUTH:
        return ApplyResult.reject(state, RejectionReason.RESERVED_ACCOUNT)
    if action.dest == account_id or action.dest in state.spent_commitments:
        return ApplyResult.reject(state, RejectionReason.DESTINATION_SPENT)

    remainder = account.balance - action.amount
    next_auth = reveal.next_auth
    if next_auth == BURN_AUTH and remainder > 0:
        return ApplyResult.reject(state, RejectionReason.BURN_WITH_REMAINDER)
    if next_auth in state.spent_commitments:
        return ApplyResult.reject(state, RejectionReason.DESTINATION_SPENT)

    accounts = dict(state.accounts)
    accounts[account_id] = Account(auth=account_id, balance=0, status=AccountStatus.SPENT)
    _credit(accounts, action.dest, action.amount)
    if next_auth != BURN_AUTH:
        _credit(accounts, next_auth, remainder)

    logger.debug(
        f"Reveal on {account_id.hex()[:12]} moved {action.amount} and rotated {remainder}"
    )
    return ApplyResult.accept(
        state.evolve(accounts=accounts, spent=state.spent_commitments | {account_id})
    )


def apply_transaction(state: LedgerState, env: TxEnvelope) -> ApplyResult:
    if env.kind == TxKind.COMMIT:
        return apply_commit(state, env)
    return apply_reveal(state, env)


def advance_height(state: LedgerState, n: int) -> LedgerState:
    """Produce n blocks; commits whose expiry height has passed are discarded."""
    if n < 1:
        raise ValidationError(f"advance_height needs n >= 1, got {n}")
    new_height = state.height + n
    accounts = dict(state.accounts)
    for auth, account in state.accounts.items():
        if account.status == AccountStatus.LOCKED and account.pending.expiry_height < new_height:
            accounts[auth] = replace(account, status=AccountStatus.OPEN, pending=None)
    return state.evolve(accounts=accounts, height=new_height)


def total_supply(state: LedgerState) -> int:
    return sum(account.balance for account in state.accounts.values())
