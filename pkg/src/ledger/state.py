"""Ledger value types.

States are immutable: every transition builds a new LedgerState and a
rejected transaction hands back the very object it was given.
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from types import MappingProxyType
from typing import Iterable, Mapping, Optional, Tuple

from ..crypto import BURN_AUTH, AuthId, Commitment, Digest, HashAlgId, Reveal, TxKind
from ..crypto.wire import (
    encode_commitment,
    encode_envelope,
    encode_reveal,
)
from ..errors import ConfigurationError, ValidationError

DEFAULT_CONFIRMATION_DEPTH = 1
DEFAULT_COMMIT_TTL = 100


class AccountStatus(str, Enum):
    OPEN = "Open"
    LOCKED = "Locked"
    SPENT = "Spent"


@dataclass(frozen=True)
class CommitRef:
    commit: Commitment
    height: int
    expiry_height: int


@dataclass(frozen=True)
class Account:
    auth: AuthId
    balance: int
    status: AccountStatus = AccountStatus.OPEN
    pending: Optional[CommitRef] = None

    def __post_init__(self):
        if self.balance < 0:
            raise ValidationError(f"Negative balance for {self.auth}")
        if self.status == AccountStatus.SPENT and self.balance != 0:
            raise ValidationError("Spent accounts must have a zero balance")
        if (self.status == AccountStatus.LOCKED) != (self.pending is not None):
            raise ValidationError("Exactly the locked accounts carry a pending commit")


@dataclass(frozen=True)
class LedgerConfig:
    hash_algorithm: HashAlgId = HashAlgId.SHA256
    confirmation_depth: int = DEFAULT_CONFIRMATION_DEPTH
    commit_ttl: int = DEFAULT_COMMIT_TTL
    allocations: Tuple[Tuple[AuthId, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "hash_algorithm", HashAlgId.parse(self.hash_algorithm))
        if self.confirmation_depth < 1:
            raise ConfigurationError("confirmation_depth must be at least 1")
        if self.commit_ttl <= self.confirmation_depth:
            raise ConfigurationError(
                f"commit_ttl ({self.commit_ttl}) must exceed confirmation_depth "
                f"({self.confirmation_depth})"
            )
        seen = set()
        for auth, amount in self.allocations:
            if auth == BURN_AUTH:
                raise ConfigurationError("The burn identifier cannot hold an allocation")
            if auth in seen:
                raise ConfigurationError(f"Duplicate genesis allocation for {auth}")
            if amount < 0:
                raise ConfigurationError(f"Negative genesis allocation for {auth}")
            seen.add(auth)


@dataclass(frozen=True)
class LedgerState:
    accounts: Mapping[AuthId, Account]
    spent_commitments: frozenset
    height: int
    config: LedgerConfig

    @classmethod
    def genesis(cls, config: LedgerConfig) -> "LedgerState":
        accounts = {auth: Account(auth=auth, balance=amount) for auth, amount in config.allocations}
        return cls(
            accounts=MappingProxyType(accounts),
            spent_commitments=frozenset(),
            height=0,
            config=config,
        )

    def account(self, auth: AuthId) -> Optional[Account]:
        return self.accounts.get(auth)

    def is_live(self, ref: CommitRef) -> bool:
        return self.height < ref.expiry_height

    def evolve(
        self,
        accounts: Optional[Mapping[AuthId, Account]] = None,
        spent: Optional[Iterable[Digest]] = None,
        height: Optional[int] = None,
    ) -> "LedgerState":
        return replace(
            self,
            accounts=MappingProxyType(dict(accounts)) if accounts is not None else self.accounts,
            spent_commitments=frozenset(spent) if spent is not None else self.spent_commitments,
            height=self.height if height is None else height,
        )


@dataclass(frozen=True)
class TxEnvelope:
    kind: TxKind
    account: AuthId
    payload: bytes
    size_bytes: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "kind", TxKind(self.kind))
        object.__setattr__(self, "size_bytes", len(self.wire()))

    def wire(self) -> bytes:
        return encode_envelope(self.kind, self.account, self.payload)

    @classmethod
    def for_commit(cls, c: Commitment, account: Optional[AuthId] = None) -> "TxEnvelope":
        return cls(TxKind.COMMIT, account or c.addr_hash, encode_commitment(c))

    @classmethod
    def for_reveal(cls, account: AuthId, r: Reveal) -> "TxEnvelope":
        return cls(TxKind.REVEAL, account, encode_reveal(r))
