"""Commit-reveal (CR) authorization objects.

A user holds a secret preimage x and publishes y = F(x) as the account
identifier. Authorizing an action m takes two ledger records: a commit
carrying (F(x), F(x || m)) and, once the commit is final, a reveal
carrying (x, m) together with the next identifier y' = F(x') that
receives whatever the action leaves behind.
"""

import hashlib
import logging
import secrets
from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Optional, Tuple

from ..errors import ValidationError
from .hashing import (
    DIGEST_SIZE,
    Digest,
    DomainTag,
    HashAlgId,
    hash_data,
    xor_combine,
)

logger = logging.getLogger(__name__)

PREIMAGE_SIZE = 32
PREIMAGE_LABEL = b"cr-preimage"
MAX_AMOUNT = 2**64 - 1
ACTION_SIZE = 1 + DIGEST_SIZE + 8

# Rotating to this identifier means "nothing remains"; no account is created for it.
BURN_AUTH = Digest.zero()

AuthId = Digest


class ActionKind(IntEnum):
    TRANSFER = 0x10


class CommitMode(IntEnum):
    FULL = 0x00
    COMPACT = 0x01

    @classmethod
    def parse(cls, value: "str | int | CommitMode") -> "CommitMode":
        if isinstance(value, CommitMode):
            return value
        if isinstance(value, str):
            try:
                return cls[value.strip().upper()]
            except KeyError:
                raise ValidationError(f"Unknown commit mode '{value}'") from None
        try:
            return cls(value)
        except ValueError:
            raise ValidationError(f"Unknown commit mode byte {value!r}") from None


@dataclass(frozen=True)
class Preimage:
    x: bytes

    def __post_init__(self):
        if not isinstance(self.x, (bytes, bytearray)) or len(self.x) != PREIMAGE_SIZE:
            raise ValidationError(f"Preimage must be exactly {PREIMAGE_SIZE} bytes")
        object.__setattr__(self, "x", bytes(self.x))

    @classmethod
    def from_hex(cls, text: str) -> "Preimage":
        try:
            return cls(bytes.fromhex(text.strip()))
        except ValueError:
            raise ValidationError("Preimage is not valid hex") from None

    def hex(self) -> str:
        return self.x.hex()

    def __repr__(self) -> str:
        return "Preimage(<secret>)"


@dataclass(frozen=True)
class Action:
    dest: AuthId
    amount: int
    kind: ActionKind = ActionKind.TRANSFER


@dataclass(frozen=True)
class Commitment:
    mode: CommitMode
    addr_hash: Digest
    bind_hash: Optional[Digest] = None
    compact_hash: Optional[Digest] = None

    def __post_init__(self):
        if self.mode == CommitMode.FULL and self.bind_hash is None:
            raise ValidationError("Full commitments need a binding digest")
        if self.mode == CommitMode.COMPACT and self.compact_hash is None:
            raise ValidationError("Compact commitments need a combined digest")


@dataclass(frozen=True)
class Reveal:
    x: Preimage
    m: Action
    next_auth: AuthId


class VerifyReason(str, Enum):
    OK = "Ok"
    ADDR_MISMATCH = "AddrMismatch"
    BIND_MISMATCH = "BindMismatch"
    MALFORMED_ACTION = "MalformedAction"
    NEXT_AUTH_REUSED = "NextAuthReused"


@dataclass(frozen=True)
class VerifyVerdict:
    ok: bool
    reason: VerifyReason
    detail: Optional[str] = None

    @classmethod
    def success(cls) -> "VerifyVerdict":
        return cls(ok=True, reason=VerifyReason.OK)

    @classmethod
    def failure(cls, reason: VerifyReason, detail: Optional[str] = None) -> "VerifyVerdict":
        return cls(ok=False, reason=reason, detail=detail)

    def __bool__(self) -> bool:
        return self.ok


def derive_preimage(seed: Optional[bytes] = None) -> Preimage:
    """Fresh secret from caller entropy (deterministic) or from the OS CSPRNG."""
    if seed is None:
        return Preimage(secrets.token_bytes(PREIMAGE_SIZE))
    if len(seed) != PREIMAGE_SIZE:
        raise ValidationError(f"Seed must be exactly {PREIMAGE_SIZE} bytes")
    return Preimage(hashlib.sha256(PREIMAGE_LABEL + bytes(seed)).digest())


def auth_id(x: Preimage, alg: HashAlgId = HashAlgId.SHA256) -> AuthId:
    return hash_data(alg, DomainTag.ADDRESS, x.x)


def keygen(
    seed: Optional[bytes] = None, alg: HashAlgId = HashAlgId.SHA256
) -> Tuple[Preimage, AuthId]:
    x = derive_preimage(seed)
    return x, auth_id(x, alg)


def validate_action(m: Action) -> None:
    if not isinstance(m, Action):
        raise ValidationError(f"Expected an Action, got {type(m).__name__}")
    if m.kind != ActionKind.TRANSFER:
        raise ValidationError(f"Unsupported action kind {m.kind!r}")
    if not isinstance(m.dest, Digest):
        raise ValidationError("Action destination must be a 32-byte identifier")
    if isinstance(m.amount, bool) or not isinstance(m.amount, int):
        raise ValidationError("Action amount must be an integer")
    if not 0 < m.amount <= MAX_AMOUNT:
        raise ValidationError(f"Action amount out of range: {m.amount}")


def canonical_action(m: Action) -> bytes:
    """0x10 || dest (32) || amount (8, big-endian)."""
    validate_action(m)
    return bytes([m.kind]) + m.dest.value + m.amount.to_bytes(8, "big")


def binding_digest(
    x: Preimage, m: Action, alg: HashAlgId = HashAlgId.SHA256
) -> Digest:
    # x is fixed-width so x || m needs no separator.
    return hash_data(alg, DomainTag.BINDING, x.x + canonical_action(m))


def make_commit(
    x: Preimage,
    m: Action,
    mode: CommitMode = CommitMode.FULL,
    alg: HashAlgId = HashAlgId.SHA256,
) -> Commitment:
    mode = CommitMode.parse(mode)
    addr_hash = auth_id(x, alg)
    bind_hash = binding_digest(x, m, alg)
    compact_hash = xor_combine(addr_hash, bind_hash) if mode == CommitMode.COMPACT else None
    return Commitment(
        mode=mode, addr_hash=addr_hash, bind_hash=bind_hash, compact_hash=compact_hash
    )


def make_reveal(
    x: Preimage,
    m: Action,
    next_seed: Optional[bytes] = None,
    alg: HashAlgId = HashAlgId.SHA256,
) -> Tuple[Reveal, Preimage]:
    """Reveal for (x, m) rotating the remainder to a fresh identifier.

    The new preimage is returned to the caller, who is responsible for keeping it.
    """
    validate_action(m)
    next_x, next_auth = keygen(next_seed, alg)
    return Reveal(x=x, m=m, next_auth=next_auth), next_x


def verify_reveal(
    c: Commitment, r: Reveal, alg: HashAlgId = HashAlgId.SHA256
) -> VerifyVerdict:
    revealed_addr = auth_id(r.x, alg)
    if revealed_addr != c.addr_hash:
        return VerifyVerdict.failure(
            VerifyReason.ADDR_MISMATCH, "F(x) does not match the committed identifier"
        )
    if r.next_auth == revealed_addr:
        return VerifyVerdict.failure(
            VerifyReason.NEXT_AUTH_REUSED, "Remainder rotated to the revealed identifier"
        )
    try:
        bind_hash = binding_digest(r.x, r.m, alg)
    except ValidationError as e:
        return VerifyVerdict.failure(VerifyReason.MALFORMED_ACTION, str(e))

    if c.mode == CommitMode.COMPACT:
        matches = xor_combine(revealed_addr, bind_hash) == c.compact_hash
    else:
        matches = bind_hash == c.bind_hash
    if not matches:
        return VerifyVerdict.failure(
            VerifyReason.BIND_MISMATCH, "F(x || m) does not match the commitment"
        )
    return VerifyVerdict.success()
