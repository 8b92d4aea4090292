"""Hashing and commit-reveal protocol primitives."""

from .hashing import DIGEST_SIZE, Digest, DomainTag, HashAlgId, hash_data, xor_combine
from .cr_protocol import (
    BURN_AUTH,
    Action,
    ActionKind,
    AuthId,
    Commitment,
    CommitMode,
    Preimage,
    Reveal,
    VerifyReason,
    VerifyVerdict,
    auth_id,
    canonical_action,
    derive_preimage,
    keygen,
    make_commit,
    make_reveal,
    validate_action,
    verify_reveal,
)
from .wire import (
    TxKind,
    commitment_id,
    decode_commitment,
    decode_reveal,
    encode_commitment,
    encode_reveal,
)

__all__ = [
    "DIGEST_SIZE",
    "Digest",
    "DomainTag",
    "HashAlgId",
    "hash_data",
    "xor_combine",
    "BURN_AUTH",
    "Action",
    "ActionKind",
    "AuthId",
    "Commitment",
    "CommitMode",
    "Preimage",
    "Reveal",
    "VerifyReason",
    "VerifyVerdict",
    "auth_id",
    "canonical_action",
    "derive_preimage",
    "keygen",
    "make_commit",
    "make_reveal",
    "validate_action",
    "verify_reveal",
    "TxKind",
    "commitment_id",
    "decode_commitment",
    "decode_reveal",
    "encode_commitment",
    "encode_reveal",
]
