"""Bit-exact encodings of commitments, reveals and transaction envelopes.

All multi-byte integers are big-endian.

    action      0x10 || dest (32) || amount (8)
    commitment  mode || addr_hash || bind_hash        (Full, 65 bytes)
                mode || compact_hash                  (Compact, 33 bytes)
    reveal      x (32) || action (41) || next_auth (32)
    envelope    kind || account (32) || payload

A compact commitment does not carry the identifier; the envelope's
account field supplies it when the commitment is decoded.
"""

from enum import IntEnum

from ..errors import ValidationError
from .cr_protocol import (
    ACTION_SIZE,
    PREIMAGE_SIZE,
    Action,
    ActionKind,
    AuthId,
    Commitment,
    CommitMode,
    Preimage,
    Reveal,
)
from .hashing import DIGEST_SIZE, Digest, DomainTag, HashAlgId, hash_data

REVEAL_SIZE = PREIMAGE_SIZE + ACTION_SIZE + DIGEST_SIZE


class TxKind(IntEnum):
    COMMIT = 0x01
    REVEAL = 0x02


def decode_action(data: bytes) -> Action:
    if len(data) != ACTION_SIZE:
        raise ValidationError(f"Action must be {ACTION_SIZE} bytes, got {len(data)}")
    try:
        kind = ActionKind(data[0])
    except ValueError:
        raise ValidationError(f"Unknown action tag 0x{data[0]:02x}") from None
    dest = Digest(data[1 : 1 + DIGEST_SIZE])
    amount = int.from_bytes(data[1 + DIGEST_SIZE :], "big")
    return Action(dest=dest, amount=amount, kind=kind)


def encode_commitment(c: Commitment) -> bytes:
    if c.mode == CommitMode.COMPACT:
        return bytes([c.mode]) + c.compact_hash.value
    return bytes([c.mode]) + c.addr_hash.value + c.bind_hash.value


def decode_commitment(data: bytes, account: AuthId) -> Commitment:
    if not data:
        raise ValidationError("Empty commitment payload")
    mode = CommitMode.parse(data[0])
    body = data[1:]
    if mode == CommitMode.COMPACT:
        if len(body) != DIGEST_SIZE:
            raise ValidationError("Compact commitment must carry one digest")
        return Commitment(mode=mode, addr_hash=account, compact_hash=Digest(body))
    if len(body) != 2 * DIGEST_SIZE:
        raise ValidationError("Full commitment must carry two digests")
    return Commitment(
        mode=mode,
        addr_hash=Digest(body[:DIGEST_SIZE]),
        bind_hash=Digest(body[DIGEST_SIZE:]),
    )


def encode_reveal(r: Reveal) -> bytes:
    # A zero amount still encodes; verification reports it as malformed.
    try:
        amount = r.m.amount.to_bytes(8, "big")
    except (OverflowError, AttributeError):
        raise ValidationError(f"Amount not encodable in 8 bytes: {r.m.amount!r}") from None
    action = bytes([r.m.kind]) + r.m.dest.value + amount
    return r.x.x + action + r.next_auth.value


def decode_reveal(data: bytes) -> Reveal:
    if len(data) != REVEAL_SIZE:
        raise ValidationError(f"Reveal must be {REVEAL_SIZE} bytes, got {len(data)}")
    x = Preimage(data[:PREIMAGE_SIZE])
    m = decode_action(data[PREIMAGE_SIZE : PREIMAGE_SIZE + ACTION_SIZE])
    next_auth = Digest(data[PREIMAGE_SIZE + ACTION_SIZE :])
    return Reveal(x=x, m=m, next_auth=next_auth)


def encode_envelope(kind: TxKind, account: AuthId, payload: bytes) -> bytes:
    return bytes([TxKind(kind)]) + account.value + payload


def commitment_id(c: Commitment, alg: HashAlgId = HashAlgId.SHA256) -> Digest:
    """Fingerprint of a commitment as it appears on the wire."""
    return hash_data(alg, DomainTag.COMPACT, c.addr_hash.value + encode_commitment(c))
