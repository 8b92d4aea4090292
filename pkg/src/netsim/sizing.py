"""Shared-envelope size model.

A signed transaction is envelope + authorization bytes. A commit-reveal
authorization is two transactions on the same envelope: the commit adds
two digests (one in compact mode), the reveal adds the preimage and the
next identifier, with the action itself counted inside the envelope.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional

from ..costmodel.catalog import DEFAULT_ENVELOPE_BYTES, ECDSA_AUTH_BYTES
from ..crypto import DIGEST_SIZE, CommitMode
from ..crypto.cr_protocol import PREIMAGE_SIZE
from ..errors import ConfigurationError, ValidationError

DEFAULT_HEADER_BYTES = 80
SENSITIVITY_ENVELOPES = tuple(range(64, 257, 32))


@dataclass(frozen=True)
class EnvelopeModel:
    envelope_bytes: int = DEFAULT_ENVELOPE_BYTES
    header_bytes: int = DEFAULT_HEADER_BYTES

    def __post_init__(self):
        if self.envelope_bytes < 0 or self.header_bytes < 0:
            raise ConfigurationError("envelope_bytes and header_bytes must be non-negative")

    def signed_tx_bytes(self, auth_bytes: int) -> int:
        return self.envelope_bytes + auth_bytes

    def commit_bytes(self, mode: CommitMode = CommitMode.FULL) -> int:
        digests = 1 if CommitMode.parse(mode) == CommitMode.COMPACT else 2
        return self.envelope_bytes + digests * DIGEST_SIZE

    def reveal_bytes(self) -> int:
        return self.envelope_bytes + PREIMAGE_SIZE + DIGEST_SIZE

    def authorization_bytes(self, mode: CommitMode = CommitMode.FULL) -> int:
        return self.commit_bytes(mode) + self.reveal_bytes()


@dataclass(frozen=True)
class FootprintRatio:
    envelope_bytes: int
    baseline_auth_bytes: int
    mode: CommitMode
    commit_bytes: int
    reveal_bytes: int
    baseline_bytes: int

    @property
    def cr_bytes(self) -> int:
        return self.commit_bytes + self.reveal_bytes

    @property
    def ratio(self) -> float:
        return self.cr_bytes / self.baseline_bytes


def footprint_ratio(
    envelope: int = DEFAULT_ENVELOPE_BYTES,
    auth_bytes: int = ECDSA_AUTH_BYTES,
    mode: CommitMode = CommitMode.FULL,
) -> FootprintRatio:
    """Commit + reveal bytes over one signed transaction on the same envelope."""
    if auth_bytes < 0:
        raise ValidationError(f"auth_bytes must be non-negative, got {auth_bytes}")
    model = EnvelopeModel(envelope_bytes=envelope)
    mode = CommitMode.parse(mode)
    baseline = model.signed_tx_bytes(auth_bytes)
    if baseline == 0:
        raise ConfigurationError("EmptyBaseline: the signed baseline transaction has zero bytes")
    return FootprintRatio(
        envelope_bytes=envelope,
        baseline_auth_bytes=auth_bytes,
        mode=mode,
        commit_bytes=model.commit_bytes(mode),
        reveal_bytes=model.reveal_bytes(),
        baseline_bytes=baseline,
    )


@dataclass(frozen=True)
class SensitivityRow:
    envelope_bytes: int
    baseline_bytes: int
    full_ratio: float
    compact_ratio: float


def footprint_sensitivity(
    envelopes: Optional[Iterable[int]] = None, auth_bytes: int = ECDSA_AUTH_BYTES
) -> List[SensitivityRow]:
    rows = []
    for envelope in envelopes if envelopes is not None else SENSITIVITY_ENVELOPES:
        full = footprint_ratio(envelope, auth_bytes, CommitMode.FULL)
        compact = footprint_ratio(envelope, auth_bytes, CommitMode.COMPACT)
        rows.append(
            SensitivityRow(
                envelope_bytes=envelope,
                baseline_bytes=full.baseline_bytes,
                full_ratio=full.ratio,
                compact_ratio=compact.ratio,
            )
        )
    return rows
