"""Transaction size and SegWit weight accounting."""

from dataclasses import dataclass
from typing import Tuple

from ..errors import ValidationError
from .catalog import (
    DEFAULT_ENVELOPE_BYTES,
    ETHEREUM_TX_BAND,
    ETHEREUM_TX_BYTES,
    SignatureSchemeSpec,
)
from .units import Interval

TX_OVERHEAD_SIZE = 10  # version, locktime, counts
P2PKH_INPUT_SIZE = 148
P2PKH_OUTPUT_SIZE = 34

WITNESS_SCALE_FACTOR = 4
MAX_BLOCK_WEIGHT = 4_000_000


def _require_count(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ValidationError(f"{name} must be a positive integer, got {value!r}")


def bitcoin_tx_size(inputs: int, outputs: int) -> int:
    """Legacy (pre-SegWit) transaction size in bytes."""
    _require_count("inputs", inputs)
    _require_count("outputs", outputs)
    return TX_OVERHEAD_SIZE + inputs * P2PKH_INPUT_SIZE + outputs * P2PKH_OUTPUT_SIZE


def virtual_size_from_weight(weight: int) -> int:
    return weight // WITNESS_SCALE_FACTOR + (weight % WITNESS_SCALE_FACTOR > 0)


def segwit_weight(base_size: int, total_size: int) -> Tuple[int, int]:
    """(weight units, vbytes). Witness bytes weigh a quarter of base bytes."""
    if base_size < 0:
        raise ValidationError(f"base_size must be non-negative, got {base_size}")
    if total_size < base_size:
        raise ValidationError(
            f"total_size ({total_size}) must be at least base_size ({base_size})"
        )
    weight = (WITNESS_SCALE_FACTOR - 1) * base_size + total_size
    return weight, virtual_size_from_weight(weight)


def block_capacity(weight_per_tx: int, limit: int = MAX_BLOCK_WEIGHT) -> int:
    """Whole transactions of the given weight that fit in one block."""
    if weight_per_tx <= 0:
        raise ValidationError(f"weight_per_tx must be positive, got {weight_per_tx}")
    return limit // weight_per_tx


def tx_size_for_scheme(scheme: SignatureSchemeSpec) -> int:
    return scheme.representative_tx_bytes


def ethereum_tx_size() -> Tuple[int, Interval]:
    """Representative simple-transfer size and the band it is drawn from."""
    return ETHEREUM_TX_BYTES, ETHEREUM_TX_BAND


def signed_tx_bytes(scheme: SignatureSchemeSpec, envelope: int = DEFAULT_ENVELOPE_BYTES) -> int:
    if envelope < 0:
        raise ValidationError(f"envelope must be non-negative, got {envelope}")
    return envelope + scheme.modeled_auth_bytes


def signature_fraction(
    scheme: SignatureSchemeSpec, envelope: int = DEFAULT_ENVELOPE_BYTES
) -> float:
    """Share of a signed transaction occupied by authorization bytes."""
    return scheme.modeled_auth_bytes / signed_tx_bytes(scheme, envelope)


@dataclass(frozen=True)
class SegwitProfile:
    scheme: str
    base_bytes: int
    witness_bytes: int
    weight: int
    vbytes: int
    physical_bytes: int
    txs_per_block: int

    @property
    def discount(self) -> float:
        """Fraction of physical bytes that the vbyte price hides."""
        return 1 - self.vbytes / self.physical_bytes


def segwit_profile(
    scheme: SignatureSchemeSpec, envelope: int = DEFAULT_ENVELOPE_BYTES
) -> SegwitProfile:
    """Price a signed transaction with all authorization bytes in the witness.

    vbytes shrink as the witness grows, physical_bytes do not.
    """
    physical = signed_tx_bytes(scheme, envelope)
    weight, vbytes = segwit_weight(envelope, physical)
    return SegwitProfile(
        scheme=scheme.name,
        base_bytes=envelope,
        witness_bytes=physical - envelope,
        weight=weight,
        vbytes=vbytes,
        physical_bytes=physical,
        txs_per_block=block_capacity(weight),
    )
