"""The one-way function F: domain-separated, 32-byte digests.

Every hashed input is prefixed with a single domain tag byte so the
address digest F(x) and the binding digest F(x || m) can never collide,
even when m is empty. The compact commitment form combines two digests
with a byte-wise XOR.
"""

import hashlib
import logging
from dataclasses import dataclass
from enum import Enum, IntEnum

from Crypto.Hash import keccak

from ..errors import ConfigurationError, ValidationError

logger = logging.getLogger(__name__)

DIGEST_SIZE = 32
MAX_INPUT_BYTES = 2**32


class HashAlgId(str, Enum):
    SHA256 = "sha256"
    BLAKE2S = "blake2s"
    KECCAK256 = "keccak256"

    @classmethod
    def parse(cls, value: "str | HashAlgId") -> "HashAlgId":
        if isinstance(value, HashAlgId):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            known = ", ".join(alg.value for alg in cls)
            raise ConfigurationError(
                f"Unknown hash algorithm '{value}' (expected one of: {known})"
            ) from None


class DomainTag(IntEnum):
    ADDRESS = 0x01  # F(x)
    BINDING = 0x02  # F(x || m)
    COMPACT = 0x03  # digests over serialized commitments


@dataclass(frozen=True, order=True)
class Digest:
    value: bytes

    def __post_init__(self):
        if not isinstance(self.value, (bytes, bytearray)):
            raise ValidationError(f"Digest must be bytes, got {type(self.value).__name__}")
        if len(self.value) != DIGEST_SIZE:
            raise ValidationError(
                f"Digest must be exactly {DIGEST_SIZE} bytes, got {len(self.value)}"
            )
        object.__setattr__(self, "value", bytes(self.value))

    @classmethod
    def zero(cls) -> "Digest":
        return cls(bytes(DIGEST_SIZE))

    @classmethod
    def from_hex(cls, text: str) -> "Digest":
        try:
            raw = bytes.fromhex(text.strip().removeprefix("0x"))
        except ValueError:
            raise ValidationError(f"Invalid hex digest: '{text}'") from None
        return cls(raw)

    def hex(self) -> str:
        return self.value.hex()

    def is_zero(self) -> bool:
        return not any(self.value)

    def __bytes__(self) -> bytes:
        return self.value

    def __str__(self) -> str:
        return self.hex()


def _sha256(data: bytes) -> bytes:
    return hashlib.sha256(data).digest()


def _blake2s(data: bytes) -> bytes:
    return hashlib.blake2s(data, digest_size=DIGEST_SIZE).digest()


def _keccak256(data: bytes) -> bytes:
    return keccak.new(digest_bits=256, data=data).digest()


_DIGEST_FUNCTIONS = {
    HashAlgId.SHA256: _sha256,
    HashAlgId.BLAKE2S: _blake2s,
    HashAlgId.KECCAK256: _keccak256,
}


def hash_data(alg: "HashAlgId | str", tag: DomainTag, data: bytes) -> Digest:
    """F with domain separation: digest of tag || data under the chosen algorithm."""
    alg_id = HashAlgId.parse(alg)
    if len(data) >= MAX_INPUT_BYTES:
        raise ValidationError(f"Hash input too large: {len(data)} bytes")
    tagged = bytes([DomainTag(tag)]) + bytes(data)
    return Digest(_DIGEST_FUNCTIONS[alg_id](tagged))


def xor_combine(a: Digest, b: Digest) -> Digest:
    """Byte-wise XOR of two digests (commutative, associative, self-inverse)."""
    return Digest(bytes(x ^ y for x, y in zip(a.value, b.value)))
