"""Contract classes for the offline key, commit and reveal files."""

from dataclasses import dataclass

KEY_FILE_KIND = "cr-key"
COMMIT_FILE_KIND = "cr-commit"
REVEAL_FILE_KIND = "cr-reveal"


@dataclass
class KeyFileContract:
    """Secret preimage and its public identifier. Holds a secret."""

    preimage: str
    auth: str
    hash_algorithm: str = "sha256"
    kind: str = KEY_FILE_KIND


@dataclass
class CommitFileContract:
    """A commit envelope: the account reference plus the serialized commitment."""

    account: str
    payload: str
    mode: str = "full"
    hash_algorithm: str = "sha256"
    commitment_id: str = ""
    size_bytes: int = 0
    kind: str = COMMIT_FILE_KIND


@dataclass
class RevealFileContract:
    """A reveal envelope. The preimage inside is public once broadcast."""

    account: str
    payload: str
    dest: str = ""
    amount: int = 0
    next_auth: str = ""
    hash_algorithm: str = "sha256"
    size_bytes: int = 0
    kind: str = REVEAL_FILE_KIND
