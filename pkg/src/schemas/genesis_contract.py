"""Contract classes for genesis files."""

from dataclasses import dataclass, field
from typing import List


@dataclass
class AllocationContract:
    """One genesis balance: identifier as hex and an amount in base units."""

    auth: str
    amount: int


@dataclass
class GenesisContract:
    """Contract for genesis/config files."""

    hash_algorithm: str = "sha256"
    confirmation_depth: int = 1
    commit_ttl: int = 100
    allocations: List[AllocationContract] = field(default_factory=list)
