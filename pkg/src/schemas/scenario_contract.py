"""Contract classes for simulation scenario files.

Events stay plain mappings here; the simulator turns them into typed
events because their keys (``from``) are not valid field names.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class NodeCountsContract:
    light: int = 0
    full: int = 0
    archive: int = 0


@dataclass
class SchemeContract:
    """Authorization scheme under test: ``cr`` or a modeled ``signature``."""

    kind: str = "cr"
    mode: str = "full"
    name: Optional[str] = None
    auth_bytes: Optional[int] = None


@dataclass
class LedgerParamsContract:
    hash_algorithm: str = "sha256"
    confirmation_depth: int = 1
    commit_ttl: int = 100


@dataclass
class ScenarioContract:
    name: str = "scenario"
    seed: int = 0
    nodes: NodeCountsContract = field(default_factory=NodeCountsContract)
    scheme: SchemeContract = field(default_factory=SchemeContract)
    envelope_bytes: int = 128
    header_bytes: int = 80
    ledger: LedgerParamsContract = field(default_factory=LedgerParamsContract)
    accounts: Dict[str, int] = field(default_factory=dict)
    events: List[Dict[str, Any]] = field(default_factory=list)
