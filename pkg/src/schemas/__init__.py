"""YAML contracts for genesis, scenario, catalog and key files."""

from .catalog_contract import (
    AssumptionsContract,
    CatalogContract,
    ProfileOverrideContract,
    SchemeOverrideContract,
)
from .genesis_contract import AllocationContract, GenesisContract
from .key_contract import CommitFileContract, KeyFileContract, RevealFileContract
from .scenario_contract import (
    LedgerParamsContract,
    NodeCountsContract,
    ScenarioContract,
    SchemeContract,
)

__all__ = [
    "AssumptionsContract",
    "CatalogContract",
    "ProfileOverrideContract",
    "SchemeOverrideContract",
    "AllocationContract",
    "GenesisContract",
    "CommitFileContract",
    "KeyFileContract",
    "RevealFileContract",
    "LedgerParamsContract",
    "NodeCountsContract",
    "ScenarioContract",
    "SchemeContract",
]
