"""Transaction-size, replicated-storage and infrastructure cost model."""

from .catalog import (
    CostAssumptions,
    CostCatalog,
    Figure2Bar,
    NetworkProfile,
    SignatureSchemeSpec,
    default_catalog,
    load_catalog,
)
from .infrastructure import (
    InfrastructureCost,
    component_multiplier_product,
    infrastructure_cost,
    operator_media_cost,
)
from .reports import CostReport, build_cost_report
from .sizes import (
    bitcoin_tx_size,
    block_capacity,
    ethereum_tx_size,
    segwit_profile,
    segwit_weight,
    signature_fraction,
    tx_size_for_scheme,
)
from .storage import (
    StorageRow,
    StorageTable,
    aggregate_storage,
    current_storage_baselines,
    hardware_catchup_years,
    node_storage_projection,
)
from .units import Interval

__all__ = [
    "CostAssumptions",
    "CostCatalog",
    "Figure2Bar",
    "NetworkProfile",
    "SignatureSchemeSpec",
    "default_catalog",
    "load_catalog",
    "InfrastructureCost",
    "component_multiplier_product",
    "infrastructure_cost",
    "operator_media_cost",
    "CostReport",
    "build_cost_report",
    "bitcoin_tx_size",
    "block_capacity",
    "ethereum_tx_size",
    "segwit_profile",
    "segwit_weight",
    "signature_fraction",
    "tx_size_for_scheme",
    "StorageRow",
    "StorageTable",
    "aggregate_storage",
    "current_storage_baselines",
    "hardware_catchup_years",
    "node_storage_projection",
    "Interval",
]
