from dataclasses import dataclass

from ..errors import ValidationError
from .catalog import CostAssumptions
from .storage import StorageRow
from .units import Interval, eb_to_tb


@dataclass(frozen=True)
class InfrastructureCost:
    storage_eb: float
    raw_usd: float
    band_usd: Interval
    multiplier_band: Interval
    media_price_per_tb: float


def infrastructure_cost(total_storage_eb: float, assumptions: CostAssumptions) -> InfrastructureCost:
    """Raw media cost and the provisioned-infrastructure band around it."""
    if total_storage_eb <= 0:
        raise ValidationError(f"storage must be positive, got {total_storage_eb} EB")
    raw = eb_to_tb(total_storage_eb) * assumptions.media_price_per_tb
    return InfrastructureCost(
        storage_eb=total_storage_eb,
        raw_usd=raw,
        band_usd=assumptions.overall_multiplier_band.scale(raw),
        multiplier_band=assumptions.overall_multiplier_band,
        media_price_per_tb=assumptions.media_price_per_tb,
    )


def component_multiplier_product(assumptions: CostAssumptions) -> Interval:
    """Product of the individual provisioning overheads.

    Reported next to the overall band; the two are not forced to agree.
    """
    fixed = (
        assumptions.usable_capacity
        * assumptions.redundancy
        * assumptions.deployment
        * assumptions.lifecycle
    )
    return assumptions.system_overhead.scale(fixed)


def operator_media_cost(row: StorageRow, assumptions: CostAssumptions) -> Interval:
    """Media spend for one node operator absorbing the row's per-node growth."""
    if row.per_node_tb is None:
        raise ValidationError(f"Row {row.name} has no per-node figure")
    return row.per_node_tb.scale(assumptions.media_price_per_tb)
