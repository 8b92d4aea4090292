"""Node storage projections and the aggregate replicated storage table."""

import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import ValidationError
from .catalog import CURRENT_STORAGE_TB, CostAssumptions, Figure2Bar, NetworkProfile
from .units import Interval, tb_to_eb

logger = logging.getLogger(__name__)


def node_storage_projection(current_tb: float, multiplier: float) -> float:
    if current_tb <= 0:
        raise ValidationError(f"current_tb must be positive, got {current_tb}")
    if multiplier < 1:
        raise ValidationError(f"multiplier must be >= 1, got {multiplier}")
    return current_tb * multiplier


def hardware_catchup_years(multiplier: float, doubling_period_years: float = 2.0) -> float:
    """Years of capacity doubling needed to absorb a ``multiplier``-fold increase."""
    if multiplier < 1:
        raise ValidationError(f"multiplier must be >= 1, got {multiplier}")
    if doubling_period_years <= 0:
        raise ValidationError("doubling_period_years must be positive")
    return doubling_period_years * math.log2(multiplier)


def figure2_series(bars: Sequence[Figure2Bar]) -> List[Tuple[str, float]]:
    """Bar labels and TB values, current and projected per node type."""
    series = []
    for bar in bars:
        projected = node_storage_projection(bar.current_tb, bar.multiplier)
        series.append((f"{bar.label} (Current)", bar.current_tb))
        # Rounded so the back-solved multiplier returns the configured bar.
        series.append((f"{bar.label} (PQ)", round(projected, 9)))
    return series


def current_storage_baselines() -> Dict[str, Interval]:
    return dict(CURRENT_STORAGE_TB)


@dataclass(frozen=True)
class StorageRow:
    name: str
    label: str
    quantified: bool
    in_subtotal: bool
    node_count: Optional[Interval] = None
    growth_tb: Optional[Interval] = None
    per_node_tb: Optional[Interval] = None
    total_eb: Optional[Interval] = None
    notes: str = ""

    @property
    def per_node_headline_tb(self) -> Optional[float]:
        return None if self.per_node_tb is None else self.per_node_tb.midpoint

    @property
    def headline_total_eb(self) -> Optional[Interval]:
        """Midpoint per-node figure times the node-count range."""
        if self.per_node_tb is None:
            return None
        return self.node_count.scale(self.per_node_tb.midpoint).map(tb_to_eb)


@dataclass(frozen=True)
class StorageTable:
    rows: Tuple[StorageRow, ...]
    assumptions: CostAssumptions

    @property
    def subtotal_rows(self) -> Tuple[StorageRow, ...]:
        return tuple(row for row in self.rows if row.in_subtotal and row.quantified)

    @property
    def subtotal_eb(self) -> float:
        return sum(row.headline_total_eb.midpoint for row in self.subtotal_rows)

    @property
    def subtotal_interval_eb(self) -> Interval:
        return sum(
            (row.headline_total_eb for row in self.subtotal_rows), Interval.point(0)
        )

    def row(self, name: str) -> StorageRow:
        for row in self.rows:
            if row.name == name:
                return row
        raise KeyError(name)


def storage_row(profile: NetworkProfile, assumptions: CostAssumptions) -> StorageRow:
    if not profile.quantified:
        return StorageRow(
            name=profile.name,
            label=profile.label,
            quantified=False,
            in_subtotal=False,
            notes=profile.notes,
        )
    growth = profile.growth_tb(assumptions.horizon_years)
    per_node = growth.scale(assumptions.signature_multiplier)
    total_tb = per_node * profile.node_count
    return StorageRow(
        name=profile.name,
        label=profile.label,
        quantified=True,
        in_subtotal=profile.in_subtotal,
        node_count=profile.node_count,
        growth_tb=growth,
        per_node_tb=per_node,
        total_eb=total_tb.map(tb_to_eb),
        notes=profile.notes,
    )


def aggregate_storage(
    profiles: Iterable[NetworkProfile], assumptions: CostAssumptions
) -> StorageTable:
    """Per-node additional data = horizon x annual growth x multiplier; total = per-node x nodes."""
    rows = tuple(storage_row(profile, assumptions) for profile in profiles)
    table = StorageTable(rows=rows, assumptions=assumptions)
    logger.debug(f"Aggregated {len(rows)} profiles, subtotal {table.subtotal_eb:.4f} EB")
    return table
