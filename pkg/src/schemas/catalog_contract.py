"""Contract classes for catalog.yaml overrides of the cost-model defaults."""

from dataclasses import dataclass, field
from typing import List, Optional


@dataclass
class SchemeOverrideContract:
    """Signature scheme sizes. Ranges are given as [min, max] in bytes."""

    name: str
    public_key_bytes: List[int] = field(default_factory=list)
    signature_bytes: List[int] = field(default_factory=list)
    representative_tx_bytes: int = 0
    in_figure: Optional[bool] = None


@dataclass
class ProfileOverrideContract:
    """Network population and baseline growth. Ranges are [min, max].

    Unset fields keep the value of the default profile with the same name.
    """

    name: str
    node_count: List[float] = field(default_factory=list)
    growth_gb_per_year: List[float] = field(default_factory=list)
    node_class: Optional[str] = None
    in_subtotal: Optional[bool] = None
    quantified: Optional[bool] = None
    notes: Optional[str] = None


@dataclass
class AssumptionsContract:
    signature_multiplier: Optional[float] = None
    media_price_per_tb: Optional[float] = None
    usable_capacity: Optional[float] = None
    redundancy: Optional[float] = None
    system_overhead: Optional[List[float]] = None
    deployment: Optional[float] = None
    lifecycle: Optional[float] = None
    overall_multiplier_band: Optional[List[float]] = None
    horizon_years: Optional[float] = None
    doubling_period_years: Optional[float] = None


@dataclass
class CatalogContract:
    schemes: List[SchemeOverrideContract] = field(default_factory=list)
    profiles: List[ProfileOverrideContract] = field(default_factory=list)
    assumptions: Optional[AssumptionsContract] = None
