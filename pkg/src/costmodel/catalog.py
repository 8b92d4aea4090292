"""Embedded cost-model defaults and their catalog.yaml overrides.

Sizes are decimal: 1 KB = 1,000 bytes. Ranges are Intervals; a single
published value is a point interval.
"""

import logging
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from ..errors import ConfigurationError, ValidationError
from ..schemas.catalog_contract import (
    AssumptionsContract,
    CatalogContract,
    ProfileOverrideContract,
    SchemeOverrideContract,
)
from ..utils.contract_utils import load_yaml_contract
from ..utils.env import config_dir
from .units import Interval

logger = logging.getLogger(__name__)

CATALOG_FILE_NAME = "catalog.yaml"
NODE_CLASSES = ("light", "full", "archive")

# Simple Ether transfer size band and its midpoint
ETHEREUM_TX_BAND = Interval(100, 200)
ETHEREUM_TX_BYTES = 150

# Non-authorization bytes of a representative transfer (226 - 98)
DEFAULT_ENVELOPE_BYTES = 128
# 65-byte signature + 33-byte compressed public key
ECDSA_AUTH_BYTES = 98


def _key(name: str) -> str:
    return name.strip().lower()


@dataclass(frozen=True)
class SignatureSchemeSpec:
    name: str
    public_key_bytes: Interval
    signature_bytes: Interval
    representative_tx_bytes: int
    family: str = ""
    in_figure: bool = False
    auth_bytes: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "public_key_bytes", Interval.of(self.public_key_bytes))
        object.__setattr__(self, "signature_bytes", Interval.of(self.signature_bytes))
        if self.representative_tx_bytes <= 0:
            raise ConfigurationError(
                f"Scheme {self.name}: representative_tx_bytes must be positive"
            )
        if self.public_key_bytes.low < 0 or self.signature_bytes.low < 0:
            raise ConfigurationError(f"Scheme {self.name}: sizes must be non-negative")

    @property
    def modeled_auth_bytes(self) -> int:
        """Authorization bytes carried by one signed transaction."""
        if self.auth_bytes is not None:
            return self.auth_bytes
        return round(self.public_key_bytes.midpoint + self.signature_bytes.midpoint)


@dataclass(frozen=True)
class NetworkProfile:
    name: str
    label: str
    node_count: Optional[Interval]
    growth_gb_per_year: Optional[Interval]
    node_class: str = "full"
    in_subtotal: bool = True
    quantified: bool = True
    notes: str = ""

    def __post_init__(self):
        if self.node_class not in NODE_CLASSES:
            raise ConfigurationError(
                f"Profile {self.name}: unknown node class '{self.node_class}'"
            )
        if not self.quantified:
            return
        if self.node_count is None or self.growth_gb_per_year is None:
            raise ConfigurationError(
                f"Profile {self.name}: quantified profiles need node_count and growth"
            )
        object.__setattr__(self, "node_count", Interval.of(self.node_count))
        object.__setattr__(self, "growth_gb_per_year", Interval.of(self.growth_gb_per_year))
        if self.node_count.low <= 0:
            raise ConfigurationError(f"Profile {self.name}: node_count must be positive")
        if self.growth_gb_per_year.low < 0:
            raise ConfigurationError(f"Profile {self.name}: growth must be non-negative")

    def growth_tb(self, years: float = 10) -> Interval:
        if not self.quantified:
            raise ValidationError(f"Profile {self.name} is not quantified")
        return self.growth_gb_per_year.scale(years / 1000)

    @property
    def ten_year_growth_tb(self) -> Interval:
        return self.growth_tb(10)


@dataclass(frozen=True)
class CostAssumptions:
    signature_multiplier: float = 50.0
    media_price_per_tb: float = 300.0
    usable_capacity: float = 1.3
    redundancy: float = 2.0
    system_overhead: Interval = Interval(2.0, 2.5)
    deployment: float = 1.5
    lifecycle: float = 1.5
    overall_multiplier_band: Interval = Interval(10.0, 20.0)
    horizon_years: float = 10.0
    doubling_period_years: float = 2.0

    def __post_init__(self):
        object.__setattr__(self, "system_overhead", Interval.of(self.system_overhead))
        object.__setattr__(
            self, "overall_multiplier_band", Interval.of(self.overall_multiplier_band)
        )
        factors = {
            "signature_multiplier": self.signature_multiplier,
            "usable_capacity": self.usable_capacity,
            "redundancy": self.redundancy,
            "system_overhead": self.system_overhead.low,
            "deployment": self.deployment,
            "lifecycle": self.lifecycle,
            "overall_multiplier_band": self.overall_multiplier_band.low,
        }
        for name, value in factors.items():
            if value < 1:
                raise ConfigurationError(f"{name} must be >= 1, got {value}")
        if self.media_price_per_tb < 0:
            raise ConfigurationError("media_price_per_tb must be non-negative")
        if self.horizon_years <= 0 or self.doubling_period_years <= 0:
            raise ConfigurationError("horizon and doubling period must be positive")


@dataclass(frozen=True)
class Figure2Bar:
    label: str
    current_tb: float
    projected_tb: float

    @property
    def multiplier(self) -> float:
        return self.projected_tb / self.current_tb


DEFAULT_SCHEMES: Tuple[SignatureSchemeSpec, ...] = (
    SignatureSchemeSpec(
        name="ECDSA",
        public_key_bytes=Interval.point(64),
        signature_bytes=Interval.point(65),
        representative_tx_bytes=200,
        family="elliptic-curve",
        in_figure=True,
        auth_bytes=ECDSA_AUTH_BYTES,
    ),
    SignatureSchemeSpec(
        name="Dilithium",
        public_key_bytes=Interval(1000, 2500),
        signature_bytes=Interval(2000, 4500),
        representative_tx_bytes=3000,
        family="lattice",
        in_figure=True,
    ),
    SignatureSchemeSpec(
        name="SPHINCS+",
        public_key_bytes=Interval.point(32),
        signature_bytes=Interval(10000, 30000),
        representative_tx_bytes=20000,
        family="hash-based",
        in_figure=True,
    ),
    # Not charted; envelope + signature + public key
    SignatureSchemeSpec(
        name="Lamport",
        public_key_bytes=Interval.point(32000),
        signature_bytes=Interval.point(16000),
        representative_tx_bytes=DEFAULT_ENVELOPE_BYTES + 16000 + 32000,
        family="hash-based",
    ),
)

DEFAULT_PROFILES: Tuple[NetworkProfile, ...] = (
    NetworkProfile(
        name="bitcoin",
        label="Bitcoin",
        node_count=Interval.point(72000),
        growth_gb_per_year=Interval(50, 70),
        notes="reachable and unreachable participating nodes",
    ),
    NetworkProfile(
        name="ethereum-full",
        label="Ethereum (full)",
        node_count=Interval.point(12000),
        growth_gb_per_year=Interval(150, 250),
    ),
    NetworkProfile(
        name="ethereum-archive",
        label="Ethereum (archive)",
        node_count=Interval.point(1000),
        growth_gb_per_year=Interval.point(2000),
        node_class="archive",
        notes="growth back-solved from 20 TB per decade",
    ),
    NetworkProfile(
        name="other-utxo",
        label="Other UTXO chains",
        node_count=Interval(2100, 3000),
        growth_gb_per_year=Interval(50, 70),
        notes="Litecoin ~1000, Dogecoin ~500, Bitcoin Cash ~500, Bitcoin SV 100-1000",
    ),
    NetworkProfile(
        name="bitcoin-reachable",
        label="Bitcoin (reachable only)",
        node_count=Interval(13000, 20000),
        growth_gb_per_year=Interval(50, 70),
        in_subtotal=False,
        notes="alternative population; excluded from the subtotal",
    ),
    NetworkProfile(
        name="layer-2",
        label="Layer-2 systems",
        node_count=None,
        growth_gb_per_year=None,
        in_subtotal=False,
        quantified=False,
        notes="no standardized global node counts; unquantified",
    ),
)

DEFAULT_FIGURE2: Tuple[Figure2Bar, ...] = (
    Figure2Bar(label="Full", current_tb=1.2, projected_tb=60.0),
    Figure2Bar(label="Archive", current_tb=15.0, projected_tb=800.0),
)

# Present-day storage, TB: Bitcoin ~700 GB, Ethereum full 1-1.5 TB, archive > 10 TB
CURRENT_STORAGE_TB: Dict[str, Interval] = {
    "bitcoin": Interval.point(0.7),
    "ethereum-full": Interval(1.0, 1.5),
    "ethereum-archive": Interval.point(10.0),
}


@dataclass(frozen=True)
class CostCatalog:
    schemes: Tuple[SignatureSchemeSpec, ...] = DEFAULT_SCHEMES
    profiles: Tuple[NetworkProfile, ...] = DEFAULT_PROFILES
    assumptions: CostAssumptions = field(default_factory=CostAssumptions)
    figure2: Tuple[Figure2Bar, ...] = DEFAULT_FIGURE2

    def scheme(self, name: str) -> SignatureSchemeSpec:
        for scheme in self.schemes:
            if _key(scheme.name) == _key(name):
                return scheme
        known = ", ".join(scheme.name for scheme in self.schemes)
        raise ConfigurationError(f"Unknown signature scheme '{name}' (known: {known})")

    def profile(self, name: str) -> NetworkProfile:
        for profile in self.profiles:
            if _key(profile.name) == _key(name):
                return profile
        known = ", ".join(profile.name for profile in self.profiles)
        raise ConfigurationError(f"Unknown network profile '{name}' (known: {known})")

    @property
    def figure_schemes(self) -> Tuple[SignatureSchemeSpec, ...]:
        return tuple(scheme for scheme in self.schemes if scheme.in_figure)


def default_catalog() -> CostCatalog:
    return CostCatalog()


def _pick(value, fallback):
    return fallback if value is None else value


def _scheme_from_override(
    override: SchemeOverrideContract, base: Optional[SignatureSchemeSpec]
) -> SignatureSchemeSpec:
    if base is None:
        if not override.signature_bytes or override.representative_tx_bytes <= 0:
            raise ConfigurationError(
                f"New scheme {override.name} needs signature_bytes and representative_tx_bytes"
            )
        return SignatureSchemeSpec(
            name=override.name,
            public_key_bytes=Interval.of(override.public_key_bytes or [0]),
            signature_bytes=Interval.of(override.signature_bytes),
            representative_tx_bytes=override.representative_tx_bytes,
            in_figure=bool(override.in_figure),
        )
    changes = {"in_figure": _pick(override.in_figure, base.in_figure)}
    if override.public_key_bytes:
        changes["public_key_bytes"] = Interval.of(override.public_key_bytes)
    if override.signature_bytes:
        changes["signature_bytes"] = Interval.of(override.signature_bytes)
    if override.representative_tx_bytes:
        changes["representative_tx_bytes"] = override.representative_tx_bytes
    return replace(base, **changes)


def _profile_from_override(
    override: ProfileOverrideContract, base: Optional[NetworkProfile]
) -> NetworkProfile:
    node_count = Interval.of(override.node_count) if override.node_count else None
    growth = Interval.of(override.growth_gb_per_year) if override.growth_gb_per_year else None
    if base is None:
        return NetworkProfile(
            name=override.name,
            label=override.name,
            node_count=node_count,
            growth_gb_per_year=growth,
            node_class=_pick(override.node_class, "full"),
            in_subtotal=_pick(override.in_subtotal, True),
            quantified=_pick(override.quantified, True),
            notes=override.notes or "",
        )
    return replace(
        base,
        node_count=node_count or base.node_count,
        growth_gb_per_year=growth or base.growth_gb_per_year,
        node_class=_pick(override.node_class, base.node_class),
        in_subtotal=_pick(override.in_subtotal, base.in_subtotal),
        quantified=_pick(override.quantified, base.quantified),
        notes=_pick(override.notes, base.notes),
    )


def _apply_assumptions(base: CostAssumptions, override: AssumptionsContract) -> CostAssumptions:
    changes = {}
    for f in fields(AssumptionsContract):
        value = getattr(override, f.name)
        if value is None:
            continue
        if f.name in ("system_overhead", "overall_multiplier_band"):
            value = Interval.of(value)
        changes[f.name] = value
    return replace(base, **changes)


def apply_overrides(catalog: CostCatalog, contract: CatalogContract) -> CostCatalog:
    """Entries replace the default of the same name; new names are appended."""
    try:
        schemes = list(catalog.schemes)
        for override in contract.schemes:
            index = next(
                (i for i, s in enumerate(schemes) if _key(s.name) == _key(override.name)), None
            )
            scheme = _scheme_from_override(override, None if index is None else schemes[index])
            if index is None:
                schemes.append(scheme)
            else:
                schemes[index] = scheme

        profiles = list(catalog.profiles)
        for override in contract.profiles:
            index = next(
                (i for i, p in enumerate(profiles) if _key(p.name) == _key(override.name)), None
            )
            profile = _profile_from_override(
                override, None if index is None else profiles[index]
            )
            if index is None:
                profiles.append(profile)
            else:
                profiles[index] = profile

        assumptions = catalog.assumptions
        if contract.assumptions is not None:
            assumptions = _apply_assumptions(assumptions, contract.assumptions)
    except ValidationError as e:
        raise ConfigurationError(f"Invalid catalog override: {e}") from e

    return replace(
        catalog, schemes=tuple(schemes), profiles=tuple(profiles), assumptions=assumptions
    )


def load_catalog(path: Union[str, Path, None] = None) -> CostCatalog:
    """Defaults, overridden by ``path`` or by catalog.yaml in the config directory.

    An explicit path must exist; the config-directory file is optional.
    """
    if path is None:
        candidate = config_dir() / CATALOG_FILE_NAME
        if not candidate.exists():
            logger.debug(f"No {CATALOG_FILE_NAME} in {candidate.parent}; using defaults")
            return default_catalog()
        path = candidate
    contract = load_yaml_contract(path, CatalogContract)
    logger.info(
        f"Loaded catalog overrides from {path}: {len(contract.schemes)} schemes, "
        f"{len(contract.profiles)} profiles"
    )
    return apply_overrides(default_catalog(), contract)
