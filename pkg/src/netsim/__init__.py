"""Replicated-ledger network simulation and adversarial scenarios."""

from .attacks import AttackReport, AttackSuite, AttackVerdict, attack_kinds, run_attack_suite
from .nodes import Network, NodeClass, NodeCounts, NodeMetrics
from .scenario import (
    AdvanceEvent,
    AttackEvent,
    AttackKind,
    CommitEvent,
    LedgerParams,
    RevealEvent,
    SchemeKind,
    SchemeUnderTest,
    SimConfig,
    TransferEvent,
    load_scenario,
    parse_event,
    parse_scenario,
    scenario_accounts,
)
from .simulator import (
    AttackOutcome,
    FootprintComparison,
    ScenarioRunner,
    SimMetrics,
    footprint_per_auth,
    run_simulation,
)
from .sizing import (
    DEFAULT_HEADER_BYTES,
    SENSITIVITY_ENVELOPES,
    EnvelopeModel,
    FootprintRatio,
    SensitivityRow,
    footprint_ratio,
    footprint_sensitivity,
)
from .sweep import SweepOutcome, run_sweep, run_sweep_async

__all__ = [
    "AttackReport",
    "AttackSuite",
    "AttackVerdict",
    "attack_kinds",
    "run_attack_suite",
    "Network",
    "NodeClass",
    "NodeCounts",
    "NodeMetrics",
    "AdvanceEvent",
    "AttackEvent",
    "AttackKind",
    "CommitEvent",
    "LedgerParams",
    "RevealEvent",
    "SchemeKind",
    "SchemeUnderTest",
    "SimConfig",
    "TransferEvent",
    "load_scenario",
    "parse_event",
    "parse_scenario",
    "scenario_accounts",
    "AttackOutcome",
    "FootprintComparison",
    "ScenarioRunner",
    "SimMetrics",
    "footprint_per_auth",
    "run_simulation",
    "DEFAULT_HEADER_BYTES",
    "SENSITIVITY_ENVELOPES",
    "EnvelopeModel",
    "FootprintRatio",
    "SensitivityRow",
    "footprint_ratio",
    "footprint_sensitivity",
    "SweepOutcome",
    "run_sweep",
    "run_sweep_async",
]
