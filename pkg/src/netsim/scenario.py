"""Simulation configuration and scenario scripts.

A scenario names its accounts; keys are derived from the seed so the same
script can be replayed under commit-reveal or a modeled signature scheme.
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from ..costmodel.catalog import CostCatalog, load_catalog
from ..crypto import CommitMode, HashAlgId
from ..errors import ConfigurationError, ValidationError
from ..ledger import DEFAULT_COMMIT_TTL, DEFAULT_CONFIRMATION_DEPTH
from ..schemas.field_names import EventFields
from ..schemas.scenario_contract import ScenarioContract
from ..utils.contract_utils import convert_dict_to_dataclass, load_yaml_file
from .nodes import NodeCounts
from .sizing import DEFAULT_HEADER_BYTES, EnvelopeModel

logger = logging.getLogger(__name__)


class SchemeKind(str, Enum):
    CR = "cr"
    SIGNATURE = "signature"


class EventType(str, Enum):
    TRANSFER = "transfer"
    COMMIT = "commit"
    REVEAL = "reveal"
    ADVANCE = "advance"
    ATTACK = "attack"


class AttackKind(str, Enum):
    REPLAY_SPENT = "replay_spent"
    FRONT_RUN = "front_run"
    FORGE = "forge"


@dataclass(frozen=True)
class SchemeUnderTest:
    kind: SchemeKind = SchemeKind.CR
    mode: CommitMode = CommitMode.FULL
    name: str = "CR"
    auth_bytes: int = 0

    @property
    def label(self) -> str:
        if self.kind == SchemeKind.CR:
            return f"cr-{self.mode.name.lower()}"
        return self.name


@dataclass(frozen=True)
class LedgerParams:
    hash_algorithm: HashAlgId = HashAlgId.SHA256
    confirmation_depth: int = DEFAULT_CONFIRMATION_DEPTH
    commit_ttl: int = DEFAULT_COMMIT_TTL


@dataclass(frozen=True)
class TransferEvent:
    sender: str
    recipient: str
    amount: int


@dataclass(frozen=True)
class CommitEvent:
    account: str
    recipient: str
    amount: int
    label: str


@dataclass(frozen=True)
class RevealEvent:
    label: str


@dataclass(frozen=True)
class AdvanceEvent:
    blocks: int


@dataclass(frozen=True)
class AttackEvent:
    kind: AttackKind
    target: str


Event = Union[TransferEvent, CommitEvent, RevealEvent, AdvanceEvent, AttackEvent]


@dataclass(frozen=True)
class SimConfig:
    name: str = "scenario"
    seed: int = 0
    nodes: NodeCounts = field(default_factory=NodeCounts)
    scheme: SchemeUnderTest = field(default_factory=SchemeUnderTest)
    envelope: EnvelopeModel = field(default_factory=EnvelopeModel)
    ledger: LedgerParams = field(default_factory=LedgerParams)
    accounts: Tuple[Tuple[str, int], ...] = ()
    events: Tuple[Event, ...] = ()

    def with_nodes(self, **counts: int) -> "SimConfig":
        return replace(self, nodes=replace(self.nodes, **counts))

    def with_scheme(self, scheme: SchemeUnderTest) -> "SimConfig":
        return replace(self, scheme=scheme)


def _require(data: Dict[str, Any], key: EventFields, index: int) -> Any:
    if key.value not in data:
        raise ConfigurationError(f"Event {index}: missing '{key.value}'")
    return data[key.value]


def _amount(value: Any, index: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
        raise ConfigurationError(f"Event {index}: amount must be a positive integer")
    return value


def _name(value: Any, index: int) -> str:
    if not isinstance(value, str) or not value:
        raise ConfigurationError(f"Event {index}: account names must be non-empty strings")
    return value


_EVENT_KEYS = {
    EventType.TRANSFER: {EventFields.FROM, EventFields.TO, EventFields.AMOUNT},
    EventType.COMMIT: {EventFields.ACCOUNT, EventFields.TO, EventFields.AMOUNT, EventFields.LABEL},
    EventType.REVEAL: {EventFields.LABEL},
    EventType.ADVANCE: {EventFields.BLOCKS},
    EventType.ATTACK: {EventFields.KIND, EventFields.TARGET},
}


def parse_event(data: Dict[str, Any], index: int = 0) -> Event:
    if not isinstance(data, dict):
        raise ConfigurationError(f"Event {index}: expected a mapping")
    try:
        event_type = EventType(_require(data, EventFields.TYPE, index))
    except ValueError:
        raise ConfigurationError(
            f"Event {index}: unknown type '{data.get(EventFields.TYPE.value)}'"
        ) from None
    allowed = {f.value for f in _EVENT_KEYS[event_type]} | {EventFields.TYPE.value}
    unknown = sorted(set(data) - allowed)
    if unknown:
        raise ConfigurationError(f"Event {index}: unknown keys {', '.join(unknown)}")

    if event_type == EventType.TRANSFER:
        return TransferEvent(
            sender=_name(_require(data, EventFields.FROM, index), index),
            recipient=_name(_require(data, EventFields.TO, index), index),
            amount=_amount(_require(data, EventFields.AMOUNT, index), index),
        )
    if event_type == EventType.COMMIT:
        return CommitEvent(
            account=_name(_require(data, EventFields.ACCOUNT, index), index),
            recipient=_name(_require(data, EventFields.TO, index), index),
            amount=_amount(_require(data, EventFields.AMOUNT, index), index),
            label=_name(_require(data, EventFields.LABEL, index), index),
        )
    if event_type == EventType.REVEAL:
        return RevealEvent(label=_name(_require(data, EventFields.LABEL, index), index))
    if event_type == EventType.ADVANCE:
        blocks = _require(data, EventFields.BLOCKS, index)
        if isinstance(blocks, bool) or not isinstance(blocks, int) or blocks < 1:
            raise ConfigurationError(f"Event {index}: blocks must be an integer >= 1")
        return AdvanceEvent(blocks=blocks)
    try:
        kind = AttackKind(_require(data, EventFields.KIND, index))
    except ValueError:
        raise ConfigurationError(
            f"Event {index}: unknown attack kind '{data.get(EventFields.KIND.value)}'"
        ) from None
    return AttackEvent(kind=kind, target=_name(_require(data, EventFields.TARGET, index), index))


def validate_script(accounts: Tuple[Tuple[str, int], ...], events: Tuple[Event, ...]) -> None:
    """Static checks: known names, unique commit labels, reveals after commits."""
    known = {name for name, _ in accounts}
    labels = set()
    revealed = set()
    for index, event in enumerate(events):
        if isinstance(event, TransferEvent):
            if event.sender not in known:
                raise ConfigurationError(f"Event {index}: unknown sender '{event.sender}'")
            if event.recipient == event.sender:
                raise ConfigurationError(f"Event {index}: transfer to self")
            known.add(event.recipient)
        elif isinstance(event, CommitEvent):
            if event.account not in known:
                raise ConfigurationError(f"Event {index}: unknown account '{event.account}'")
            if event.label in labels:
                raise ConfigurationError(f"Event {index}: duplicate commit label '{event.label}'")
            labels.add(event.label)
            known.add(event.recipient)
        elif isinstance(event, RevealEvent):
            if event.label not in labels:
                raise ConfigurationError(
                    f"Event {index}: reveal of unknown commit label '{event.label}'"
                )
            if event.label in revealed:
                raise ConfigurationError(f"Event {index}: commit '{event.label}' revealed twice")
            revealed.add(event.label)
        elif isinstance(event, AttackEvent):
            if event.target not in known:
                raise ConfigurationError(f"Event {index}: unknown attack target '{event.target}'")


def resolve_scheme(
    kind: str, mode: str, name: Optional[str], auth_bytes: Optional[int], catalog: CostCatalog
) -> SchemeUnderTest:
    try:
        scheme_kind = SchemeKind(kind)
    except ValueError:
        raise ConfigurationError(f"Unknown scheme kind '{kind}'") from None
    if scheme_kind == SchemeKind.CR:
        try:
            return SchemeUnderTest(kind=scheme_kind, mode=CommitMode.parse(mode))
        except ValidationError as e:
            raise ConfigurationError(str(e)) from e
    if not name:
        raise ConfigurationError("Signature schemes need a catalog name")
    scheme = catalog.scheme(name)
    resolved = scheme.modeled_auth_bytes if auth_bytes is None else auth_bytes
    if resolved < 0:
        raise ConfigurationError("auth_bytes must be non-negative")
    return SchemeUnderTest(kind=scheme_kind, name=scheme.name, auth_bytes=resolved)


def config_from_contract(
    contract: ScenarioContract, catalog: Optional[CostCatalog] = None
) -> SimConfig:
    catalog = catalog or load_catalog()
    scheme = resolve_scheme(
        contract.scheme.kind,
        contract.scheme.mode,
        contract.scheme.name,
        contract.scheme.auth_bytes,
        catalog,
    )
    for name, balance in contract.accounts.items():
        if isinstance(balance, bool) or not isinstance(balance, int) or balance < 0:
            raise ConfigurationError(f"Account '{name}': balance must be a non-negative integer")
    accounts = tuple(contract.accounts.items())
    events = tuple(parse_event(data, i) for i, data in enumerate(contract.events))
    validate_script(accounts, events)

    ledger = contract.ledger
    if ledger.confirmation_depth < 1 or ledger.commit_ttl <= ledger.confirmation_depth:
        raise ConfigurationError("Ledger needs confirmation_depth >= 1 and commit_ttl > depth")
    return SimConfig(
        name=contract.name,
        seed=contract.seed,
        nodes=NodeCounts(
            light=contract.nodes.light, full=contract.nodes.full, archive=contract.nodes.archive
        ),
        scheme=scheme,
        envelope=EnvelopeModel(
            envelope_bytes=contract.envelope_bytes,
            header_bytes=contract.header_bytes
            if contract.header_bytes is not None
            else DEFAULT_HEADER_BYTES,
        ),
        ledger=LedgerParams(
            hash_algorithm=HashAlgId.parse(ledger.hash_algorithm),
            confirmation_depth=ledger.confirmation_depth,
            commit_ttl=ledger.commit_ttl,
        ),
        accounts=accounts,
        events=events,
    )


def parse_scenario(data: Dict[str, Any], catalog: Optional[CostCatalog] = None) -> SimConfig:
    contract = convert_dict_to_dataclass(ScenarioContract, data or {})
    return config_from_contract(contract, catalog)


def load_scenario(path: Union[str, Path], catalog: Optional[CostCatalog] = None) -> SimConfig:
    config = parse_scenario(load_yaml_file(path), catalog)
    logger.info(
        f"Loaded scenario '{config.name}' from {path}: {len(config.events)} events, "
        f"scheme {config.scheme.label}"
    )
    return config


def scenario_accounts(config: SimConfig) -> List[str]:
    """Every account name the script touches, in first-mention order."""
    names = [name for name, _ in config.accounts]
    for event in config.events:
        for name in (
            getattr(event, "sender", None),
            getattr(event, "account", None),
            getattr(event, "recipient", None),
        ):
            if name and name not in names:
                names.append(name)
    return names
