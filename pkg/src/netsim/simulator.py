"""Deterministic replicated-ledger simulation.

Every submitted transaction is relayed once to each storing node; every
accepted one is stored by each Full and Archive node at its modeled size.
Light nodes only ever see block headers.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from ..costmodel.catalog import CostCatalog, load_catalog
from ..crypto import (
    Action,
    AuthId,
    CommitMode,
    Preimage,
    TxKind,
    auth_id,
    derive_preimage,
    make_commit,
    make_reveal,
)
from ..errors import ConfigurationError
from ..ledger import (
    AccountStatus,
    ApplyResult,
    LedgerConfig,
    LedgerState,
    TxEnvelope,
    advance_height,
    apply_transaction,
    total_supply,
)
from ..schemas.field_names import MetricsFields
from ..utils.session_context import log_payload
from .attacks import forged_lock
from .nodes import Network, NodeMetrics
from .scenario import (
    AdvanceEvent,
    AttackEvent,
    AttackKind,
    CommitEvent,
    RevealEvent,
    SchemeKind,
    SchemeUnderTest,
    SimConfig,
    TransferEvent,
    scenario_accounts,
)

logger = logging.getLogger(__name__)

BASELINE_SCHEME = "ECDSA"


@dataclass(frozen=True)
class AttackOutcome:
    kind: AttackKind
    target: str
    height: int
    rejected: bool
    reason: str
    griefing: bool = False


@dataclass(frozen=True)
class SimMetrics:
    scenario: str
    scheme: str
    nodes: Tuple[NodeMetrics, ...]
    total_bytes_stored: int
    total_bytes_transmitted: int
    accepted_tx_bytes: int
    accepted_tx_count: int
    rejected_tx_count: int
    authorization_events: int
    authorized_tx_bytes: int
    declined_transfers: int
    wire_bytes: int
    rejected_attacks: int
    successful_attacks: int
    griefing_attacks: int
    attacks: Tuple[AttackOutcome, ...]
    blocks: int
    balances: Tuple[Tuple[str, int], ...]
    total_supply: int

    @property
    def footprint_per_auth(self) -> Optional[float]:
        """Bytes per completed authorization, or None without any.

        Only transactions of completed flows count: a commit whose reveal was
        rejected, or that was never revealed, is stored but authorizes nothing.
        """
        if self.authorization_events == 0:
            return None
        return self.authorized_tx_bytes / self.authorization_events

    @property
    def storing_nodes(self) -> int:
        return sum(1 for n in self.nodes if n.node_class.stores_tx_bodies)

    def to_dict(self) -> Dict[str, Any]:
        return {
            MetricsFields.SCHEME.value: self.scheme,
            MetricsFields.TOTAL_BYTES_STORED.value: self.total_bytes_stored,
            MetricsFields.TOTAL_BYTES_TRANSMITTED.value: self.total_bytes_transmitted,
            MetricsFields.ACCEPTED_TX_BYTES.value: self.accepted_tx_bytes,
            MetricsFields.ACCEPTED_TX_COUNT.value: self.accepted_tx_count,
            MetricsFields.REJECTED_TX_COUNT.value: self.rejected_tx_count,
            MetricsFields.AUTHORIZATION_EVENTS.value: self.authorization_events,
            MetricsFields.FOOTPRINT_PER_AUTH.value: self.footprint_per_auth,
            MetricsFields.AUTHORIZED_TX_BYTES.value: self.authorized_tx_bytes,
            MetricsFields.DECLINED_TRANSFERS.value: self.declined_transfers,
            MetricsFields.WIRE_BYTES.value: self.wire_bytes,
            MetricsFields.REJECTED_ATTACKS.value: self.rejected_attacks,
            MetricsFields.SUCCESSFUL_ATTACKS.value: self.successful_attacks,
            MetricsFields.GRIEFING_ATTACKS.value: self.griefing_attacks,
            MetricsFields.BLOCKS.value: self.blocks,
            MetricsFields.NODES.value: {
                n.node_id: {
                    "class": n.node_class.value,
                    "bytes_stored": n.bytes_stored,
                    "bytes_received": n.bytes_received,
                    "snapshots": n.snapshots,
                }
                for n in self.nodes
            },
            MetricsFields.BALANCES.value: dict(self.balances),
        }

    def summary_row(self) -> Dict[str, Any]:
        """Flat row for CSV output; per-node detail is omitted."""
        return {
            "scenario": self.scenario,
            "scheme": self.scheme,
            "full_nodes": sum(1 for n in self.nodes if n.node_class.value == "full"),
            "archive_nodes": sum(1 for n in self.nodes if n.node_class.value == "archive"),
            "light_nodes": sum(1 for n in self.nodes if n.node_class.value == "light"),
            MetricsFields.TOTAL_BYTES_STORED.value: self.total_bytes_stored,
            MetricsFields.TOTAL_BYTES_TRANSMITTED.value: self.total_bytes_transmitted,
            MetricsFields.ACCEPTED_TX_BYTES.value: self.accepted_tx_bytes,
            MetricsFields.ACCEPTED_TX_COUNT.value: self.accepted_tx_count,
            MetricsFields.REJECTED_TX_COUNT.value: self.rejected_tx_count,
            MetricsFields.AUTHORIZATION_EVENTS.value: self.authorization_events,
            MetricsFields.DECLINED_TRANSFERS.value: self.declined_transfers,
            MetricsFields.REJECTED_ATTACKS.value: self.rejected_attacks,
            MetricsFields.SUCCESSFUL_ATTACKS.value: self.successful_attacks,
            MetricsFields.GRIEFING_ATTACKS.value: self.griefing_attacks,
        }


@dataclass
class _PendingCommit:
    account: str
    recipient: str
    amount: int
    x: Optional[Preimage] = None
    action: Optional[Action] = None
    commit_bytes: int = 0


@dataclass
class _Counters:
    accepted_tx_bytes: int = 0
    accepted_tx_count: int = 0
    rejected_tx_count: int = 0
    authorization_events: int = 0
    authorized_tx_bytes: int = 0
    declined_transfers: int = 0
    wire_bytes: int = 0
    rejected_attacks: int = 0
    successful_attacks: int = 0
    griefing_attacks: int = 0
    blocks: int = 0
    attacks: list = field(default_factory=list)


class ScenarioRunner:
    """Executes one SimConfig. Single-threaded; create a new runner per run."""

    def __init__(self, config: SimConfig):
        self.config = config
        self.scheme: SchemeUnderTest = config.scheme
        self.alg = config.ledger.hash_algorithm
        self.envelope = config.envelope
        self.network = Network(config.nodes)
        self.counters = _Counters()
        self.pending: Dict[str, _PendingCommit] = {}

        self._rng = random.Random(config.seed)
        self._adversary_rng = random.Random(f"adversary:{config.seed}")
        self.names = scenario_accounts(config)
        self.keys: Dict[str, Preimage] = {
            name: derive_preimage(self._rng.randbytes(32)) for name in self.names
        }
        self._adversary = derive_preimage(self._adversary_rng.randbytes(32))
        # Envelopes and preimages that became public on accepted reveals, per name
        self.revealed: Dict[str, Tuple[Preimage, TxEnvelope]] = {}

        if self.scheme.kind == SchemeKind.CR:
            self.state = LedgerState.genesis(
                LedgerConfig(
                    hash_algorithm=self.alg,
                    confirmation_depth=config.ledger.confirmation_depth,
                    commit_ttl=config.ledger.commit_ttl,
                    allocations=tuple(
                        (self.auth_of(name), balance) for name, balance in config.accounts
                    ),
                )
            )
        self.balances: Dict[str, int] = {name: 0 for name in self.names}
        self.balances.update(dict(config.accounts))

    def auth_of(self, name: str) -> AuthId:
        return auth_id(self.keys[name], self.alg)

    # Submission

    def _submit_cr(self, env: TxEnvelope, modeled_size: int) -> ApplyResult:
        result = apply_transaction(self.state, env)
        self.network.submit(modeled_size, result.accepted)
        if result.accepted:
            self.state = result.state
            self.counters.accepted_tx_bytes += modeled_size
            self.counters.accepted_tx_count += 1
            self.counters.wire_bytes += env.size_bytes
        else:
            self.counters.rejected_tx_count += 1
        log_payload(
            "Submitted transaction",
            {
                "kind": env.kind.name.lower(),
                "account": env.account.hex()[:16],
                "size_bytes": modeled_size,
                "height": self.state.height,
                "outcome": result.label,
            },
        )
        return result

    def _submit_signed(self, sender: str, recipient: str, amount: int) -> bool:
        size = self.envelope.signed_tx_bytes(self.scheme.auth_bytes)
        accepted = self.balances[sender] >= amount
        self.network.submit(size, accepted)
        if accepted:
            self.balances[sender] -= amount
            self.balances[recipient] += amount
            self.counters.accepted_tx_bytes += size
            self.counters.accepted_tx_count += 1
            self.counters.wire_bytes += size
            self.counters.authorization_events += 1
            self.counters.authorized_tx_bytes += size
        else:
            self.counters.rejected_tx_count += 1
        log_payload(
            "Submitted signed transaction",
            {"from": sender, "to": recipient, "size_bytes": size, "accepted": accepted},
        )
        return accepted

    def _advance(self, blocks: int) -> None:
        if self.scheme.kind == SchemeKind.CR:
            self.state = advance_height(self.state, blocks)
        self.network.produce_blocks(blocks, self.envelope.header_bytes)
        self.counters.blocks += blocks

    # Commit-reveal steps

    def _commit(self, pending: _PendingCommit) -> ApplyResult:
        pending.x = self.keys[pending.account]
        pending.action = Action(dest=self.auth_of(pending.recipient), amount=pending.amount)
        commitment = make_commit(pending.x, pending.action, self.scheme.mode, self.alg)
        env = TxEnvelope.for_commit(commitment, account=self.auth_of(pending.account))
        size = self.envelope.commit_bytes(self.scheme.mode)
        result = self._submit_cr(env, size)
        if result.accepted:
            pending.commit_bytes = size
        return result

    def _reveal(self, pending: _PendingCommit) -> ApplyResult:
        reveal, next_x = make_reveal(
            pending.x, pending.action, self._rng.randbytes(32), self.alg
        )
        account = auth_id(pending.x, self.alg)
        env = TxEnvelope.for_reveal(account, reveal)
        size = self.envelope.reveal_bytes()
        result = self._submit_cr(env, size)
        if result.accepted:
            self.counters.authorization_events += 1
            self.counters.authorized_tx_bytes += pending.commit_bytes + size
            self.revealed[pending.account] = (pending.x, env)
            self.keys[pending.account] = next_x
        return result

    # Events

    def _spendable(self, name: str) -> int:
        if self.scheme.kind == SchemeKind.SIGNATURE:
            return self.balances[name]
        account = self.state.account(self.auth_of(name))
        return account.balance if account else 0

    def _on_transfer(self, event: TransferEvent) -> None:
        # Wallets never authorize an overdraft.
        balance = self._spendable(event.sender)
        if event.amount > balance:
            self.counters.declined_transfers += 1
            logger.info(
                f"Declined transfer of {event.amount} from '{event.sender}' (balance {balance})"
            )
            return
        if self.scheme.kind == SchemeKind.SIGNATURE:
            self._submit_signed(event.sender, event.recipient, event.amount)
            return
        pending = _PendingCommit(event.sender, event.recipient, event.amount)
        if not self._commit(pending).accepted:
            return
        self._advance(self.config.ledger.confirmation_depth)
        self._reveal(pending)

    def _on_commit(self, event: CommitEvent) -> None:
        pending = _PendingCommit(event.account, event.recipient, event.amount)
        self.pending[event.label] = pending
        if self.scheme.kind == SchemeKind.CR:
            self._commit(pending)

    def _on_reveal(self, event: RevealEvent) -> None:
        pending = self.pending.pop(event.label)
        if self.scheme.kind == SchemeKind.SIGNATURE:
            self._submit_signed(pending.account, pending.recipient, pending.amount)
        else:
            self._reveal(pending)

    def _adversary_action(self, account: AuthId) -> Action:
        balance = self.state.account(account).balance if self.state.account(account) else 0
        return Action(dest=auth_id(self._adversary, self.alg), amount=max(balance, 1))

    def _attack_envelope(self, event: AttackEvent) -> Tuple[TxEnvelope, int]:
        target = event.target
        if event.kind == AttackKind.REPLAY_SPENT:
            if target not in self.revealed:
                raise ConfigurationError(
                    f"replay_spent on '{target}' before any of its reveals was accepted"
                )
            return self.revealed[target][1], self.envelope.reveal_bytes()

        if event.kind == AttackKind.FRONT_RUN:
            current = self.state.account(self.auth_of(target))
            if current is not None and current.status == AccountStatus.LOCKED:
                # The victim's reveal is in flight, so its preimage is public.
                x = self.keys[target]
            elif target in self.revealed:
                x = self.revealed[target][0]
            else:
                raise ConfigurationError(
                    f"front_run on '{target}' needs a pending commit or an earlier reveal"
                )
            account = auth_id(x, self.alg)
            commitment = make_commit(x, self._adversary_action(account), CommitMode.FULL, self.alg)
            return (
                TxEnvelope.for_commit(commitment, account=account),
                self.envelope.commit_bytes(CommitMode.FULL),
            )

        # Forge: the adversary knows only the identifier. An open account can be
        # locked with a commit nobody can open; a locked one only faces a guess.
        account = self.auth_of(target)
        current = self.state.account(account)
        if current is not None and current.status == AccountStatus.OPEN:
            return (
                forged_lock(account, self.scheme.mode, self._adversary_rng.randbytes(32)),
                self.envelope.commit_bytes(self.scheme.mode),
            )
        guess = derive_preimage(self._adversary_rng.randbytes(32))
        reveal, _ = make_reveal(
            guess,
            self._adversary_action(account),
            self._adversary_rng.randbytes(32),
            self.alg,
        )
        return TxEnvelope.for_reveal(account, reveal), self.envelope.reveal_bytes()

    def _on_attack(self, event: AttackEvent) -> None:
        if self.scheme.kind == SchemeKind.SIGNATURE:
            logger.info(f"Skipping {event.kind.value} attack: only commit-reveal runs evaluate attacks")
            return
        env, size = self._attack_envelope(event)
        # Evaluated against a snapshot; the honest chain never absorbs an attack.
        result = apply_transaction(self.state, env)
        self.network.submit(size, False)
        outcome = AttackOutcome(
            kind=event.kind,
            target=event.target,
            height=self.state.height,
            rejected=not result.accepted,
            reason=result.label,
            griefing=result.accepted and env.kind == TxKind.COMMIT,
        )
        self.counters.attacks.append(outcome)
        if result.accepted:
            self.counters.successful_attacks += 1
            if outcome.griefing:
                self.counters.griefing_attacks += 1
            logger.warning(f"Attack {event.kind.value} on '{event.target}' was accepted")
        else:
            self.counters.rejected_attacks += 1
        log_payload(
            "Attack evaluated",
            {"kind": event.kind.value, "target": event.target, "outcome": result.label},
        )

    def run(self) -> SimMetrics:
        handlers = {
            TransferEvent: self._on_transfer,
            CommitEvent: self._on_commit,
            RevealEvent: self._on_reveal,
            AdvanceEvent: lambda e: self._advance(e.blocks),
            AttackEvent: self._on_attack,
        }
        for event in self.config.events:
            handlers[type(event)](event)
        return self._metrics()

    def _final_balances(self) -> Tuple[Tuple[str, int], ...]:
        if self.scheme.kind == SchemeKind.SIGNATURE:
            return tuple((name, self.balances[name]) for name in self.names)
        balances = []
        for name in self.names:
            account = self.state.account(self.auth_of(name))
            balances.append((name, account.balance if account else 0))
        return tuple(balances)

    def _metrics(self) -> SimMetrics:
        c = self.counters
        balances = self._final_balances()
        supply = (
            total_supply(self.state)
            if self.scheme.kind == SchemeKind.CR
            else sum(self.balances.values())
        )
        return SimMetrics(
            scenario=self.config.name,
            scheme=self.scheme.label,
            nodes=self.network.snapshot(),
            total_bytes_stored=self.network.total_bytes_stored,
            total_bytes_transmitted=self.network.total_bytes_transmitted,
            accepted_tx_bytes=c.accepted_tx_bytes,
            accepted_tx_count=c.accepted_tx_count,
            rejected_tx_count=c.rejected_tx_count,
            authorization_events=c.authorization_events,
            authorized_tx_bytes=c.authorized_tx_bytes,
            declined_transfers=c.declined_transfers,
            wire_bytes=c.wire_bytes,
            rejected_attacks=c.rejected_attacks,
            successful_attacks=c.successful_attacks,
            griefing_attacks=c.griefing_attacks,
            attacks=tuple(c.attacks),
            blocks=c.blocks,
            balances=balances,
            total_supply=supply,
        )


def run_simulation(config: SimConfig) -> SimMetrics:
    metrics = ScenarioRunner(config).run()
    logger.info(
        f"Simulated '{config.name}' under {metrics.scheme}: "
        f"{metrics.accepted_tx_count} accepted txs, {metrics.total_bytes_stored} bytes stored"
    )
    return metrics


@dataclass(frozen=True)
class FootprintComparison:
    cr: SimMetrics
    baseline: SimMetrics
    envelope_bytes: int
    baseline_auth_bytes: int

    @property
    def cr_bytes_per_auth(self) -> float:
        return self.cr.footprint_per_auth

    @property
    def baseline_bytes_per_auth(self) -> float:
        return self.baseline.footprint_per_auth

    @property
    def ratio(self) -> float:
        return self.cr_bytes_per_auth / self.baseline_bytes_per_auth


def footprint_per_auth(
    config: SimConfig, catalog: Optional[CostCatalog] = None
) -> FootprintComparison:
    """Run the script under commit-reveal and under modeled ECDSA and compare bytes per authorization."""
    catalog = catalog or load_catalog()
    mode = config.scheme.mode if config.scheme.kind == SchemeKind.CR else CommitMode.FULL
    baseline_spec = catalog.scheme(BASELINE_SCHEME)
    cr = run_simulation(config.with_scheme(SchemeUnderTest(kind=SchemeKind.CR, mode=mode)))
    baseline = run_simulation(
        config.with_scheme(
            SchemeUnderTest(
                kind=SchemeKind.SIGNATURE,
                name=baseline_spec.name,
                auth_bytes=baseline_spec.modeled_auth_bytes,
            )
        )
    )
    if baseline.authorization_events == 0:
        raise ConfigurationError(
            f"EmptyBaseline: scenario '{config.name}' has no accepted baseline authorization"
        )
    if cr.authorization_events == 0:
        raise ConfigurationError(
            f"Scenario '{config.name}' completes no commit-reveal authorization"
        )
    return FootprintComparison(
        cr=cr,
        baseline=baseline,
        envelope_bytes=config.envelope.envelope_bytes,
        baseline_auth_bytes=baseline_spec.modeled_auth_bytes,
    )
