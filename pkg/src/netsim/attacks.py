"""Adversarial interleavings against a single honest transfer.

The victim's flow is commit, `confirmation_depth` empty blocks, reveal.
For each attack kind the adversary's moves are inserted at every position
in that flow where the adversary could know enough to make them, and every
resulting ledger outcome is recorded.

A forger who knows only the victim's identifier can still commit against it
with a digest nobody can open. That never moves funds, but on an open
account it locks the victim out until the commit expires, which the suite
reports as griefing.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from ..crypto import (
    Action,
    AuthId,
    Commitment,
    CommitMode,
    Digest,
    auth_id,
    derive_preimage,
    make_commit,
    make_reveal,
)
from ..errors import SecurityRegressionError
from ..ledger import (
    ApplyResult,
    LedgerConfig,
    LedgerState,
    TxEnvelope,
    advance_height,
    apply_transaction,
)
from .scenario import AttackEvent, AttackKind, SchemeKind, SimConfig

logger = logging.getLogger(__name__)

DEFAULT_VICTIM_BALANCE = 100
DEFAULT_TRANSFER_AMOUNT = 10

_COMMIT, _ADVANCE, _REVEAL = "commit", "advance", "reveal"

_FRONT_RUN_COMMIT = frozenset({"AccountLocked", "AccountSpent"})
_FRONT_RUN_REVEAL = frozenset(
    {
        "VerifyFailed(BindMismatch)",
        "ReplaySpentCommitment",
        "TooEarly",
        "NoPendingCommit",
    }
)
_FORGE_COMMIT = frozenset({"AddrMismatch", "AccountLocked", "AccountSpent"})
# A lock needs only the public identifier; on an open account it is accepted.
_FORGE_LOCK = frozenset({"Accepted", "AccountLocked", "AccountSpent"})
_FORGE_REVEAL = frozenset(
    {
        "VerifyFailed(AddrMismatch)",
        "VerifyFailed(BindMismatch)",
        "NoPendingCommit",
        "TooEarly",
        "ReplaySpentCommitment",
    }
)


def forged_lock(account: AuthId, mode: CommitMode, junk: bytes) -> TxEnvelope:
    """Commit on someone else's identifier with a digest no preimage opens.

    Nothing is ever revealed against it; it only holds the account locked
    until the commit expires.
    """
    if mode == CommitMode.COMPACT:
        commitment = Commitment(mode=mode, addr_hash=account, compact_hash=Digest(junk))
    else:
        commitment = Commitment(mode=mode, addr_hash=account, bind_hash=Digest(junk))
    return TxEnvelope.for_commit(commitment, account=account)


@dataclass(frozen=True)
class AttackVerdict:
    kind: AttackKind
    ordering: str
    moves: Tuple[str, ...]
    rejected: bool
    expected: bool
    victim_completed: bool
    griefing: bool = False

    def to_dict(self) -> Dict[str, object]:
        return {
            "kind": self.kind.value,
            "ordering": self.ordering,
            "moves": list(self.moves),
            "rejected": self.rejected,
            "expected": self.expected,
            "victim_completed": self.victim_completed,
            "griefing": self.griefing,
        }


@dataclass(frozen=True)
class AttackReport:
    mode: CommitMode
    verdicts: Tuple[AttackVerdict, ...]

    @property
    def all_rejected(self) -> bool:
        return all(v.rejected for v in self.verdicts)

    @property
    def regressions(self) -> List[AttackVerdict]:
        return [v for v in self.verdicts if not (v.rejected and v.expected)]

    def counts(self) -> Dict[str, int]:
        return {
            "interleavings": len(self.verdicts),
            "rejected": sum(1 for v in self.verdicts if v.rejected),
            "successful": sum(1 for v in self.verdicts if not v.rejected),
            "griefing": sum(1 for v in self.verdicts if v.griefing),
        }


@dataclass
class _Move:
    role: str
    envelope: TxEnvelope
    expected: FrozenSet[str]


@dataclass
class _Trace:
    state: LedgerState
    labels: List[str] = field(default_factory=list)
    unexpected: bool = False
    adversary_revealed: bool = False
    griefing: bool = False
    victim_completed: bool = False


class AttackSuite:
    """Enumerates interleavings for one victim and one adversary."""

    def __init__(self, config: SimConfig):
        self.config = config
        self.alg = config.ledger.hash_algorithm
        self.mode = config.scheme.mode if config.scheme.kind == SchemeKind.CR else CommitMode.FULL
        self.depth = config.ledger.confirmation_depth

        rng = random.Random(config.seed)
        self.victim_x = derive_preimage(rng.randbytes(32))
        self.recipient_x = derive_preimage(rng.randbytes(32))
        self.next_seed = rng.randbytes(32)
        adversary_rng = random.Random(f"adversary:{config.seed}")
        self.adversary_x = derive_preimage(adversary_rng.randbytes(32))
        self.guess_x = derive_preimage(adversary_rng.randbytes(32))
        self.guess_seed = adversary_rng.randbytes(32)
        self.lock_junk = adversary_rng.randbytes(32)

        self.victim = auth_id(self.victim_x, self.alg)
        balances = [b for _, b in config.accounts if b > 0]
        self.balance = balances[0] if balances else DEFAULT_VICTIM_BALANCE
        self.amount = min(DEFAULT_TRANSFER_AMOUNT, self.balance)

        action = Action(dest=auth_id(self.recipient_x, self.alg), amount=self.amount)
        commitment = make_commit(self.victim_x, action, self.mode, self.alg)
        self.victim_commit = TxEnvelope.for_commit(commitment, account=self.victim)
        reveal, _ = make_reveal(self.victim_x, action, self.next_seed, self.alg)
        self.victim_reveal = TxEnvelope.for_reveal(self.victim, reveal)

        self.steps = [_COMMIT] + [_ADVANCE] * self.depth + [_REVEAL]

    def genesis(self) -> LedgerState:
        return LedgerState.genesis(
            LedgerConfig(
                hash_algorithm=self.alg,
                confirmation_depth=self.depth,
                commit_ttl=self.config.ledger.commit_ttl,
                allocations=((self.victim, self.balance),),
            )
        )

    def _theft(self) -> Action:
        return Action(dest=auth_id(self.adversary_x, self.alg), amount=self.amount)

    def _front_run_moves(self) -> List[_Move]:
        # The victim's reveal is public, so x is known.
        theft = self._theft()
        commitment = make_commit(self.victim_x, theft, CommitMode.FULL, self.alg)
        reveal, _ = make_reveal(self.victim_x, theft, self.guess_seed, self.alg)
        return [
            _Move("commit", TxEnvelope.for_commit(commitment, account=self.victim), _FRONT_RUN_COMMIT),
            _Move("reveal", TxEnvelope.for_reveal(self.victim, reveal), _FRONT_RUN_REVEAL),
        ]

    def _forge_moves(self) -> List[_Move]:
        theft = self._theft()
        commitment = make_commit(self.guess_x, theft, self.mode, self.alg)
        reveal, _ = make_reveal(self.guess_x, theft, self.guess_seed, self.alg)
        commit_expected = _FORGE_COMMIT
        if self.mode == CommitMode.COMPACT:
            # Compact commits carry no separate address digest to check.
            commit_expected = commit_expected | {"Accepted"}
        return [
            _Move("commit", TxEnvelope.for_commit(commitment, account=self.victim), commit_expected),
            _Move("lock", forged_lock(self.victim, self.mode, self.lock_junk), _FORGE_LOCK),
            _Move("reveal", TxEnvelope.for_reveal(self.victim, reveal), _FORGE_REVEAL),
        ]

    def _replay_moves(self) -> List[_Move]:
        return [
            _Move("reveal", self.victim_reveal, frozenset({"ReplaySpentCommitment"})),
            _Move("commit", self.victim_commit, frozenset({"AccountSpent"})),
        ]

    def positions(self, kind: AttackKind) -> List[int]:
        """Insertion points: index p means 'just before step p'; len(steps) means after the flow."""
        last = len(self.steps)
        if kind == AttackKind.REPLAY_SPENT:
            return [last]
        if kind == AttackKind.FRONT_RUN:
            return [last - 1, last]
        return list(range(last + 1))

    def moves(self, kind: AttackKind) -> List[_Move]:
        if kind == AttackKind.REPLAY_SPENT:
            return self._replay_moves()
        if kind == AttackKind.FRONT_RUN:
            return self._front_run_moves()
        return self._forge_moves()

    def _ordering(self, position: int) -> str:
        if position == len(self.steps):
            return "after victim reveal"
        if self.steps[position] == _REVEAL:
            return "before victim reveal (reveal in mempool)"
        if position == 0:
            return "before victim commit"
        return f"after victim commit, {position - 1} of {self.depth} blocks"

    def _play_adversary(self, trace: _Trace, moves: List[_Move]) -> None:
        for move in moves:
            result = apply_transaction(trace.state, move.envelope)
            label = result.label
            trace.labels.append(f"{move.role}:{label}")
            if label not in move.expected:
                trace.unexpected = True
            if result.accepted:
                trace.state = result.state
                if move.role == "reveal":
                    trace.adversary_revealed = True
                else:
                    trace.griefing = True

    def _play_victim(self, trace: _Trace, step: str) -> None:
        if step == _ADVANCE:
            trace.state = advance_height(trace.state, 1)
            return
        env = self.victim_commit if step == _COMMIT else self.victim_reveal
        result: ApplyResult = apply_transaction(trace.state, env)
        if result.accepted:
            trace.state = result.state
            if step == _REVEAL:
                trace.victim_completed = True

    def run_interleaving(self, kind: AttackKind, position: int) -> AttackVerdict:
        trace = _Trace(state=self.genesis())
        moves = self.moves(kind)
        for index, step in enumerate(self.steps):
            if index == position:
                self._play_adversary(trace, moves)
            self._play_victim(trace, step)
        if position == len(self.steps):
            self._play_adversary(trace, moves)

        return AttackVerdict(
            kind=kind,
            ordering=self._ordering(position),
            moves=tuple(trace.labels),
            rejected=not trace.adversary_revealed,
            expected=not trace.unexpected,
            victim_completed=trace.victim_completed,
            griefing=trace.griefing,
        )


def attack_kinds(config: SimConfig) -> List[AttackKind]:
    """Kinds named by the script's attack events, else all of them."""
    kinds = []
    for event in config.events:
        if isinstance(event, AttackEvent) and event.kind not in kinds:
            kinds.append(event.kind)
    return kinds or list(AttackKind)


def run_attack_suite(config: Optional[SimConfig] = None, strict: bool = False) -> AttackReport:
    config = config or SimConfig()
    suite = AttackSuite(config)
    verdicts = []
    for kind in attack_kinds(config):
        for position in suite.positions(kind):
            verdict = suite.run_interleaving(kind, position)
            verdicts.append(verdict)
            logger.debug(f"{kind.value} {verdict.ordering}: {', '.join(verdict.moves)}")
            if verdict.griefing:
                logger.warning(
                    f"{kind.value} {verdict.ordering}: adversary commit locked the victim "
                    f"until expiry"
                )

    report = AttackReport(mode=suite.mode, verdicts=tuple(verdicts))
    counts = report.counts()
    logger.info(
        f"Attack suite ({suite.mode.name.lower()}): {counts['rejected']} of "
        f"{counts['interleavings']} interleavings rejected"
    )
    if strict and report.regressions:
        raise SecurityRegressionError(
            f"{len(report.regressions)} interleavings ended in an accepted or unexpected outcome",
            verdicts=report.regressions,
        )
    return report
