"""Node classes and per-node byte accounting."""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

from ..errors import ConfigurationError


class NodeClass(str, Enum):
    LIGHT = "light"
    FULL = "full"
    ARCHIVE = "archive"

    @property
    def stores_tx_bodies(self) -> bool:
        return self is not NodeClass.LIGHT

    @property
    def keeps_snapshots(self) -> bool:
        return self is NodeClass.ARCHIVE


@dataclass(frozen=True)
class NodeCounts:
    light: int = 0
    full: int = 0
    archive: int = 0

    def __post_init__(self):
        for name in ("light", "full", "archive"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise ConfigurationError(f"{name} node count must be a non-negative integer")

    def count(self, node_class: NodeClass) -> int:
        return getattr(self, node_class.value)

    @property
    def storing(self) -> int:
        return self.full + self.archive

    @property
    def total(self) -> int:
        return self.light + self.full + self.archive


@dataclass
class Node:
    node_id: str
    node_class: NodeClass
    bytes_stored: int = 0
    bytes_received: int = 0
    txs_stored: int = 0
    headers_stored: int = 0
    snapshots: int = 0

    def relay_tx(self, size: int) -> None:
        """Every submitted transaction reaches storing nodes once."""
        if self.node_class.stores_tx_bodies:
            self.bytes_received += size

    def store_tx(self, size: int) -> None:
        if not self.node_class.stores_tx_bodies:
            return
        self.bytes_stored += size
        self.txs_stored += 1
        if self.node_class.keeps_snapshots:
            self.snapshots += 1

    def store_header(self, header_bytes: int) -> None:
        if self.node_class.stores_tx_bodies:
            return
        self.bytes_received += header_bytes
        self.bytes_stored += header_bytes
        self.headers_stored += 1


@dataclass(frozen=True)
class NodeMetrics:
    node_id: str
    node_class: NodeClass
    bytes_stored: int
    bytes_received: int
    txs_stored: int
    headers_stored: int
    snapshots: int


class Network:
    """A fixed population of nodes; every node sees every broadcast."""

    def __init__(self, counts: NodeCounts):
        self.counts = counts
        self.nodes: List[Node] = []
        for node_class in NodeClass:
            for i in range(counts.count(node_class)):
                self.nodes.append(Node(node_id=f"{node_class.value}-{i}", node_class=node_class))

    def submit(self, size: int, accepted: bool) -> None:
        for node in self.nodes:
            node.relay_tx(size)
            if accepted:
                node.store_tx(size)

    def produce_blocks(self, n: int, header_bytes: int) -> None:
        for _ in range(n):
            for node in self.nodes:
                node.store_header(header_bytes)

    @property
    def total_bytes_stored(self) -> int:
        """Bytes held by Full and Archive nodes."""
        return sum(n.bytes_stored for n in self.nodes if n.node_class.stores_tx_bodies)

    @property
    def total_bytes_transmitted(self) -> int:
        return sum(n.bytes_received for n in self.nodes)

    def per_class_bytes(self) -> Dict[str, int]:
        totals = {node_class.value: 0 for node_class in NodeClass}
        for node in self.nodes:
            totals[node.node_class.value] += node.bytes_stored
        return totals

    def snapshot(self) -> Tuple[NodeMetrics, ...]:
        return tuple(
            NodeMetrics(
                node_id=n.node_id,
                node_class=n.node_class,
                bytes_stored=n.bytes_stored,
                bytes_received=n.bytes_received,
                txs_stored=n.txs_stored,
                headers_stored=n.headers_stored,
                snapshots=n.snapshots,
            )
            for n in self.nodes
        )
