"""Maximum s-t flow on small integral networks (shortest augmenting paths)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field


@dataclass
class FlowNetwork:
    """Directed network with integer capacities, one source and one sink.

    No arc may enter the source or leave the sink.
    """

    num_nodes: int
    source: int
    sink: int
    _to: list[int] = field(default_factory=list)
    _cap: list[int] = field(default_factory=list)
    _adj: list[list[int]] = field(default_factory=list)

    def __post_init__(self):
        if not (0 <= self.source < self.num_nodes and 0 <= self.sink < self.num_nodes):
            raise ValueError("source/sink out of range")
        if self.source == self.sink:
            raise ValueError("source and sink must differ")
        if not self._adj:
            self._adj = [[] for _ in range(self.num_nodes)]

    def add_arc(self, u: int, v: int, capacity: int) -> int:
        """Add an arc u->v; returns its id for flow lookup after max_flow."""
        if capacity < 0:
            raise ValueError("capacity must be non-negative")
        if not (0 <= u < self.num_nodes and 0 <= v < self.num_nodes):
            raise ValueError(f"arc ({u}, {v}) out of range")
        if v == self.source:
            raise ValueError("no arc may enter the source")
        if u == self.sink:
            raise ValueError("no arc may leave the sink")
        slot = len(self._to)
        self._to.extend((v, u))
        self._cap.extend((capacity, 0))
        self._adj[u].append(slot)
        self._adj[v].append(slot + 1)
        return slot // 2

    @property
    def arc_count(self) -> int:
        return len(self._to) // 2


def max_flow(net: FlowNetwork) -> tuple[int, list[int]]:
    """Maximum flow value and the integral flow on each arc (by arc id)."""
    cap = net._cap[:]
    original = net._cap

    def bfs() -> list[int] | None:
        parent_arc = [-1] * net.num_nodes
        parent_arc[net.source] = -2
        queue = deque([net.source])
        while queue:
            u = queue.popleft()
            for a in net._adj[u]:
                v = net._to[a]
                if cap[a] > 0 and parent_arc[v] == -1:
                    parent_arc[v] = a
                    if v == net.sink:
                        return parent_arc
                    queue.append(v)
        return None

    value = 0
    while True:
        parents = bfs()
        if parents is None:
            break
        # find bottleneck along the path, then push
        bottleneck = None
        v = net.sink
        while v != net.source:
            a = parents[v]
            bottleneck = cap[a] if bottleneck is None else min(bottleneck, cap[a])
            v = net._to[a ^ 1]
        v = net.sink
        while v != net.source:
            a = parents[v]
            cap[a] -= bottleneck
            cap[a ^ 1] += bottleneck
            v = net._to[a ^ 1]
        value += bottleneck
    flows = [original[2 * i] - cap[2 * i] for i in range(net.arc_count)]
    return value, flows
