"""Simple undirected weighted graph shared by all analysis stages.

Nodes are opaque strings. Each edge is stored once under its sorted
endpoint pair and adjacency lists are kept sorted, so every iteration
order (and therefore every floating point accumulation) is reproducible
across processes and hash seeds.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def edge_key(u: str, v: str) -> tuple[str, str]:
    """Canonical (sorted) endpoint pair for an undirected edge."""
    return (u, v) if u <= v else (v, u)


class Graph:
    """Immutable-by-convention simple graph. Self-loops are rejected."""

    __slots__ = ("nodes", "_weights", "_adj")

    def __init__(self, nodes: Iterable[str], edges: Iterable[tuple[str, str, float]] = ()):
        node_set = set(nodes)
        weights: dict[tuple[str, str], float] = {}
        for u, v, w in edges:
            if u == v:
                raise ValueError(f"self-loop on {u!r}")
            node_set.add(u)
            node_set.add(v)
            weights[edge_key(u, v)] = float(w)
        adj: dict[str, list[str]] = {n: [] for n in node_set}
        for u, v in weights:
            adj[u].append(v)
            adj[v].append(u)
        self.nodes: tuple[str, ...] = tuple(sorted(node_set))
        self._weights = weights
        self._adj: dict[str, tuple[str, ...]] = {n: tuple(sorted(ns)) for n, ns in adj.items()}

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self._weights)

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        return tuple(sorted(self._weights))

    def edge_items(self) -> Iterator[tuple[str, str, float]]:
        for u, v in sorted(self._weights):
            yield u, v, self._weights[(u, v)]

    def has_node(self, u: str) -> bool:
        return u in self._adj

    def has_edge(self, u: str, v: str) -> bool:
        return edge_key(u, v) in self._weights

    def weight(self, u: str, v: str) -> float:
        return self._weights[edge_key(u, v)]

    def neighbors(self, u: str) -> tuple[str, ...]:
        return self._adj[u]

    def degree(self, u: str) -> int:
        return len(self._adj[u])

    def adjacency(self) -> dict[str, frozenset[str]]:
        """Neighbor sets keyed by node, for set-algebra heavy callers."""
        return {n: frozenset(ns) for n, ns in self._adj.items()}

    def without_node(self, u: str) -> "Graph":
        if u not in self._adj:
            raise KeyError(u)
        kept = [(a, b, w) for (a, b), w in self._weights.items() if a != u and b != u]
        return Graph((n for n in self.nodes if n != u), kept)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.nodes == other.nodes and self._weights == other._weights

    def __hash__(self) -> int:  # pragma: no cover - not used as dict key
        return hash((self.nodes, tuple(sorted(self._weights.items()))))

    def __repr__(self) -> str:
        return f"Graph({self.node_count} nodes, {self.edge_count} edges)"
