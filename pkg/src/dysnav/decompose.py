"""Overlapping decomposition of one snapshot into ball communities.

Edge strength measures neighborhood cohesion: the number of 3- and
4-cycles an edge belongs to, normalized by the maximum possible count in
its neighborhood. High-strength edges sit inside communities, while
bridges between communities score near zero. Cluster centers are picked
greedily by decreasing vertex strength under a mutual distance >= 2
constraint, then each center grows a radius-1 ball along edges whose
strength clears the threshold `tau`. Vertices caught by no ball become
singleton clusters so that every clustering covers the full vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import EdgeNotPresent, InvalidTau, NodeNotPresent
from .graphs import Graph, edge_key


@dataclass(frozen=True)
class StrengthMap:
    edge_strength: Mapping[tuple[str, str], float]
    vertex_strength: Mapping[str, float]


@dataclass(frozen=True)
class Cluster:
    """One community: a ball around `center`, or a leftover singleton
    (center None) for vertices no ball reached."""

    center: str | None
    members: frozenset[str]

    def sorted_members(self) -> tuple[str, ...]:
        return tuple(sorted(self.members))


@dataclass(frozen=True)
class Clustering:
    clusters: tuple[Cluster, ...]
    tau: float
    source: tuple[int, int] | None = None

    def member_sets(self) -> list[frozenset[str]]:
        return [c.members for c in self.clusters]

    def centers(self) -> tuple[str, ...]:
        return tuple(c.center for c in self.clusters if c.center is not None)


def _cycle_strength(adj: Mapping[str, frozenset[str]], u: str, v: str) -> float:
    """Ratio of realized to possible 3/4-cycles through edge (u, v)."""
    nu = adj[u] - {v}
    nv = adj[v] - {u}
    common = nu & nv
    w = len(common)
    mu = len(nu) - w
    mv = len(nv) - w
    # Possible cycles: every common neighbor closes a triangle; a
    # quadrilateral picks one neighbor on each side (distinct, adjacent).
    gamma_max = w + (mu * mv + w * mu + w * mv + w * (w - 1))
    if gamma_max == 0:
        return 0.0
    quads = 0
    for a in nv:
        quads += len(adj[a] & nu)
    return (w + quads) / gamma_max


def edge_strength(g: Graph, edge: tuple[str, str]) -> float:
    """Strength of a single edge, in [0, 1]."""
    u, v = edge
    if not (g.has_node(u) and g.has_node(v)) or not g.has_edge(u, v):
        raise EdgeNotPresent(f"edge {edge!r} not in graph")
    u, v = edge_key(u, v)
    local = {node: frozenset(g.neighbors(node)) for node in {u, v, *g.neighbors(v)}}
    return _cycle_strength(local, u, v)


def compute_strengths(g: Graph) -> StrengthMap:
    """Strengths of every edge and vertex in one pass."""
    adj = g.adjacency()
    edge_s: dict[tuple[str, str], float] = {}
    for u, v in g.edges:
        edge_s[(u, v)] = _cycle_strength(adj, u, v)
    vertex_s: dict[str, float] = {}
    for node in g.nodes:
        neighbors = g.neighbors(node)
        if not neighbors:
            vertex_s[node] = 0.0
        else:
            total = sum(edge_s[edge_key(node, other)] for other in neighbors)
            vertex_s[node] = total / len(neighbors)
    return StrengthMap(edge_s, vertex_s)


def vertex_strength(g: Graph, node: str) -> float:
    """Mean strength of the node's incident edges; 0 for isolated nodes."""
    if not g.has_node(node):
        raise NodeNotPresent(f"node {node!r} not in graph")
    neighbors = g.neighbors(node)
    if not neighbors:
        return 0.0
    total = sum(edge_strength(g, (node, other)) for other in neighbors)
    return total / len(neighbors)


def extract_centers(g: Graph, strengths: StrengthMap | None = None) -> tuple[str, ...]:
    """Greedy maximal set of pairwise non-adjacent, high-strength vertices.

    Vertices are visited by decreasing strength (ties: higher degree,
    then id); each pick removes itself and its neighbors from play. The
    result is an independent set, and maximal because every skipped
    vertex was adjacent to an earlier pick.
    """
    if strengths is None:
        strengths = compute_strengths(g)
    order = sorted(
        g.nodes,
        key=lambda n: (-strengths.vertex_strength[n], -g.degree(n), n),
    )
    alive = set(g.nodes)
    centers = []
    for node in order:
        if node not in alive:
            continue
        centers.append(node)
        alive.discard(node)
        alive.difference_update(g.neighbors(node))
    return tuple(centers)


def extract_communities(
    g: Graph,
    tau: float,
    source: tuple[int, int] | None = None,
    strengths: StrengthMap | None = None,
) -> Clustering:
    """Grow radius-1 balls around the centers and cover the leftovers.

    A neighbor joins a center's ball when the connecting edge strength
    is at least `tau`. Balls may overlap (pivot vertices); vertices in
    no ball become singletons.
    """
    if not 0.0 <= tau <= 1.0:
        raise InvalidTau(f"tau must be in [0, 1], got {tau}")
    if strengths is None:
        strengths = compute_strengths(g)
    centers = extract_centers(g, strengths)
    clusters: list[Cluster] = []
    covered: set[str] = set()
    for center in centers:
        members = {center}
        for other in g.neighbors(center):
            if strengths.edge_strength[edge_key(center, other)] >= tau:
                members.add(other)
        clusters.append(Cluster(center, frozenset(members)))
        covered |= members
    for node in g.nodes:
        if node not in covered:
            clusters.append(Cluster(None, frozenset((node,))))
    return Clustering(tuple(clusters), tau, source)
