"""Influence hierarchy from delta efficiency and a spanning tree.

Network efficiency is the normalized sum of inverse shortest-path hop
counts over ordered node pairs; a node's delta efficiency is how much
the network loses when that node is removed (the remainder is
renormalized to its own size, so the value can go negative). Edges are
weighted from the endpoint deltas, Kruskal picks a spanning forest, a
root is chosen, and the tree is oriented from it.

Two modes exist. Normal mode keeps the most important edges (maximum
spanning tree on max-of-endpoint deltas) and roots at the highest-delta
node. Counter-terrorism mode assumes leaders hide behind low activity:
it drops high delta-difference edges, then looks for the node shared by
the neighborhoods of the top delta scorers (the gatekeepers) and roots
there, labelling leader / gatekeeper / follower roles.
"""

from __future__ import annotations

import enum
import logging
import math
from collections import Counter, deque
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import EmptyGraph, RootNotInTree
from .graphs import Graph, edge_key

log = logging.getLogger(__name__)


class Mode(enum.Enum):
    NORMAL = "normal"
    COUNTER_TERRORISM = "ct"


class Role(enum.Enum):
    LEADER = "leader"
    GATEKEEPER = "gatekeeper"
    FOLLOWER = "follower"


@dataclass(frozen=True)
class EfficiencyMap:
    global_eff: float
    delta: dict[str, float]


@dataclass(frozen=True)
class HierarchyTree:
    """Oriented spanning tree rooted at the most influential node.

    `parent` covers the root's connected component; `edges` is the full
    spanning forest (every edge also exists in the source graph).
    """

    root: str
    parent: dict[str, str]
    mode: Mode
    edges: tuple[tuple[str, str], ...]
    roles: dict[str, Role] | None = None

    def depths(self) -> dict[str, int]:
        out = {self.root: 0}
        pending = sorted(self.parent)
        while pending:
            remaining = []
            for node in pending:
                up = self.parent[node]
                if up in out:
                    out[node] = out[up] + 1
                else:
                    remaining.append(node)
            if len(remaining) == len(pending):  # pragma: no cover - parent is acyclic
                raise ValueError("parent relation does not reach the root")
            pending = remaining
        return out


def _int_adjacency(g: Graph) -> list[tuple[int, ...]]:
    """Adjacency re-indexed to integers in sorted-node order.

    Keeping source/target iteration in index order makes every float
    accumulation reproduce the sorted-node summation bit for bit.
    """
    index = {node: i for i, node in enumerate(g.nodes)}
    return [
        tuple(sorted(index[other] for other in g.neighbors(node))) for node in g.nodes
    ]


def _efficiency_indexed(adj: list[tuple[int, ...]], skip: int = -1) -> float:
    n_all = len(adj)
    count = n_all - (1 if skip >= 0 else 0)
    if count < 2:
        return 0.0
    inverse = [0.0] * (n_all + 1)
    for d in range(1, n_all + 1):
        inverse[d] = 1.0 / d
    total = 0.0
    for source in range(n_all):
        if source == skip:
            continue
        dist = [-1] * n_all
        if skip >= 0:
            dist[skip] = 0  # sentinel: never entered, never counted below
        dist[source] = 0
        frontier = [source]
        hops = 0
        while frontier:
            hops += 1
            nxt = []
            for node in frontier:
                for other in adj[node]:
                    if dist[other] < 0:
                        dist[other] = hops
                        nxt.append(other)
            frontier = nxt
        for target in range(n_all):
            if dist[target] > 0:
                total += inverse[dist[target]]
    return total / (count * (count - 1))


def network_efficiency(g: Graph) -> float:
    """Mean inverse hop distance over ordered pairs; unreachable pairs
    contribute 0, graphs with fewer than 2 nodes score 0."""
    return _efficiency_indexed(_int_adjacency(g))


def delta_efficiency(g: Graph) -> EfficiencyMap:
    """Efficiency drop caused by removing each node in turn.

    The remainder graph is normalized by its own pair count, so nodes
    whose removal tightens the average (e.g. a pendant leaf) come out
    negative. Removals are independent recomputations (callers may
    parallelize); each runs a fresh all-pairs BFS.
    """
    adj = _int_adjacency(g)
    base = _efficiency_indexed(adj)
    delta = {
        node: base - _efficiency_indexed(adj, i) for i, node in enumerate(g.nodes)
    }
    return EfficiencyMap(base, delta)


def weight_edges(
    g: Graph,
    eff: EfficiencyMap,
    mode: Mode,
    literal_min_tree: bool = False,
) -> dict[tuple[str, str], float]:
    """Kruskal costs per edge.

    Normal mode minimizes -max(delta_u, delta_v), i.e. keeps the edges
    touching important nodes (`literal_min_tree` flips the sign and
    keeps the least important ones instead). Counter-terrorism mode
    minimizes |delta_u - delta_v| so level-crossing edges are dropped.
    """
    costs: dict[tuple[str, str], float] = {}
    for u, v in g.edges:
        if mode is Mode.COUNTER_TERRORISM:
            cost = abs(eff.delta[u] - eff.delta[v])
        else:
            cost = max(eff.delta[u], eff.delta[v])
            if not literal_min_tree:
                cost = -cost
        costs[(u, v)] = cost
    return costs


def spanning_tree(
    g: Graph, costs: Mapping[tuple[str, str], float]
) -> tuple[tuple[str, str], ...]:
    """Kruskal minimum spanning forest, one tree per component.

    Deterministic: edges are scanned by (cost, endpoints).
    """
    parent = {node: node for node in g.nodes}

    def find(node: str) -> str:
        while parent[node] != node:
            parent[node] = parent[parent[node]]
            node = parent[node]
        return node

    chosen = []
    for u, v in sorted(g.edges, key=lambda e: (costs[e], e)):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru if ru > rv else rv] = ru if ru < rv else rv
            chosen.append((u, v))
    return tuple(chosen)


def _top_delta_nodes(nodes: Sequence[str], eff: EfficiencyMap, k: int) -> list[str]:
    return sorted(nodes, key=lambda n: (-eff.delta[n], n))[:k]


def ct_candidate_count(node_count: int) -> int:
    """Size of the gatekeeper candidate pool: 3% of nodes, at least 2."""
    return max(2, math.floor(0.03 * node_count))


def detect_root(g: Graph, eff: EfficiencyMap, mode: Mode) -> str:
    """Pick the hierarchy root.

    Normal mode: the highest-delta node. Counter-terrorism mode: the
    node most shared between neighborhoods of the top 3% delta scorers,
    ties resolved toward lower delta (leaders keep a low profile), then
    id. Falls back to the normal rule when the candidates share nobody.
    """
    if not g.nodes:
        raise EmptyGraph("cannot pick a root of an empty graph")
    if mode is Mode.COUNTER_TERRORISM:
        top = _top_delta_nodes(g.nodes, eff, ct_candidate_count(g.node_count))
        counts: Counter[str] = Counter()
        for i in range(len(top)):
            neigh_i = set(g.neighbors(top[i]))
            for j in range(i + 1, len(top)):
                for shared in neigh_i.intersection(g.neighbors(top[j])):
                    counts[shared] += 1
        if counts:
            return sorted(counts, key=lambda n: (-counts[n], eff.delta[n], n))[0]
        log.warning(
            "counter-terrorism root detection found no shared neighbor among "
            "%d candidates; falling back to highest delta efficiency",
            len(top),
        )
    return sorted(g.nodes, key=lambda n: (-eff.delta[n], n))[0]


def orient_hierarchy(
    tree_edges: Sequence[tuple[str, str]],
    root: str,
    nodes: Sequence[str],
    mode: Mode = Mode.NORMAL,
    eff: EfficiencyMap | None = None,
) -> HierarchyTree:
    """Orient the forest away from the root (breadth-first).

    In counter-terrorism mode every node gets a role: the root leads,
    the top delta scorers gate, everyone else follows.
    """
    if root not in nodes:
        raise RootNotInTree(f"root {root!r} is not a node of the tree")
    adj: dict[str, list[str]] = {node: [] for node in nodes}
    for u, v in tree_edges:
        adj[u].append(v)
        adj[v].append(u)
    parent: dict[str, str] = {}
    seen = {root}
    queue = deque((root,))
    while queue:
        node = queue.popleft()
        for child in sorted(adj[node]):
            if child not in seen:
                seen.add(child)
                parent[child] = node
                queue.append(child)

    roles: dict[str, Role] | None = None
    if mode is Mode.COUNTER_TERRORISM:
        if eff is None:
            raise ValueError("role assignment needs the efficiency map")
        roles = {node: Role.FOLLOWER for node in sorted(nodes)}
        for gatekeeper in _top_delta_nodes(nodes, eff, ct_candidate_count(len(nodes))):
            roles[gatekeeper] = Role.GATEKEEPER
        roles[root] = Role.LEADER
    return HierarchyTree(
        root=root,
        parent=parent,
        mode=mode,
        edges=tuple(edge_key(u, v) for u, v in sorted(tree_edges)),
        roles=roles,
    )


@dataclass(frozen=True)
class HierarchyResult:
    efficiency: EfficiencyMap
    tree: HierarchyTree


def build_hierarchy(
    g: Graph, mode: Mode, literal_min_tree: bool = False
) -> HierarchyResult:
    """Full pipeline: deltas, edge costs, Kruskal, root, orientation."""
    eff = delta_efficiency(g)
    costs = weight_edges(g, eff, mode, literal_min_tree)
    forest = spanning_tree(g, costs)
    root = detect_root(g, eff, mode)
    tree = orient_hierarchy(forest, root, g.nodes, mode, eff)
    return HierarchyResult(eff, tree)
