"""Comparison of clusterings across consecutive time columns.

Two clusters are compared by representativeness: the geometric mean of
the shared-member ratios in both directions. Two clusterings are
compared (sigma) by size-weighted best-match representativeness, again
symmetrized by a geometric mean. Sigma edges between all slice pairs of
consecutive columns form the similarity graph, from which we rank
structural-change boundaries, extract maximum-similarity paths, and
collapse matched cluster chains into consensus communities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .decompose import Clustering, extract_communities
from .discretize import SnapshotGraph, SnapshotGrid
from .errors import (
    EmptyCluster,
    EmptyClustering,
    InvalidTau,
    NotForwardInTime,
    SingleColumn,
)
from .graphs import Graph, edge_key

Cell = tuple[int, int]


def cluster_representativeness(c_a: Iterable[str], c_b: Iterable[str]) -> float:
    """Symmetric overlap score of two clusters, in [0, 1].

    1 exactly when the clusters are equal, 0 exactly when disjoint.
    """
    set_a = frozenset(c_a)
    set_b = frozenset(c_b)
    if not set_a or not set_b:
        raise EmptyCluster("cluster representativeness needs non-empty clusters")
    common = len(set_a & set_b)
    if common == 0:
        return 0.0
    return common / math.sqrt(len(set_a) * len(set_b))


def _member_sets(clustering: Clustering | Iterable[Iterable[str]]) -> list[frozenset[str]]:
    if isinstance(clustering, Clustering):
        return clustering.member_sets()
    return [frozenset(c) for c in clustering]


def _directed_sigma(
    sets_a: Sequence[frozenset[str]], sets_b: Sequence[frozenset[str]]
) -> float:
    weighted = 0.0
    total = 0
    for c_b in sets_b:
        best = max(cluster_representativeness(c_a, c_b) for c_a in sets_a)
        weighted += best * len(c_b)
        total += len(c_b)
    return weighted / total


def clustering_representativeness(
    c_a: Clustering | Iterable[Iterable[str]],
    c_b: Clustering | Iterable[Iterable[str]],
) -> float:
    """Symmetric similarity (sigma) of two clusterings, in [0, 1]."""
    sets_a = _member_sets(c_a)
    sets_b = _member_sets(c_b)
    if not sets_a or not sets_b:
        raise EmptyClustering("clustering representativeness needs non-empty clusterings")
    return math.sqrt(_directed_sigma(sets_a, sets_b) * _directed_sigma(sets_b, sets_a))


@dataclass(frozen=True)
class CellDecomposition:
    graph: SnapshotGraph | None
    clustering: Clustering


@dataclass(frozen=True)
class SimilarityGraph:
    """Grid of decomposed cells plus sigma edges between consecutive columns.

    `sigma[(i, j, k)]` weighs the edge from cell (i, j) to (i+1, k);
    there is one for every slice pair, (alpha - 1) * rows**2 in total.
    The row axis is either the grid's weight slices (one shared tau) or
    a tau grid applied to the unfiltered snapshots.
    """

    alpha: int
    rows: int
    sigma: dict[tuple[int, int, int], float]
    cells: tuple[tuple[CellDecomposition, ...], ...] | None = None
    axis: str = "slices"
    taus: tuple[float, ...] = ()

    def sim_edges(self) -> list[tuple[Cell, Cell, float]]:
        return [
            ((i, j), (i + 1, k), self.sigma[(i, j, k)])
            for i in range(self.alpha - 1)
            for j in range(self.rows)
            for k in range(self.rows)
        ]

    def clustering_at(self, cell: Cell) -> Clustering:
        if self.cells is None:
            raise ValueError("similarity graph carries no cell decompositions")
        return self.cells[cell[0]][cell[1]].clustering

    def graph_at(self, cell: Cell) -> SnapshotGraph:
        if self.cells is None:
            raise ValueError("similarity graph carries no cell decompositions")
        graph = self.cells[cell[0]][cell[1]].graph
        if graph is None:
            raise ValueError(f"cell {cell} has no snapshot attached")
        return graph


def build_similarity_graph(
    grid: SnapshotGrid,
    tau: float,
    tau_grid: Sequence[float] | None = None,
) -> SimilarityGraph:
    """Decompose every cell and weigh all consecutive-column pairs.

    With `tau_grid` the row axis becomes one clustering threshold per
    row, each applied to the column's unfiltered snapshot; otherwise the
    rows are the grid's weight slices clustered at the single `tau`.
    """
    if grid.alpha < 2:
        raise SingleColumn("similarity needs at least two time columns")
    if tau_grid is not None:
        if not tau_grid:
            raise InvalidTau("tau grid must not be empty")
        for lo, hi in zip(tau_grid, tau_grid[1:]):
            if not lo < hi:
                raise InvalidTau("tau grid values must be strictly increasing")
        if not all(0.0 <= t <= 1.0 for t in tau_grid):
            raise InvalidTau("tau grid values must lie in [0, 1]")
        rows = len(tau_grid)
        taus = tuple(float(t) for t in tau_grid)
        axis = "tau"
    else:
        rows = grid.omega
        taus = (float(tau),) * rows
        axis = "slices"

    columns = []
    for i in range(grid.alpha):
        column = []
        for r in range(rows):
            if tau_grid is None:
                graph = grid.cells[i][r]
                row_tau = tau
            else:
                graph = grid.cells[i][0]
                row_tau = taus[r]
            clustering = extract_communities(graph, row_tau, source=(i, r))
            column.append(CellDecomposition(graph, clustering))
        columns.append(tuple(column))

    sigma: dict[tuple[int, int, int], float] = {}
    for i in range(grid.alpha - 1):
        for j in range(rows):
            for k in range(rows):
                sigma[(i, j, k)] = clustering_representativeness(
                    columns[i][j].clustering, columns[i + 1][k].clustering
                )
    return SimilarityGraph(grid.alpha, rows, sigma, tuple(columns), axis, taus)


@dataclass(frozen=True)
class BoundaryChange:
    boundary: int
    max_sigma: float
    avg_sigma: float
    gap: float
    score: float


@dataclass(frozen=True)
class ChangeReport:
    """Per-boundary change statistics, ranked most-changed first."""

    boundaries: tuple[BoundaryChange, ...]

    def ranked(self) -> tuple[BoundaryChange, ...]:
        return self.boundaries

    def top(self) -> BoundaryChange:
        return self.boundaries[0]


def detect_changes(sg: SimilarityGraph) -> ChangeReport:
    """Rank time boundaries by 1 - best sigma.

    A boundary where even the best-matching clustering pair scores low
    marks a structural change; the max-vs-average gap is reported
    alongside as a secondary signal.
    """
    entries = []
    for i in range(sg.alpha - 1):
        values = [
            sg.sigma[(i, j, k)] for j in range(sg.rows) for k in range(sg.rows)
        ]
        max_sigma = max(values)
        avg_sigma = sum(values) / len(values)
        entries.append(
            BoundaryChange(
                boundary=i,
                max_sigma=max_sigma,
                avg_sigma=avg_sigma,
                gap=max_sigma - avg_sigma,
                score=1.0 - max_sigma,
            )
        )
    entries.sort(key=lambda b: (-b.score, b.boundary))
    return ChangeReport(tuple(entries))


def _check_cell(sg: SimilarityGraph, cell: Cell) -> None:
    i, j = cell
    if not (0 <= i < sg.alpha and 0 <= j < sg.rows):
        raise ValueError(f"cell {cell} outside {sg.alpha}x{sg.rows} grid")


def max_similarity_path(sg: SimilarityGraph, start: Cell, end: Cell) -> list[Cell]:
    """Highest-total-sigma path visiting one cell per column start..end.

    Dynamic programming over columns; ties resolve toward the smaller
    predecessor slice index.
    """
    _check_cell(sg, start)
    _check_cell(sg, end)
    if start[0] >= end[0]:
        raise NotForwardInTime(f"path must move forward in time: {start} -> {end}")
    best: dict[int, float] = {start[1]: 0.0}
    choices: list[dict[int, int]] = []
    for col in range(start[0], end[0]):
        nxt: dict[int, float] = {}
        chosen: dict[int, int] = {}
        for target in range(sg.rows):
            top = -math.inf
            pick = -1
            for slice_ in sorted(best):
                candidate = best[slice_] + sg.sigma[(col, slice_, target)]
                if candidate > top:
                    top = candidate
                    pick = slice_
            nxt[target] = top
            chosen[target] = pick
        best = nxt
        choices.append(chosen)
    slices = [end[1]]
    for chosen in reversed(choices):
        slices.append(chosen[slices[-1]])
    slices.reverse()
    return [(start[0] + offset, s) for offset, s in enumerate(slices)]


def best_full_span_path(sg: SimilarityGraph) -> list[Cell]:
    """Maximum-total-sigma path from the first to the last column,
    endpoints free."""
    best = {s: 0.0 for s in range(sg.rows)}
    choices: list[dict[int, int]] = []
    for col in range(sg.alpha - 1):
        nxt: dict[int, float] = {}
        chosen: dict[int, int] = {}
        for target in range(sg.rows):
            top = -math.inf
            pick = -1
            for slice_ in range(sg.rows):
                candidate = best[slice_] + sg.sigma[(col, slice_, target)]
                if candidate > top:
                    top = candidate
                    pick = slice_
            nxt[target] = top
            chosen[target] = pick
        best = nxt
        choices.append(chosen)
    final = max(range(sg.rows), key=lambda s: (best[s], -s))
    slices = [final]
    for chosen in reversed(choices):
        slices.append(chosen[slices[-1]])
    slices.reverse()
    return [(col, s) for col, s in enumerate(slices)]


@dataclass(frozen=True)
class ConsensusCommunity:
    """A community persisting along a chain of matched clusters."""

    members: frozenset[str]
    chain: tuple[tuple[Cell, int], ...]
    support: dict[str, float]

    def sorted_members(self) -> tuple[str, ...]:
        return tuple(sorted(self.members))


def _best_match(earlier: list[frozenset[str]], c_b: frozenset[str]) -> int:
    """Index of the earlier cluster best representing c_b.

    Ties go to the larger earlier cluster, then the first index.
    """
    best_idx = 0
    best_rho = -1.0
    best_size = -1
    for idx, c_a in enumerate(earlier):
        rho = cluster_representativeness(c_a, c_b)
        if rho > best_rho or (rho == best_rho and len(c_a) > best_size):
            best_idx = idx
            best_rho = rho
            best_size = len(c_a)
    return best_idx


def consensus_communities(
    sg: SimilarityGraph,
    path: Sequence[Cell],
    inclusion_threshold: float = 0.5,
) -> list[ConsensusCommunity]:
    """Chain matched clusters along a path and keep well-supported members.

    Every cluster is linked to its best representative in the adjacent
    clustering, in both directions, so a merge joins the pre-merge
    clusters into one chain and a split keeps its halves together.
    Chains are the connected components of that match relation; a node
    makes a community when it appears in at least `inclusion_threshold`
    of the chain's snapshots.
    """
    clusterings = [sg.clustering_at(cell).member_sets() for cell in path]
    ids = [(pos, idx) for pos, sets in enumerate(clusterings) for idx in range(len(sets))]
    parent = {node: node for node in ids}

    def find(node):
        while parent[node] != node:
            parent[node] = parent[parent[node]]
            node = parent[node]
        return node

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for pos in range(1, len(path)):
        earlier = clusterings[pos - 1]
        later = clusterings[pos]
        for idx, c_b in enumerate(later):
            union((pos - 1, _best_match(earlier, c_b)), (pos, idx))
        for idx, c_a in enumerate(earlier):
            union((pos, _best_match(later, c_a)), (pos - 1, idx))

    components: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for node in ids:
        components.setdefault(find(node), []).append(node)

    result = []
    for root in sorted(components):
        chain = sorted(components[root])
        positions = sorted({pos for pos, _ in chain})
        appearances: dict[str, set[int]] = {}
        for pos, idx in chain:
            for member in clusterings[pos][idx]:
                appearances.setdefault(member, set()).add(pos)
        support = {
            member: len(seen) / len(positions)
            for member, seen in sorted(appearances.items())
        }
        members = frozenset(m for m, s in support.items() if s >= inclusion_threshold)
        result.append(
            ConsensusCommunity(
                members=members,
                chain=tuple((path[pos], idx) for pos, idx in chain),
                support=support,
            )
        )
    return result


def consensus_graph(
    sg: SimilarityGraph,
    path: Sequence[Cell],
    communities: Sequence[ConsensusCommunity],
) -> Graph:
    """Aggregate the path's snapshots over the consensus members.

    Nodes are the union of community members; an edge appears when some
    snapshot on the path contains it, weighted by how many do. If no
    node reached the inclusion threshold, the full union of the path's
    snapshots is returned instead so downstream stages stay usable.
    """
    members: set[str] = set()
    for community in communities:
        members |= community.members
    counts: dict[tuple[str, str], int] = {}
    for cell in path:
        graph = sg.graph_at(cell)
        for u, v, _ in graph.edge_items():
            if not members or (u in members and v in members):
                key = edge_key(u, v)
                counts[key] = counts.get(key, 0) + 1
    if members:
        nodes: Iterable[str] = sorted(members)
    else:
        nodes = sg.graph_at(path[0]).nodes
    return Graph(nodes, [(u, v, float(c)) for (u, v), c in sorted(counts.items())])
