"""End-to-end orchestration and the JSON analysis bundle.

The pipeline runs ingest -> discretize -> decompose -> similarity ->
hierarchy and collects everything the CLI writes (and the API serves)
into an `AnalysisBundle`: a tree of JSON-native values using integer
node indices against a sorted id table. Serialization is canonical
(sorted keys, fixed list orders), so identical runs produce identical
bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from typing import Any, Sequence

from . import similarity as sim
from .decompose import Clustering
from .discretize import MetricKind, SnapshotGrid, discretize, parse_duration
from .errors import DysnavError, InvalidOmega, InvalidTau
from .graphs import Graph
from .hierarchy import HierarchyResult, Mode, build_hierarchy
from .ingest import DynamicGraph, LineDiagnostic, load_dynamic_graph


@dataclass(frozen=True)
class AnalysisConfig:
    """Everything one batch run needs; validated before use."""

    input_path: str
    epsilon: str
    omega: int = 1
    tau: float = 0.5
    metric: MetricKind = MetricKind.OCCURRENCY
    mode: Mode = Mode.NORMAL
    tau_grid: tuple[float, ...] | None = None
    output_path: str | None = None
    serve: int | None = None
    consensus_threshold: float = 0.5
    literal_min_tree: bool = False
    hierarchy_cell: tuple[int, int] | None = None

    def validate(self) -> None:
        parse_duration(self.epsilon)
        if self.omega < 1:
            raise InvalidOmega(f"slice count must be >= 1, got {self.omega}")
        if not 0.0 <= self.tau <= 1.0:
            raise InvalidTau(f"tau must be in [0, 1], got {self.tau}")
        if self.tau_grid is not None:
            if not self.tau_grid:
                raise InvalidTau("tau grid must not be empty")
            for lo, hi in zip(self.tau_grid, self.tau_grid[1:]):
                if not lo < hi:
                    raise InvalidTau("tau grid values must be strictly increasing")
            if not all(0.0 <= t <= 1.0 for t in self.tau_grid):
                raise InvalidTau("tau grid values must lie in [0, 1]")
        if not 0.0 <= self.consensus_threshold <= 1.0:
            raise InvalidTau(
                f"consensus threshold must be in [0, 1], got {self.consensus_threshold}"
            )

    def to_dict(self) -> dict[str, Any]:
        return {
            "input_path": self.input_path,
            "epsilon": self.epsilon,
            "omega": self.omega,
            "tau": self.tau,
            "metric": self.metric.value,
            "mode": self.mode.value,
            "tau_grid": list(self.tau_grid) if self.tau_grid is not None else None,
            "output_path": self.output_path,
            "serve": self.serve,
            "consensus_threshold": self.consensus_threshold,
            "literal_min_tree": self.literal_min_tree,
            "hierarchy_cell": list(self.hierarchy_cell) if self.hierarchy_cell else None,
        }


@dataclass
class AnalysisBundle:
    """JSON-native snapshot of one full analysis."""

    config: dict
    diagnostics: dict
    node_ids: list[str]
    grid: dict
    snapshots: list
    cells: list
    similarity: list
    changes: list
    consensus: dict
    hierarchy: dict

    def to_dict(self) -> dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def serialize_bundle(bundle: AnalysisBundle) -> str:
    return json.dumps(bundle.to_dict(), sort_keys=True, indent=2) + "\n"


def deserialize_bundle(text: str) -> AnalysisBundle:
    data = json.loads(text)
    names = {f.name for f in fields(AnalysisBundle)}
    unknown = set(data) - names
    if unknown or set(data) != names:
        raise ValueError(f"not an analysis bundle (keys {sorted(data)})")
    return AnalysisBundle(**data)


@dataclass
class PipelineResult:
    """Domain objects of one run, plus the serialized-ready bundle."""

    config: AnalysisConfig
    dynamic_graph: DynamicGraph
    diagnostics: list[LineDiagnostic]
    grid: SnapshotGrid
    simgraph: sim.SimilarityGraph
    changes: sim.ChangeReport
    path: list[sim.Cell]
    communities: list[sim.ConsensusCommunity]
    consensus_graph: Graph
    hierarchy: HierarchyResult
    bundle: AnalysisBundle = field(repr=False, default=None)  # type: ignore[assignment]


def node_index(node_ids: Sequence[str]) -> dict[str, int]:
    """Node id -> bundle index lookup."""
    return {node: i for i, node in enumerate(node_ids)}


def _clusters_payload(clustering: Clustering, idx: dict[str, int]) -> list[dict]:
    return [
        {
            "center": idx[c.center] if c.center is not None else None,
            "members": sorted(idx[m] for m in c.members),
        }
        for c in clustering.clusters
    ]


def hierarchy_payload(
    result: HierarchyResult, graph: Graph, idx: dict[str, int], mode: Mode
) -> dict:
    tree = result.tree
    eff = result.efficiency
    depths = tree.depths()
    return {
        "mode": mode.value,
        "root": idx[tree.root],
        "parents": [[idx[c], idx[p]] for c, p in sorted(tree.parent.items())],
        "tree_edges": [[idx[u], idx[v]] for u, v in tree.edges],
        "roles": (
            [[idx[n], role.value] for n, role in sorted(tree.roles.items())]
            if tree.roles is not None
            else None
        ),
        "global_efficiency": eff.global_eff,
        "delta_efficiency": [[idx[n], d] for n, d in sorted(eff.delta.items())],
        "depths": [[idx[n], d] for n, d in sorted(depths.items())],
        "graph_nodes": sorted(idx[n] for n in graph.nodes),
    }


def _consensus_payload(
    path: Sequence[sim.Cell],
    communities: Sequence[sim.ConsensusCommunity],
    graph: Graph,
    idx: dict[str, int],
) -> dict:
    return {
        "path": [list(cell) for cell in path],
        "communities": [
            {
                "members": sorted(idx[m] for m in c.members),
                "chain": [[cell[0], cell[1], cluster] for cell, cluster in c.chain],
                "support": [[idx[n], s] for n, s in sorted(c.support.items())],
            }
            for c in communities
        ],
        "graph": {
            "nodes": sorted(idx[n] for n in graph.nodes),
            "edges": [[idx[u], idx[v], w] for u, v, w in graph.edge_items()],
        },
    }


def build_bundle(
    config: AnalysisConfig,
    dg: DynamicGraph,
    diagnostics: Sequence[LineDiagnostic],
    grid: SnapshotGrid,
    simgraph: sim.SimilarityGraph,
    changes: sim.ChangeReport,
    path: Sequence[sim.Cell],
    communities: Sequence[sim.ConsensusCommunity],
    cgraph: Graph,
    hierarchy: HierarchyResult,
) -> AnalysisBundle:
    node_ids = sorted(dg.nodes)
    idx = node_index(node_ids)

    snapshots = [
        [
            {
                "slice": cell.slice_index,
                "cutoff": cell.cutoff,
                "edges": [[idx[u], idx[v], w] for u, v, w in cell.edge_items()],
            }
            for cell in column
        ]
        for column in grid.cells
    ]
    assert simgraph.cells is not None
    cells = [
        [
            {
                "slice": decomp.graph.slice_index if decomp.graph is not None else r,
                "tau": decomp.clustering.tau,
                "clusters": _clusters_payload(decomp.clustering, idx),
            }
            for r, decomp in enumerate(column)
        ]
        for column in simgraph.cells
    ]
    similarity = [
        {"from": list(a), "to": list(b), "sigma": s} for a, b, s in simgraph.sim_edges()
    ]
    change_rows = [
        {
            "boundary": b.boundary,
            "max_sigma": b.max_sigma,
            "avg_sigma": b.avg_sigma,
            "gap": b.gap,
            "score": b.score,
        }
        for b in changes.ranked()
    ]
    return AnalysisBundle(
        config=config.to_dict(),
        diagnostics={
            "line_errors": [[d.line_no, d.reason] for d in diagnostics],
            "dropped_self_loops": dg.dropped_self_loops,
            "record_count": len(dg.events),
            "node_count": len(node_ids),
        },
        node_ids=node_ids,
        grid={
            "alpha": grid.alpha,
            "omega": grid.omega,
            "rows": simgraph.rows,
            "axis": simgraph.axis,
            "epsilon": str(grid.epsilon),
            "metric": grid.metric.value,
            "weight_range": list(grid.weight_range),
            "cutoffs": list(grid.cutoffs()),
            "taus": list(simgraph.taus),
            "intervals": [
                {
                    "index": iv.index,
                    "start": iv.start.format(),
                    "end": iv.end.format(),
                }
                for iv in grid.intervals
            ],
        },
        snapshots=snapshots,
        cells=cells,
        similarity=similarity,
        changes=change_rows,
        consensus=_consensus_payload(path, communities, cgraph, idx),
        hierarchy=hierarchy_payload(hierarchy, cgraph, idx, hierarchy.tree.mode),
    )


def run_pipeline(config: AnalysisConfig) -> PipelineResult:
    """Execute the four analysis steps for one configuration.

    The hierarchy is computed on the consensus graph of the best path
    spanning all columns, unless `hierarchy_cell` pins it to a single
    snapshot instead.
    """
    config.validate()
    dg, diagnostics = load_dynamic_graph(config.input_path)
    grid = discretize(dg, config.epsilon, config.omega, config.metric)
    simgraph = sim.build_similarity_graph(grid, config.tau, config.tau_grid)
    changes = sim.detect_changes(simgraph)
    path = sim.best_full_span_path(simgraph)
    communities = sim.consensus_communities(simgraph, path, config.consensus_threshold)
    if config.hierarchy_cell is not None:
        i, j = config.hierarchy_cell
        if not (0 <= i < simgraph.alpha and 0 <= j < simgraph.rows):
            raise DysnavError(
                f"hierarchy cell ({i}, {j}) outside {simgraph.alpha}x{simgraph.rows} grid"
            )
        basis: Graph = simgraph.graph_at(config.hierarchy_cell)
    else:
        basis = sim.consensus_graph(simgraph, path, communities)
    hierarchy = build_hierarchy(basis, config.mode, config.literal_min_tree)
    bundle = build_bundle(
        config, dg, diagnostics, grid, simgraph, changes, path, communities,
        basis, hierarchy,
    )
    return PipelineResult(
        config=config,
        dynamic_graph=dg,
        diagnostics=diagnostics,
        grid=grid,
        simgraph=simgraph,
        changes=changes,
        path=path,
        communities=communities,
        consensus_graph=basis,
        hierarchy=hierarchy,
        bundle=bundle,
    )
