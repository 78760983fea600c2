"""Dynamic social network analysis.

Discretizes a timestamped interaction log into snapshot graphs, detects
overlapping communities per snapshot, measures structural change
between consecutive snapshots, extracts consensus communities over
stable periods, and infers an influence hierarchy from delta-efficiency
centrality. Available as a library, the `dysnav` CLI, and a JSON API.
"""

from .decompose import (
    Cluster,
    Clustering,
    StrengthMap,
    compute_strengths,
    edge_strength,
    extract_centers,
    extract_communities,
    vertex_strength,
)
from .discretize import (
    Duration,
    Interval,
    MetricKind,
    SnapshotGraph,
    SnapshotGrid,
    TimeUnit,
    aggregate_interval,
    discretize,
    parse_duration,
)
from .graphs import Graph, edge_key
from .hierarchy import (
    EfficiencyMap,
    HierarchyResult,
    HierarchyTree,
    Mode,
    Role,
    build_hierarchy,
    delta_efficiency,
    detect_root,
    network_efficiency,
    orient_hierarchy,
    spanning_tree,
    weight_edges,
)
from .ingest import (
    DynamicGraph,
    InteractionRecord,
    LineDiagnostic,
    Precision,
    TimePoint,
    build_dynamic_graph,
    load_dynamic_graph,
    parse_records,
    parse_timestamp,
)
from .pipeline import (
    AnalysisBundle,
    AnalysisConfig,
    PipelineResult,
    deserialize_bundle,
    run_pipeline,
    serialize_bundle,
)
from .similarity import (
    ChangeReport,
    ConsensusCommunity,
    SimilarityGraph,
    best_full_span_path,
    build_similarity_graph,
    cluster_representativeness,
    clustering_representativeness,
    consensus_communities,
    consensus_graph,
    detect_changes,
    max_similarity_path,
)

__version__ = "0.1.0"
