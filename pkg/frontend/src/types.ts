/** Payload shapes of the analysis API. Node references are integer
 * indices into the grid's `node_ids` table. */

export type Cell = [number, number];

export interface IntervalInfo {
  index: number;
  start: string;
  end: string;
}

export interface GridInfo {
  alpha: number;
  omega: number;
  rows: number;
  axis: string;
  epsilon: string;
  metric: string;
  weight_range: [number, number];
  cutoffs: number[];
  taus: number[];
  intervals: IntervalInfo[];
  node_ids: string[];
}

export interface SnapshotPayload {
  slice: number;
  cutoff: number;
  edges: [number, number, number][];
}

export interface GraphResponse {
  cell: Cell;
  interval: IntervalInfo;
  snapshot: SnapshotPayload;
  node_count: number;
}

export interface ClusterPayload {
  center: number | null;
  members: number[];
}

export interface ClustersResponse {
  cell: Cell;
  slice: number;
  tau: number;
  clusters: ClusterPayload[];
}

export interface SimEdge {
  from: Cell;
  to: Cell;
  sigma: number;
}

export interface BoundaryChange {
  boundary: number;
  max_sigma: number;
  avg_sigma: number;
  gap: number;
  score: number;
}

export interface SimilarityResponse {
  edges: SimEdge[];
  changes: BoundaryChange[];
}

export interface ConsensusCommunityPayload {
  members: number[];
  chain: [number, number, number][];
  support: [number, number][];
}

export interface ConsensusResponse {
  path: Cell[];
  communities: ConsensusCommunityPayload[];
  graph: { nodes: number[]; edges: [number, number, number][] };
}

export interface HierarchyResponse {
  mode: string;
  root: number;
  parents: [number, number][];
  tree_edges: [number, number][];
  roles: [number, string][] | null;
  global_efficiency: number;
  delta_efficiency: [number, number][];
  depths: [number, number][];
  graph_nodes: number[];
}

export interface ConfigResponse {
  input_path: string;
  epsilon: string;
  omega: number;
  tau: number;
  metric: string;
  mode: string;
  tau_grid: number[] | null;
  [key: string]: unknown;
}

export type TreeLayoutKind = "layered" | "radial";

/** Client-side interaction state for the five windows. */
export interface ViewState {
  selectedCell: Cell | null;
  selectedPair: [Cell, Cell] | null;
  selectedCluster: number | null;
  layout: TreeLayoutKind;
}

export function initialViewState(): ViewState {
  return {
    selectedCell: null,
    selectedPair: null,
    selectedCluster: null,
    layout: "layered",
  };
}
