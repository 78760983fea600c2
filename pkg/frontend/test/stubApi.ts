/** Canned analysis payloads and a recording fetch stub. */

import type {
  ClustersResponse,
  ConfigResponse,
  ConsensusResponse,
  GridInfo,
  HierarchyResponse,
  SimEdge,
  SimilarityResponse,
} from "../src/types.js";

export const NODE_IDS = ["a", "b", "c", "d"];
export const ALPHA = 3;
export const ROWS = 2;

export function stubConfig(): ConfigResponse {
  return {
    input_path: "log.csv",
    epsilon: "1d",
    omega: ROWS,
    tau: 0.5,
    metric: "occurrency",
    mode: "normal",
    tau_grid: null,
  };
}

export function stubGrid(): GridInfo {
  return {
    alpha: ALPHA,
    omega: ROWS,
    rows: ROWS,
    axis: "slices",
    epsilon: "1d",
    metric: "occurrency",
    weight_range: [1, 3],
    cutoffs: [1, 2],
    taus: [0.5, 0.5],
    intervals: Array.from({ length: ALPHA }, (_, i) => ({
      index: i,
      start: `2006/06/0${i + 1}`,
      end: `2006/06/0${i + 2}`,
    })),
    node_ids: NODE_IDS,
  };
}

export function stubSimilarityEdges(alpha = ALPHA, rows = ROWS): SimEdge[] {
  const edges: SimEdge[] = [];
  for (let i = 0; i < alpha - 1; i++) {
    for (let j = 0; j < rows; j++) {
      for (let k = 0; k < rows; k++) {
        const sigma = 0.2 + (0.8 * (i + j + k)) / (alpha + 2 * rows);
        edges.push({ from: [i, j], to: [i + 1, k], sigma });
      }
    }
  }
  return edges;
}

export function stubSimilarity(): SimilarityResponse {
  return {
    edges: stubSimilarityEdges(),
    changes: [
      { boundary: 1, max_sigma: 0.4, avg_sigma: 0.3, gap: 0.1, score: 0.6 },
      { boundary: 0, max_sigma: 0.9, avg_sigma: 0.7, gap: 0.2, score: 0.1 },
    ],
  };
}

export function stubClusters(i: number, j: number, tau = 0.5): ClustersResponse {
  return {
    cell: [i, j],
    slice: j,
    tau,
    clusters: [
      { center: 0, members: [0, 1] },
      { center: 2, members: [2, 3] },
    ],
  };
}

export function stubConsensus(): ConsensusResponse {
  return {
    path: [
      [0, 0],
      [1, 0],
      [2, 0],
    ],
    communities: [
      {
        members: [0, 1],
        chain: [
          [0, 0, 0],
          [1, 0, 0],
          [2, 0, 0],
        ],
        support: [
          [0, 1],
          [1, 1],
        ],
      },
    ],
    graph: { nodes: [0, 1], edges: [[0, 1, 3]] },
  };
}

export function stubHierarchy(mode: string): HierarchyResponse {
  return {
    mode,
    root: 0,
    parents: [
      [1, 0],
      [2, 1],
      [3, 1],
    ],
    tree_edges: [
      [0, 1],
      [1, 2],
      [1, 3],
    ],
    roles:
      mode === "ct"
        ? [
            [0, "leader"],
            [1, "gatekeeper"],
            [2, "follower"],
            [3, "follower"],
          ]
        : null,
    global_efficiency: 0.5,
    delta_efficiency: [
      [0, 0.2],
      [1, 0.3],
      [2, -0.1],
      [3, -0.1],
    ],
    depths: [
      [0, 0],
      [1, 1],
      [2, 2],
      [3, 2],
    ],
    graph_nodes: [0, 1, 2, 3],
  };
}

export interface RecordedCall {
  url: string;
  method: string;
  body: unknown;
}

export interface StubApi {
  fetch: (input: string, init?: RequestInit) => Promise<Response>;
  calls: RecordedCall[];
  callsTo(prefix: string): RecordedCall[];
  reset(): void;
}

function respond(payload: unknown): Response {
  return {
    ok: true,
    status: 200,
    json: async () => payload,
  } as unknown as Response;
}

export function makeStubApi(): StubApi {
  const calls: RecordedCall[] = [];
  const fetchStub = async (input: string, init?: RequestInit): Promise<Response> => {
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(String(init.body)) : null;
    calls.push({ url: input, method, body });
    const url = new URL(input, "http://stub.local");
    const path = url.pathname;
    if (path === "/config") return respond(stubConfig());
    if (path === "/grid") return respond(stubGrid());
    if (path === "/similarity") return respond(stubSimilarity());
    if (path === "/consensus") return respond(stubConsensus());
    if (path === "/hierarchy") {
      return respond(stubHierarchy(url.searchParams.get("mode") ?? "normal"));
    }
    const graphs = /^\/graphs\/(\d+)\/(\d+)$/.exec(path);
    if (graphs) {
      const i = Number(graphs[1]);
      const j = Number(graphs[2]);
      return respond({
        cell: [i, j],
        interval: stubGrid().intervals[i],
        snapshot: {
          slice: j,
          cutoff: 1,
          edges: [
            [0, 1, 2],
            [1, 2, 1],
            [2, 3, 1],
          ],
        },
        node_count: NODE_IDS.length,
      });
    }
    const clusters = /^\/clusters\/(\d+)\/(\d+)$/.exec(path);
    if (clusters) {
      return respond(stubClusters(Number(clusters[1]), Number(clusters[2])));
    }
    if (path === "/path") return respond(stubConsensus());
    if (path === "/recluster") {
      const tau = (body as { tau: number }).tau;
      return respond({
        cells: Array.from({ length: ALPHA }, (_, i) =>
          Array.from({ length: ROWS }, (_, j) => stubClusters(i, j, tau)),
        ),
        similarity: stubSimilarityEdges(),
        changes: stubSimilarity().changes,
      });
    }
    return {
      ok: false,
      status: 404,
      json: async () => ({ detail: { code: "NOT_FOUND", message: path } }),
    } as unknown as Response;
  };
  return {
    fetch: fetchStub,
    calls,
    callsTo(prefix: string) {
      return calls.filter((c) => new URL(c.url, "http://stub.local").pathname.startsWith(prefix));
    },
    reset() {
      calls.length = 0;
    },
  };
}

export function mountAppDom(): HTMLElement {
  document.body.innerHTML = `
    <div id="app">
      <div id="attribute-panel"></div>
      <div id="graph-window"></div>
      <div id="cluster-list-window"></div>
      <div id="cluster-window"></div>
      <div id="similarity-window"></div>
      <div id="hierarchy-window"></div>
      <div id="status-line"></div>
    </div>`;
  return document.getElementById("app")!;
}

export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
