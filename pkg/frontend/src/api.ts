import type {
  Cell,
  ClustersResponse,
  ConfigResponse,
  ConsensusResponse,
  GraphResponse,
  GridInfo,
  HierarchyResponse,
  SimilarityResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/**
 * Thin fetch wrapper. Each logical request kind keeps a sequence
 * counter; a response that arrives after a newer request of the same
 * kind was issued resolves to null and must be dropped by the caller
 * (last write wins).
 */
export class ApiClient {
  private seq = new Map<string, number>();

  constructor(
    private readonly base: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(kind: string, path: string, init?: RequestInit): Promise<T | null> {
    const id = (this.seq.get(kind) ?? 0) + 1;
    this.seq.set(kind, id);
    const response = await this.fetchFn(this.base + path, init);
    if (this.seq.get(kind) !== id) {
      return null; // superseded by a newer request of the same kind
    }
    if (!response.ok) {
      let code = "HTTP_ERROR";
      let message = `${response.status} on ${path}`;
      try {
        const body = (await response.json()) as { detail?: { code?: string; message?: string } };
        if (body.detail?.code) code = body.detail.code;
        if (body.detail?.message) message = body.detail.message;
      } catch {
        // non-JSON error body; keep defaults
      }
      throw new ApiError(response.status, code, message);
    }
    return (await response.json()) as T;
  }

  private post(body: unknown): RequestInit {
    return {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    };
  }

  getConfig(): Promise<ConfigResponse | null> {
    return this.request("config", "/config");
  }

  getGrid(): Promise<GridInfo | null> {
    return this.request("grid", "/grid");
  }

  getGraph(cell: Cell): Promise<GraphResponse | null> {
    return this.request("graph", `/graphs/${cell[0]}/${cell[1]}`);
  }

  getClusters(cell: Cell): Promise<ClustersResponse | null> {
    return this.request(`clusters:${cell[0]}:${cell[1]}`, `/clusters/${cell[0]}/${cell[1]}`);
  }

  getSimilarity(): Promise<SimilarityResponse | null> {
    return this.request("similarity", "/similarity");
  }

  postPath(from: Cell, to: Cell): Promise<ConsensusResponse | null> {
    return this.request("path", "/path", this.post({ from, to }));
  }

  postRecluster(tau: number): Promise<{ cells: ClustersResponse[][]; similarity: unknown; changes: unknown } | null> {
    return this.request("recluster", "/recluster", this.post({ tau }));
  }

  getHierarchy(mode: "normal" | "ct"): Promise<HierarchyResponse | null> {
    return this.request("hierarchy", `/hierarchy?mode=${mode}`);
  }

  getConsensus(): Promise<ConsensusResponse | null> {
    return this.request("consensus", "/consensus");
  }
}
