import { ApiClient, ApiError } from "./api.js";
import type {
  Cell,
  ClusterPayload,
  ConfigResponse,
  GraphResponse,
  GridInfo,
  HierarchyResponse,
  SimilarityResponse,
  TreeLayoutKind,
  ViewState,
} from "./types.js";
import { initialViewState } from "./types.js";
import { AttributePanel } from "./views/attributePanel.js";
import { ClusterListView } from "./views/clusterList.js";
import { ClusterView } from "./views/clusterView.js";
import { GraphView } from "./views/graphView.js";
import { HierarchyView } from "./views/hierarchyView.js";
import { SimilarityGridView } from "./views/similarityGrid.js";

function cellKey(cell: Cell): string {
  return `${cell[0]},${cell[1]}`;
}

/**
 * Five-window exploration client. All metrics come from the API; the
 * client only renders payloads and tracks selection state. Each click
 * issues at most one request, and responses superseded by newer
 * requests of the same kind are dropped.
 */
export class App {
  readonly state: ViewState = initialViewState();

  private config: ConfigResponse | null = null;
  private grid: GridInfo | null = null;
  private similarity: SimilarityResponse | null = null;
  private lastGraph: GraphResponse | null = null;
  private lastHierarchy: HierarchyResponse | null = null;
  private clusterCache = new Map<string, ClusterPayload[]>();
  private listedClusters: ClusterPayload[] = [];

  private readonly gridView: SimilarityGridView;
  private readonly graphView: GraphView;
  private readonly clusterList: ClusterListView;
  private readonly clusterView: ClusterView;
  private readonly hierarchyView: HierarchyView;
  private readonly panel: AttributePanel;
  private readonly status: HTMLElement;

  constructor(
    root: HTMLElement,
    private readonly api: ApiClient,
  ) {
    const window_ = (name: string): HTMLElement => {
      const el = root.querySelector<HTMLElement>(`#${name}`);
      if (!el) throw new Error(`missing window container #${name}`);
      return el;
    };
    this.gridView = new SimilarityGridView(window_("similarity-window"), {
      onCellClick: (cell, ctrl) => void this.handleCellClick(cell, ctrl),
    });
    this.graphView = new GraphView(window_("graph-window"));
    this.clusterList = new ClusterListView(window_("cluster-list-window"), {
      onSelect: (index) => this.handleClusterSelect(index),
    });
    this.clusterView = new ClusterView(window_("cluster-window"));
    this.hierarchyView = new HierarchyView(window_("hierarchy-window"));
    this.panel = new AttributePanel(window_("attribute-panel"), {
      onTauCommit: (tau) => void this.handleTauCommit(tau),
      onCtToggle: (ct) => void this.handleCtToggle(ct),
      onLayoutChange: (layout) => this.handleLayoutChange(layout),
      onApplyAnalysis: (attrs) => this.handleApplyAnalysis(attrs),
    });
    this.status = window_("status-line");
  }

  async start(): Promise<void> {
    this.config = await this.api.getConfig();
    this.grid = await this.api.getGrid();
    this.similarity = await this.api.getSimilarity();
    const consensus = await this.api.getConsensus();
    const hierarchy = await this.api.getHierarchy(this.config?.mode === "ct" ? "ct" : "normal");
    if (!this.config || !this.grid || !this.similarity) {
      this.report("failed to load the analysis; is the service running?");
      return;
    }
    // warm the per-cell clustering cache so later clicks stay single-request
    for (let i = 0; i < this.grid.alpha; i++) {
      for (let j = 0; j < this.grid.rows; j++) {
        const clusters = await this.api.getClusters([i, j]);
        if (clusters) this.clusterCache.set(cellKey([i, j]), clusters.clusters);
      }
    }
    this.lastHierarchy = hierarchy;
    this.gridView.render(this.grid, this.similarity.edges);
    this.graphView.render(null, this.grid.node_ids);
    if (consensus) {
      this.listedClusters = consensus.communities.map((c) => ({
        center: null,
        members: c.members,
      }));
      this.clusterList.render(this.listedClusters, this.grid.node_ids, "Consensus communities");
    } else {
      this.clusterList.render(null, this.grid.node_ids);
    }
    this.clusterView.render(null, this.grid.node_ids, []);
    this.hierarchyView.render(hierarchy, this.grid.node_ids, this.state.layout);
    this.panel.render(this.config, this.state.layout);
    this.reportChanges();
  }

  private report(message: string): void {
    this.status.textContent = message;
  }

  private reportChanges(): void {
    const top = this.similarity?.changes[0];
    if (top) {
      this.report(
        `largest structural change at boundary ${top.boundary} -> ${top.boundary + 1} ` +
          `(score ${top.score.toFixed(3)})`,
      );
    }
  }

  /** Plain click: load the cell's snapshot (one request) and list its
   * clusters from the warmed cache. Ctrl-click: extend to a pair and
   * request the maximum-similarity path (one request). */
  async handleCellClick(cell: Cell, ctrl: boolean): Promise<void> {
    if (!this.grid) return;
    if (ctrl && this.state.selectedCell && this.state.selectedCell[0] !== cell[0]) {
      const [a, b] =
        this.state.selectedCell[0] < cell[0]
          ? [this.state.selectedCell, cell]
          : [cell, this.state.selectedCell];
      this.state.selectedPair = [a, b];
      this.gridView.setSelection([a, b]);
      try {
        const consensus = await this.api.postPath(a, b);
        if (consensus === null) return; // superseded
        this.listedClusters = consensus.communities.map((c) => ({
          center: null,
          members: c.members,
        }));
        this.clusterList.render(this.listedClusters, this.grid.node_ids, "Consensus communities");
        this.clusterList.setSelection(null);
        this.state.selectedCluster = null;
        this.report(
          `consensus over path ${consensus.path.map(cellKey).join(" > ")}: ` +
            `${consensus.communities.length} communities`,
        );
      } catch (error) {
        this.reportError(error);
      }
      return;
    }

    this.state.selectedCell = cell;
    this.state.selectedPair = null;
    this.state.selectedCluster = null;
    this.gridView.setSelection([cell]);
    try {
      const graph = await this.api.getGraph(cell);
      if (graph === null) return; // superseded
      this.lastGraph = graph;
      this.graphView.render(graph, this.grid.node_ids);
      this.listedClusters = this.clusterCache.get(cellKey(cell)) ?? [];
      this.clusterList.render(this.listedClusters, this.grid.node_ids);
      this.clusterList.setSelection(null);
    } catch (error) {
      this.reportError(error);
    }
  }

  /** Cluster selection is served from memory; no request. */
  handleClusterSelect(index: number): void {
    if (!this.grid) return;
    this.state.selectedCluster = index;
    const cluster = this.listedClusters[index] ?? null;
    const edges = this.lastGraph?.snapshot.edges ?? [];
    this.clusterView.render(cluster, this.grid.node_ids, edges);
    this.clusterList.setSelection(index);
    if (cluster) {
      this.graphView.highlight(cluster.members);
    }
  }

  /** Slider release: exactly one recluster request. */
  async handleTauCommit(tau: number): Promise<void> {
    if (!this.grid || !this.config) return;
    try {
      const result = await this.api.postRecluster(tau);
      if (result === null) return; // superseded
      this.config = { ...this.config, tau };
      this.clusterCache.clear();
      const cells = result.cells as unknown as { clusters: ClusterPayload[] }[][];
      cells.forEach((column, i) =>
        column.forEach((cell, j) => this.clusterCache.set(cellKey([i, j]), cell.clusters)),
      );
      this.similarity = {
        edges: (result.similarity as SimilarityResponse["edges"]) ?? [],
        changes: (result.changes as SimilarityResponse["changes"]) ?? [],
      };
      this.gridView.render(this.grid, this.similarity.edges);
      if (this.state.selectedCell) {
        this.gridView.setSelection([this.state.selectedCell]);
        this.listedClusters = this.clusterCache.get(cellKey(this.state.selectedCell)) ?? [];
        this.clusterList.render(this.listedClusters, this.grid.node_ids);
      }
      this.reportChanges();
    } catch (error) {
      this.reportError(error);
    }
  }

  /** Checkbox flip: exactly one hierarchy request in the new mode. */
  async handleCtToggle(ct: boolean): Promise<void> {
    if (!this.grid) return;
    try {
      const hierarchy = await this.api.getHierarchy(ct ? "ct" : "normal");
      if (hierarchy === null) return; // superseded
      this.lastHierarchy = hierarchy;
      this.hierarchyView.render(hierarchy, this.grid.node_ids, this.state.layout);
    } catch (error) {
      this.reportError(error);
    }
  }

  /** Relayout only; no request. */
  handleLayoutChange(layout: TreeLayoutKind): void {
    this.state.layout = layout;
    if (this.grid && this.lastHierarchy) {
      this.hierarchyView.render(this.lastHierarchy, this.grid.node_ids, layout);
    }
  }

  /** The batch service cannot re-discretize a running analysis; tell
   * the user how to apply the new attributes. */
  handleApplyAnalysis(attrs: { epsilon: string; omega: number; metric: string }): void {
    if (!this.config) return;
    if (
      attrs.epsilon === this.config.epsilon &&
      attrs.omega === this.config.omega &&
      attrs.metric === this.config.metric
    ) {
      this.panel.showError(null);
      this.report("attributes unchanged");
      return;
    }
    this.report(
      `restart the service to re-analyze: dysnav analyze --input ${this.config.input_path} ` +
        `--epsilon ${attrs.epsilon} --slices ${attrs.omega} --metric ${attrs.metric} --serve <port>`,
    );
  }

  private reportError(error: unknown): void {
    if (error instanceof ApiError) {
      this.report(`API error ${error.code}: ${error.message}`);
    } else {
      this.report(`error: ${String(error)}`);
    }
  }
}
