import { clear } from "../svg.js";
import type { ClusterPayload } from "../types.js";

export interface ClusterListCallbacks {
  onSelect(index: number): void;
}

/** Flat list of the selected cell's clusters (or consensus communities). */
export class ClusterListView {
  private items: HTMLLIElement[] = [];

  constructor(
    private readonly container: HTMLElement,
    private readonly callbacks: ClusterListCallbacks,
  ) {}

  render(clusters: ClusterPayload[] | null, nodeIds: string[], heading = "Clusters"): void {
    clear(this.container);
    this.items = [];
    const title = document.createElement("h3");
    title.textContent = heading;
    this.container.appendChild(title);
    if (clusters === null || clusters.length === 0) {
      const note = document.createElement("p");
      note.className = "empty-state";
      note.textContent = "No clusters to show yet.";
      this.container.appendChild(note);
      return;
    }
    const list = document.createElement("ul");
    list.className = "cluster-list";
    clusters.forEach((cluster, index) => {
      const item = document.createElement("li");
      item.className = "cluster-item";
      item.dataset.index = String(index);
      const center =
        cluster.center !== null ? `center ${nodeIds[cluster.center]}` : "singleton";
      item.textContent = `#${index} (${cluster.members.length} members, ${center})`;
      item.addEventListener("click", () => this.callbacks.onSelect(index));
      list.appendChild(item);
      this.items.push(item);
    });
    this.container.appendChild(list);
  }

  setSelection(index: number | null): void {
    this.items.forEach((item, i) => item.classList.toggle("selected", i === index));
  }
}
