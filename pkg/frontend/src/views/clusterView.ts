import { forceLayout } from "../layout.js";
import { attachWheelZoom, clear, svgElement } from "../svg.js";
import type { ClusterPayload } from "../types.js";

const WIDTH = 360;
const HEIGHT = 300;

/** Contents of one cluster: its members and the snapshot edges among
 * them. */
export class ClusterView {
  constructor(private readonly container: HTMLElement) {}

  render(
    cluster: ClusterPayload | null,
    nodeIds: string[],
    snapshotEdges: [number, number, number][],
  ): void {
    clear(this.container);
    if (cluster === null) {
      const note = document.createElement("p");
      note.className = "empty-state";
      note.textContent = "Select a cluster from the list.";
      this.container.appendChild(note);
      return;
    }
    const members = new Set(cluster.members);
    const inner = snapshotEdges
      .filter(([u, v]) => members.has(u) && members.has(v))
      .map(([u, v]) => [u, v] as [number, number]);
    const positions = forceLayout(cluster.members, inner, WIDTH, HEIGHT, 80);

    const svg = svgElement("svg", {
      viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
      class: "cluster-view",
    });
    attachWheelZoom(svg);
    for (const [u, v] of inner) {
      const a = positions.get(u)!;
      const b = positions.get(v)!;
      svg.appendChild(
        svgElement("line", {
          class: "cluster-edge",
          x1: a.x,
          y1: a.y,
          x2: b.x,
          y2: b.y,
          stroke: "#9aa5b1",
        }),
      );
    }
    for (const member of cluster.members) {
      const p = positions.get(member)!;
      const circle = svgElement("circle", {
        class: member === cluster.center ? "cluster-node center" : "cluster-node",
        cx: p.x,
        cy: p.y,
        r: member === cluster.center ? 8 : 6,
        "data-node": member,
      });
      svg.appendChild(circle);
      const label = svgElement("text", {
        class: "cluster-label",
        x: p.x + 8,
        y: p.y + 3,
        "font-size": 9,
      });
      label.textContent = nodeIds[member];
      svg.appendChild(label);
    }
    this.container.appendChild(svg);
  }
}
