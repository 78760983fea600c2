import { forceLayout } from "../layout.js";
import { attachWheelZoom, clear, svgElement } from "../svg.js";
import type { GraphResponse } from "../types.js";

const WIDTH = 640;
const HEIGHT = 420;

/** Node-link rendering of one snapshot, force-directed. */
export class GraphView {
  private highlighted = new Set<number>();
  private svg: SVGSVGElement | null = null;

  constructor(private readonly container: HTMLElement) {}

  render(graph: GraphResponse | null, nodeIds: string[]): void {
    clear(this.container);
    if (graph === null) {
      const note = document.createElement("p");
      note.className = "empty-state";
      note.textContent = "Click a node in the similarity graph to load a snapshot.";
      this.container.appendChild(note);
      return;
    }
    const title = document.createElement("h3");
    title.textContent = `Interval ${graph.interval.start} to ${graph.interval.end}, slice ${graph.snapshot.slice}`;
    this.container.appendChild(title);

    const svg = svgElement("svg", {
      viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
      class: "graph-view",
    });
    attachWheelZoom(svg);
    const nodes = nodeIds.map((_, index) => index);
    const edges = graph.snapshot.edges.map(([u, v]) => [u, v] as [number, number]);
    const positions = forceLayout(nodes, edges, WIDTH, HEIGHT);

    for (const [u, v, weight] of graph.snapshot.edges) {
      const a = positions.get(u)!;
      const b = positions.get(v)!;
      svg.appendChild(
        svgElement("line", {
          class: "graph-edge",
          x1: a.x,
          y1: a.y,
          x2: b.x,
          y2: b.y,
          stroke: "#9aa5b1",
          "stroke-width": Math.min(1 + Math.log1p(weight), 5),
        }),
      );
    }
    for (const node of nodes) {
      const p = positions.get(node)!;
      const circle = svgElement("circle", {
        class: "graph-node",
        cx: p.x,
        cy: p.y,
        r: 5,
        "data-node": node,
      });
      if (this.highlighted.has(node)) {
        circle.classList.add("highlighted");
      }
      const label = svgElement("title", {});
      label.textContent = nodeIds[node];
      circle.appendChild(label);
      svg.appendChild(circle);
    }
    this.svg = svg;
    this.container.appendChild(svg);
  }

  highlight(members: number[]): void {
    this.highlighted = new Set(members);
    if (!this.svg) return;
    for (const node of this.svg.querySelectorAll(".graph-node")) {
      const index = Number(node.getAttribute("data-node"));
      node.classList.toggle("highlighted", this.highlighted.has(index));
    }
  }
}
