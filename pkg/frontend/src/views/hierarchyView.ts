import { layeredTreeLayout, radialTreeLayout } from "../layout.js";
import { attachWheelZoom, clear, svgElement } from "../svg.js";
import type { HierarchyResponse, TreeLayoutKind } from "../types.js";

const WIDTH = 640;
const HEIGHT = 420;

const ROLE_COLORS: Record<string, string> = {
  leader: "#d62758",
  gatekeeper: "#e8a013",
  follower: "#4a6fa5",
};

/** Influence hierarchy: layered (root on top) or radial (root at the
 * center); the most influential nodes sit nearest the root. */
export class HierarchyView {
  constructor(private readonly container: HTMLElement) {}

  render(
    hierarchy: HierarchyResponse | null,
    nodeIds: string[],
    layout: TreeLayoutKind,
  ): void {
    clear(this.container);
    if (hierarchy === null) {
      const note = document.createElement("p");
      note.className = "empty-state";
      note.textContent = "No hierarchy computed yet.";
      this.container.appendChild(note);
      return;
    }
    const title = document.createElement("h3");
    title.textContent = `Influence hierarchy (${hierarchy.mode}, ${layout})`;
    this.container.appendChild(title);

    const positions =
      layout === "radial"
        ? radialTreeLayout(hierarchy.root, hierarchy.parents, WIDTH, HEIGHT)
        : layeredTreeLayout(hierarchy.root, hierarchy.parents, WIDTH, HEIGHT);
    const roles = new Map(hierarchy.roles ?? []);

    const svg = svgElement("svg", {
      viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
      class: `hierarchy-view ${layout}`,
    });
    attachWheelZoom(svg);
    for (const [child, parent] of hierarchy.parents) {
      const a = positions.get(parent);
      const b = positions.get(child);
      if (!a || !b) continue;
      svg.appendChild(
        svgElement("line", {
          class: "tree-edge",
          x1: a.x,
          y1: a.y,
          x2: b.x,
          y2: b.y,
          stroke: "#8893a3",
        }),
      );
    }
    for (const [node, p] of positions) {
      const role = roles.get(node);
      const circle = svgElement("circle", {
        class: node === hierarchy.root ? "tree-node root" : "tree-node",
        cx: p.x,
        cy: p.y,
        r: node === hierarchy.root ? 9 : 5,
        fill: role ? ROLE_COLORS[role] ?? "#4a6fa5" : "#4a6fa5",
        "data-node": node,
        "data-role": role ?? "",
      });
      const label = svgElement("title", {});
      label.textContent = role ? `${nodeIds[node]} (${role})` : nodeIds[node];
      circle.appendChild(label);
      svg.appendChild(circle);
    }
    this.container.appendChild(svg);
  }
}
