import { css, sigmaColor } from "../color.js";
import { attachWheelZoom, clear, svgElement } from "../svg.js";
import type { Cell, GridInfo, SimEdge } from "../types.js";

export interface GridCallbacks {
  /** ctrl is true when the click extends the selection to a pair. */
  onCellClick(cell: Cell, ctrl: boolean): void;
}

const WIDTH = 640;
const HEIGHT = 360;

/**
 * Grid of graphs: time columns on the x axis, filter rows on the y
 * axis, sigma edges between consecutive columns on a blue-to-yellow
 * scale (blue = perfect similarity).
 */
export class SimilarityGridView {
  private svg: SVGSVGElement | null = null;
  private selection: Cell[] = [];

  constructor(
    private readonly container: HTMLElement,
    private readonly callbacks: GridCallbacks,
  ) {}

  render(grid: GridInfo, edges: SimEdge[]): void {
    clear(this.container);
    if (grid.alpha < 2) {
      const note = document.createElement("p");
      note.className = "empty-state";
      note.textContent = "Need at least two time intervals to compare.";
      this.container.appendChild(note);
      return;
    }
    const svg = svgElement("svg", {
      viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
      class: "similarity-grid",
    });
    attachWheelZoom(svg);
    const sigmas = edges.map((e) => e.sigma);
    const minSigma = sigmas.length ? Math.min(...sigmas) : 0;

    const x = (i: number) => 40 + (i * (WIDTH - 80)) / Math.max(grid.alpha - 1, 1);
    const y = (j: number) =>
      HEIGHT - 50 - (j * (HEIGHT - 100)) / Math.max(grid.rows - 1, 1);

    for (const edge of edges) {
      const line = svgElement("line", {
        class: "sim-edge",
        x1: x(edge.from[0]),
        y1: y(edge.from[1]),
        x2: x(edge.to[0]),
        y2: y(edge.to[1]),
        stroke: css(sigmaColor(edge.sigma, minSigma)),
        "stroke-width": 2,
        "data-sigma": edge.sigma,
      });
      svg.appendChild(line);
    }
    for (let i = 0; i < grid.alpha; i++) {
      for (let j = 0; j < grid.rows; j++) {
        const node = svgElement("circle", {
          class: "grid-node",
          cx: x(i),
          cy: y(j),
          r: 7,
          "data-cell": `${i},${j}`,
        });
        node.addEventListener("click", (event) => {
          this.callbacks.onCellClick([i, j], event.ctrlKey);
        });
        svg.appendChild(node);
      }
    }
    this.appendLegend(svg, grid, minSigma);
    this.svg = svg;
    this.container.appendChild(svg);
    this.applySelection();
  }

  /** Legend: sigma color endpoints plus the metric's weight range. */
  private appendLegend(svg: SVGSVGElement, grid: GridInfo, minSigma: number): void {
    const legend = svgElement("g", { class: "legend" });
    const gradientSteps = 24;
    for (let s = 0; s < gradientSteps; s++) {
      const sigma = minSigma + ((1 - minSigma) * s) / (gradientSteps - 1);
      legend.appendChild(
        svgElement("rect", {
          x: 14 + s * 4,
          y: HEIGHT - 26,
          width: 4,
          height: 10,
          fill: css(sigmaColor(sigma, minSigma)),
        }),
      );
    }
    const low = svgElement("text", {
      class: "legend-min",
      x: 14,
      y: HEIGHT - 4,
      "font-size": 10,
    });
    low.textContent = `σ ${minSigma.toFixed(3)}`;
    const high = svgElement("text", {
      class: "legend-max",
      x: 14 + gradientSteps * 4 + 6,
      y: HEIGHT - 4,
      "font-size": 10,
    });
    high.textContent = "σ 1.000";
    const weights = svgElement("text", {
      class: "legend-weights",
      x: 14,
      y: HEIGHT - 36,
      "font-size": 10,
    });
    weights.textContent = `weights [${grid.weight_range[0]}, ${grid.weight_range[1]}]`;
    legend.append(low, high, weights);
    svg.appendChild(legend);
  }

  setSelection(cells: Cell[]): void {
    this.selection = cells;
    this.applySelection();
  }

  private applySelection(): void {
    if (!this.svg) return;
    const keys = new Set(this.selection.map(([i, j]) => `${i},${j}`));
    for (const node of this.svg.querySelectorAll(".grid-node")) {
      const selected = keys.has(node.getAttribute("data-cell") ?? "");
      node.classList.toggle("selected", selected);
    }
  }
}
