import { clear } from "../svg.js";
import type { ConfigResponse, TreeLayoutKind } from "../types.js";

export interface PanelCallbacks {
  /** Fired once per slider release. */
  onTauCommit(tau: number): void;
  onCtToggle(ct: boolean): void;
  onLayoutChange(layout: TreeLayoutKind): void;
  /** epsilon / slices / metric changes; fired only for valid input. */
  onApplyAnalysis(attrs: { epsilon: string; omega: number; metric: string }): void;
}

const EPSILON_RE = /^\d+\s*(mo|y|d|h|m|s)$/;

/** The attribute panel mirrors the analysis configuration. */
export class AttributePanel {
  private error: HTMLElement | null = null;

  constructor(
    private readonly container: HTMLElement,
    private readonly callbacks: PanelCallbacks,
  ) {}

  render(config: ConfigResponse, layout: TreeLayoutKind): void {
    clear(this.container);
    const form = document.createElement("form");
    form.className = "attribute-panel";
    form.addEventListener("submit", (event) => event.preventDefault());

    const tauLabel = document.createElement("label");
    tauLabel.textContent = `Clustering τ: ${config.tau}`;
    const tau = document.createElement("input");
    tau.type = "range";
    tau.min = "0";
    tau.max = "1";
    tau.step = "0.05";
    tau.value = String(config.tau);
    tau.className = "tau-slider";
    // live preview while dragging, one recluster on release
    tau.addEventListener("input", () => {
      tauLabel.textContent = `Clustering τ: ${tau.value}`;
    });
    tau.addEventListener("change", () => {
      this.callbacks.onTauCommit(Number(tau.value));
    });
    tauLabel.appendChild(tau);

    const epsilonLabel = document.createElement("label");
    epsilonLabel.textContent = "Discretization ε:";
    const epsilon = document.createElement("input");
    epsilon.type = "text";
    epsilon.className = "epsilon-input";
    epsilon.value = config.epsilon;
    epsilonLabel.appendChild(epsilon);

    const slicesLabel = document.createElement("label");
    slicesLabel.textContent = "Number of slices:";
    const slices = document.createElement("input");
    slices.type = "number";
    slices.min = "1";
    slices.className = "slices-input";
    slices.value = String(config.omega);
    slicesLabel.appendChild(slices);

    const metricLabel = document.createElement("label");
    metricLabel.textContent = "Metric:";
    const metric = document.createElement("select");
    metric.className = "metric-select";
    for (const kind of ["total", "average", "occurrency"]) {
      const option = document.createElement("option");
      option.value = kind;
      option.textContent = kind;
      option.selected = kind === config.metric;
      metric.appendChild(option);
    }
    metricLabel.appendChild(metric);

    const apply = document.createElement("button");
    apply.type = "button";
    apply.className = "apply-button";
    apply.textContent = "Apply";
    apply.addEventListener("click", () => {
      const text = epsilon.value.trim();
      const omega = Number(slices.value);
      if (!EPSILON_RE.test(text)) {
        this.showError(`ε must look like 1d, 3y or 15m (got "${text}")`);
        return;
      }
      if (!Number.isInteger(omega) || omega < 1) {
        this.showError("slices must be a positive integer");
        return;
      }
      this.showError(null);
      this.callbacks.onApplyAnalysis({ epsilon: text, omega, metric: metric.value });
    });

    const ctLabel = document.createElement("label");
    const ct = document.createElement("input");
    ct.type = "checkbox";
    ct.className = "ct-checkbox";
    ct.checked = config.mode === "ct";
    ct.addEventListener("change", () => this.callbacks.onCtToggle(ct.checked));
    ctLabel.append(ct, document.createTextNode(" counter terrorism mode"));

    const layoutLabel = document.createElement("label");
    layoutLabel.textContent = "Tree layout:";
    const layoutSelect = document.createElement("select");
    layoutSelect.className = "layout-select";
    for (const kind of ["layered", "radial"] as TreeLayoutKind[]) {
      const option = document.createElement("option");
      option.value = kind;
      option.textContent = kind;
      option.selected = kind === layout;
      layoutSelect.appendChild(option);
    }
    layoutSelect.addEventListener("change", () => {
      this.callbacks.onLayoutChange(layoutSelect.value as TreeLayoutKind);
    });
    layoutLabel.appendChild(layoutSelect);

    this.error = document.createElement("p");
    this.error.className = "panel-error";
    this.error.hidden = true;

    form.append(tauLabel, epsilonLabel, slicesLabel, metricLabel, apply, ctLabel, layoutLabel, this.error);
    this.container.appendChild(form);
  }

  showError(message: string | null): void {
    if (!this.error) return;
    this.error.hidden = message === null;
    this.error.textContent = message ?? "";
  }
}
