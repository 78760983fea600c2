import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { App } from "../src/app.js";
import { ALPHA, ROWS, flush, makeStubApi, mountAppDom, type StubApi } from "./stubApi.js";

describe("app against a stubbed API", () => {
  let stub: StubApi;
  let app: App;
  let root: HTMLElement;

  beforeEach(async () => {
    stub = makeStubApi();
    root = mountAppDom();
    app = new App(root, new ApiClient("", stub.fetch));
    await app.start();
    await flush();
    stub.reset();
  });

  function gridNode(i: number, j: number): Element {
    return root.querySelector(`.grid-node[data-cell="${i},${j}"]`)!;
  }

  it("renders all five windows after start", () => {
    expect(root.querySelectorAll(".grid-node")).toHaveLength(ALPHA * ROWS);
    expect(root.querySelectorAll(".sim-edge")).toHaveLength((ALPHA - 1) * ROWS * ROWS);
    expect(root.querySelector("#hierarchy-window .tree-node")).not.toBeNull();
    expect(root.querySelector("#attribute-panel .tau-slider")).not.toBeNull();
    expect(root.querySelectorAll("#cluster-list-window .cluster-item")).toHaveLength(1);
  });

  it("grid-node click issues exactly one /graphs/{i}/{j} request", async () => {
    gridNode(1, 0).dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await flush();
    expect(stub.callsTo("/graphs")).toHaveLength(1);
    expect(stub.callsTo("/graphs")[0].url).toContain("/graphs/1/0");
    // the whole interaction stays a single request
    expect(stub.calls).toHaveLength(1);
    expect(root.querySelectorAll("#graph-window .graph-node").length).toBeGreaterThan(0);
  });

  it("cluster list is served from the warmed cache without a request", async () => {
    gridNode(0, 0).dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await flush();
    stub.reset();
    const item = root.querySelector("#cluster-list-window .cluster-item")!;
    item.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await flush();
    expect(stub.calls).toHaveLength(0);
    expect(root.querySelectorAll("#cluster-window .cluster-node").length).toBeGreaterThan(0);
  });

  it("ctrl-click pair issues exactly one /path request", async () => {
    gridNode(0, 0).dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await flush();
    stub.reset();
    gridNode(2, 1).dispatchEvent(new MouseEvent("click", { bubbles: true, ctrlKey: true }));
    await flush();
    const pathCalls = stub.callsTo("/path");
    expect(pathCalls).toHaveLength(1);
    expect(stub.calls).toHaveLength(1);
    expect(pathCalls[0].method).toBe("POST");
    expect(pathCalls[0].body).toEqual({ from: [0, 0], to: [2, 1] });
    expect(app.state.selectedPair).toEqual([
      [0, 0],
      [2, 1],
    ]);
  });

  it("orders a backwards ctrl-click pair forward in time", async () => {
    gridNode(2, 1).dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await flush();
    stub.reset();
    gridNode(0, 0).dispatchEvent(new MouseEvent("click", { bubbles: true, ctrlKey: true }));
    await flush();
    expect(stub.callsTo("/path")[0].body).toEqual({ from: [0, 0], to: [2, 1] });
  });

  it("tau slider release issues exactly one /recluster request", async () => {
    const slider = root.querySelector<HTMLInputElement>(".tau-slider")!;
    slider.value = "0.7";
    slider.dispatchEvent(new Event("input", { bubbles: true }));
    slider.dispatchEvent(new Event("input", { bubbles: true }));
    await flush();
    expect(stub.calls).toHaveLength(0); // dragging alone never fires requests
    slider.dispatchEvent(new Event("change", { bubbles: true }));
    await flush();
    const calls = stub.callsTo("/recluster");
    expect(calls).toHaveLength(1);
    expect(stub.calls).toHaveLength(1);
    expect(calls[0].body).toEqual({ tau: 0.7 });
  });

  it("ct checkbox refetches the hierarchy in ct mode", async () => {
    const checkbox = root.querySelector<HTMLInputElement>(".ct-checkbox")!;
    checkbox.checked = true;
    checkbox.dispatchEvent(new Event("change", { bubbles: true }));
    await flush();
    const calls = stub.callsTo("/hierarchy");
    expect(calls).toHaveLength(1);
    expect(calls[0].url).toContain("mode=ct");
    const roles = [...root.querySelectorAll("#hierarchy-window .tree-node")].map((n) =>
      n.getAttribute("data-role"),
    );
    expect(roles).toContain("leader");
    expect(roles).toContain("gatekeeper");
  });

  it("layout toggle relayouts without requests", async () => {
    const select = root.querySelector<HTMLSelectElement>(".layout-select")!;
    select.value = "radial";
    select.dispatchEvent(new Event("change", { bubbles: true }));
    await flush();
    expect(stub.calls).toHaveLength(0);
    expect(root.querySelector("#hierarchy-window .hierarchy-view.radial")).not.toBeNull();
    expect(app.state.layout).toBe("radial");
  });

  it("invalid epsilon text shows inline validation and sends nothing", async () => {
    const input = root.querySelector<HTMLInputElement>(".epsilon-input")!;
    input.value = "not-a-duration";
    root.querySelector<HTMLButtonElement>(".apply-button")!.click();
    await flush();
    expect(stub.calls).toHaveLength(0);
    const error = root.querySelector<HTMLElement>(".panel-error")!;
    expect(error.hidden).toBe(false);
    expect(error.textContent).toContain("not-a-duration");
  });

  it("radial layout centers the root", async () => {
    const select = root.querySelector<HTMLSelectElement>(".layout-select")!;
    select.value = "radial";
    select.dispatchEvent(new Event("change", { bubbles: true }));
    await flush();
    const rootNode = root.querySelector("#hierarchy-window .tree-node.root")!;
    expect(Number(rootNode.getAttribute("cx"))).toBeCloseTo(320, 0);
    expect(Number(rootNode.getAttribute("cy"))).toBeCloseTo(210, 0);
  });
});
