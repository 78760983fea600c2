import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";

function deferredFetch() {
  const pending: { url: string; resolve: (r: Response) => void }[] = [];
  const fetchFn = (url: string) =>
    new Promise<Response>((resolve) => {
      pending.push({ url, resolve });
    });
  const respond = (index: number, payload: unknown) => {
    pending[index].resolve({
      ok: true,
      status: 200,
      json: async () => payload,
    } as unknown as Response);
  };
  return { fetchFn, pending, respond };
}

describe("api client", () => {
  it("drops responses superseded by a newer request of the same kind", async () => {
    const { fetchFn, respond } = deferredFetch();
    const client = new ApiClient("", fetchFn);
    const first = client.getGraph([0, 0]);
    const second = client.getGraph([1, 1]);
    // the stale first response arrives after the second was issued
    respond(0, { cell: [0, 0] });
    respond(1, { cell: [1, 1] });
    expect(await first).toBeNull();
    expect(await second).toEqual({ cell: [1, 1] });
  });

  it("keeps independent request kinds separate", async () => {
    const { fetchFn, respond } = deferredFetch();
    const client = new ApiClient("", fetchFn);
    const graph = client.getGraph([0, 0]);
    const grid = client.getGrid();
    respond(0, { cell: [0, 0] });
    respond(1, { alpha: 2 });
    expect(await graph).toEqual({ cell: [0, 0] });
    expect(await grid).toEqual({ alpha: 2 });
  });

  it("raises machine-readable errors", async () => {
    const client = new ApiClient("", async () => ({
      ok: false,
      status: 404,
      json: async () => ({ detail: { code: "CELL_OUT_OF_RANGE", message: "nope" } }),
    }) as unknown as Response);
    await expect(client.getGraph([9, 9])).rejects.toThrowError(ApiError);
    await expect(client.getGraph([9, 9])).rejects.toMatchObject({
      code: "CELL_OUT_OF_RANGE",
      status: 404,
    });
  });
});
