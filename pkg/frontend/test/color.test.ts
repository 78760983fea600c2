import { describe, expect, it } from "vitest";

import { BLUE, YELLOW, css, distanceToYellow, parseRgb, sigmaColor } from "../src/color.js";

describe("sigma color scale", () => {
  it("maps sigma 1 to pure blue", () => {
    expect(sigmaColor(1, 0.2)).toEqual(BLUE);
  });

  it("maps the minimum observed sigma to pure yellow", () => {
    expect(sigmaColor(0.2, 0.2)).toEqual(YELLOW);
  });

  it("is strictly monotone: lower sigma sits strictly closer to yellow", () => {
    const min = 0.1;
    let previous = -1;
    for (let step = 0; step <= 40; step++) {
      const sigma = min + ((1 - min) * step) / 40;
      const distance = distanceToYellow(sigmaColor(sigma, min));
      expect(distance).toBeGreaterThan(previous);
      previous = distance;
    }
  });

  it("survives a css round trip", () => {
    const color = sigmaColor(0.64, 0.3);
    const parsed = parseRgb(css(color));
    expect(parsed.r).toBeCloseTo(color.r, 2);
    expect(parsed.g).toBeCloseTo(color.g, 2);
    expect(parsed.b).toBeCloseTo(color.b, 2);
  });

  it("treats a degenerate scale as perfect similarity", () => {
    expect(sigmaColor(1, 1)).toEqual(BLUE);
  });
});
