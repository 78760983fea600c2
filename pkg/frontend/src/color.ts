/** Blue-to-yellow similarity scale: blue is perfect similarity, yellow
 * is the lowest observed value. Channels are kept fractional so the
 * mapping is strictly monotone in sigma. */

export interface Rgb {
  r: number;
  g: number;
  b: number;
}

export const BLUE: Rgb = { r: 21, g: 67, b: 235 };
export const YELLOW: Rgb = { r: 250, g: 221, b: 40 };

function lerp(a: number, b: number, t: number): number {
  return a + (b - a) * t;
}

/** Position of sigma on the [min, max] scale, clamped to [0, 1]. */
export function sigmaT(sigma: number, min: number, max = 1): number {
  if (max <= min) {
    return 1;
  }
  return Math.min(1, Math.max(0, (sigma - min) / (max - min)));
}

export function sigmaColor(sigma: number, min: number, max = 1): Rgb {
  const t = sigmaT(sigma, min, max);
  return {
    r: lerp(YELLOW.r, BLUE.r, t),
    g: lerp(YELLOW.g, BLUE.g, t),
    b: lerp(YELLOW.b, BLUE.b, t),
  };
}

export function css(color: Rgb): string {
  return `rgb(${color.r.toFixed(3)} ${color.g.toFixed(3)} ${color.b.toFixed(3)})`;
}

/** Euclidean distance to pure yellow; strictly increasing in sigma. */
export function distanceToYellow(color: Rgb): number {
  return Math.hypot(color.r - YELLOW.r, color.g - YELLOW.g, color.b - YELLOW.b);
}

export function parseRgb(text: string): Rgb {
  const match = /rgb\(([\d.]+) ([\d.]+) ([\d.]+)\)/.exec(text);
  if (!match) {
    throw new Error(`not an rgb() color: ${text}`);
  }
  return { r: Number(match[1]), g: Number(match[2]), b: Number(match[3]) };
}
