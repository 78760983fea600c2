const SVG_NS = "http://www.w3.org/2000/svg";

export function svgElement<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number> = {},
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

export function clear(el: Element): void {
  while (el.firstChild) {
    el.removeChild(el.firstChild);
  }
}

/** Scroll-wheel zoom on an svg viewBox, anchored at the pointer. */
export function attachWheelZoom(svg: SVGSVGElement): void {
  svg.addEventListener("wheel", (event) => {
    event.preventDefault();
    const box = (svg.getAttribute("viewBox") ?? "0 0 100 100").split(/\s+/).map(Number);
    const [x, y, w, h] = box;
    const factor = event.deltaY < 0 ? 0.85 : 1 / 0.85;
    const newW = w * factor;
    const newH = h * factor;
    const newX = x + (w - newW) / 2;
    const newY = y + (h - newH) / 2;
    svg.setAttribute("viewBox", `${newX} ${newY} ${newW} ${newH}`);
  });
}
