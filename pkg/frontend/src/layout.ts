/** Deterministic layouts: a small force simulation for node-link views
 * and layered / radial placements for trees. Presentation only; no
 * analysis metrics are computed here. */

export interface Point {
  x: number;
  y: number;
}

/**
 * Spring-electric layout with deterministic circular seeding (no
 * randomness, so identical payloads render identically).
 */
export function forceLayout(
  nodes: number[],
  edges: [number, number][],
  width: number,
  height: number,
  iterations = 150,
): Map<number, Point> {
  const positions = new Map<number, Point>();
  const n = nodes.length;
  if (n === 0) {
    return positions;
  }
  const radius = Math.min(width, height) * 0.38;
  nodes.forEach((node, i) => {
    const angle = (2 * Math.PI * i) / n;
    positions.set(node, {
      x: width / 2 + radius * Math.cos(angle),
      y: height / 2 + radius * Math.sin(angle),
    });
  });
  if (n === 1) {
    positions.set(nodes[0], { x: width / 2, y: height / 2 });
    return positions;
  }

  const index = new Map(nodes.map((node, i) => [node, i]));
  const xs = nodes.map((node) => positions.get(node)!.x);
  const ys = nodes.map((node) => positions.get(node)!.y);
  const springLength = radius / Math.sqrt(n);
  const repulsion = springLength * springLength * 2;

  for (let step = 0; step < iterations; step++) {
    const cooling = 1 - step / iterations;
    const fx = new Array<number>(n).fill(0);
    const fy = new Array<number>(n).fill(0);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let dx = xs[i] - xs[j];
        let dy = ys[i] - ys[j];
        let dist2 = dx * dx + dy * dy;
        if (dist2 < 1e-6) {
          dx = 0.01 * (i - j);
          dy = 0.01;
          dist2 = dx * dx + dy * dy;
        }
        const push = repulsion / dist2;
        fx[i] += dx * push;
        fy[i] += dy * push;
        fx[j] -= dx * push;
        fy[j] -= dy * push;
      }
    }
    for (const [u, v] of edges) {
      const i = index.get(u);
      const j = index.get(v);
      if (i === undefined || j === undefined) continue;
      const dx = xs[j] - xs[i];
      const dy = ys[j] - ys[i];
      const dist = Math.sqrt(dx * dx + dy * dy) || 1e-3;
      const pull = (dist - springLength) / dist / 8;
      fx[i] += dx * pull;
      fy[i] += dy * pull;
      fx[j] -= dx * pull;
      fy[j] -= dy * pull;
    }
    const maxMove = 6 * cooling + 0.5;
    for (let i = 0; i < n; i++) {
      const move = Math.hypot(fx[i], fy[i]);
      const scale = move > maxMove ? maxMove / move : 1;
      xs[i] += fx[i] * scale;
      ys[i] += fy[i] * scale;
    }
  }

  // normalize into the viewport with a margin
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  const margin = 20;
  nodes.forEach((node, i) => {
    positions.set(node, {
      x: margin + ((xs[i] - minX) / spanX) * (width - 2 * margin),
      y: margin + ((ys[i] - minY) / spanY) * (height - 2 * margin),
    });
  });
  return positions;
}

export interface TreeShape {
  root: number;
  children: Map<number, number[]>;
  depth: Map<number, number>;
}

export function treeShape(root: number, parents: [number, number][]): TreeShape {
  const children = new Map<number, number[]>();
  children.set(root, []);
  for (const [child, parent] of parents) {
    if (!children.has(parent)) children.set(parent, []);
    if (!children.has(child)) children.set(child, []);
    children.get(parent)!.push(child);
  }
  for (const kids of children.values()) {
    kids.sort((a, b) => a - b);
  }
  const depth = new Map<number, number>([[root, 0]]);
  const queue = [root];
  while (queue.length) {
    const node = queue.shift()!;
    for (const kid of children.get(node) ?? []) {
      depth.set(kid, depth.get(node)! + 1);
      queue.push(kid);
    }
  }
  return { root, children, depth };
}

/** Leaf-slot positions: every leaf gets a column, parents sit over the
 * middle of their subtree. Returned x/y are in [0, 1]. */
function slotPositions(shape: TreeShape): Map<number, { slot: number; depth: number }> {
  const out = new Map<number, { slot: number; depth: number }>();
  let nextSlot = 0;
  const place = (node: number): number => {
    const kids = shape.children.get(node) ?? [];
    let slot: number;
    if (kids.length === 0) {
      slot = nextSlot++;
    } else {
      const slots = kids.map(place);
      slot = (slots[0] + slots[slots.length - 1]) / 2;
    }
    out.set(node, { slot, depth: shape.depth.get(node)! });
    return slot;
  };
  place(shape.root);
  return out;
}

/** Top-down layered tree layout; the root is at the top, influence
 * decreases with depth. */
export function layeredTreeLayout(
  root: number,
  parents: [number, number][],
  width: number,
  height: number,
): Map<number, Point> {
  const shape = treeShape(root, parents);
  const slots = slotPositions(shape);
  const maxSlot = Math.max(...[...slots.values()].map((s) => s.slot), 0);
  const maxDepth = Math.max(...[...slots.values()].map((s) => s.depth), 0);
  const positions = new Map<number, Point>();
  const margin = 24;
  for (const [node, { slot, depth }] of slots) {
    positions.set(node, {
      x: margin + (maxSlot === 0 ? (width - 2 * margin) / 2 : (slot / maxSlot) * (width - 2 * margin)),
      y: margin + (maxDepth === 0 ? 0 : (depth / maxDepth) * (height - 2 * margin)),
    });
  }
  return positions;
}

/** Radial tree layout; the root sits at the center and leaves are
 * pushed to the rim. */
export function radialTreeLayout(
  root: number,
  parents: [number, number][],
  width: number,
  height: number,
): Map<number, Point> {
  const shape = treeShape(root, parents);
  const slots = slotPositions(shape);
  const maxSlot = Math.max(...[...slots.values()].map((s) => s.slot), 0);
  const maxDepth = Math.max(...[...slots.values()].map((s) => s.depth), 0);
  const cx = width / 2;
  const cy = height / 2;
  const maxRadius = Math.min(width, height) / 2 - 24;
  const positions = new Map<number, Point>();
  for (const [node, { slot, depth }] of slots) {
    if (node === shape.root) {
      positions.set(node, { x: cx, y: cy });
      continue;
    }
    const angle = maxSlot === 0 ? 0 : (slot / (maxSlot + 1)) * 2 * Math.PI;
    const r = (depth / Math.max(maxDepth, 1)) * maxRadius;
    positions.set(node, { x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  }
  return positions;
}
