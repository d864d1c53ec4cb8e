/**
 * Vertex placement.  Level-quiver labels (V_i_k for mutable rows, W_i_k for
 * the frozen row) anchor vertices on the (i, k) grid; anything unlabelled
 * that way falls back to a circle layout.
 */

export interface Position {
  x: number;
  y: number;
  node: number; // diagram node i (grid layouts only)
  level: number; // level k (grid layouts only)
}

export const CELL = 110;
export const MARGIN = 60;

const GRID_LABEL = /^[VW]_(\d+)_(\d+)$/;

export function parseGridLabel(label: string): { node: number; level: number } | null {
  const m = GRID_LABEL.exec(label);
  if (!m) return null;
  return { node: parseInt(m[1], 10), level: parseInt(m[2], 10) };
}

export function isGridQuiver(labels: string[]): boolean {
  return labels.length > 0 && labels.every((l) => parseGridLabel(l) !== null);
}

/** Columns indexed by diagram node, rows by level (level 1 at the top). */
export function gridLayout(labels: string[]): Position[] {
  return labels.map((label) => {
    const cell = parseGridLabel(label);
    if (!cell) throw new Error(`not a grid label: ${label}`);
    return {
      x: MARGIN + (cell.node - 1) * CELL,
      y: MARGIN + (cell.level - 1) * CELL,
      node: cell.node,
      level: cell.level,
    };
  });
}

export function circleLayout(n: number): Position[] {
  if (n === 1) {
    return [{ x: MARGIN + CELL, y: MARGIN + CELL, node: 1, level: 1 }];
  }
  const r = Math.max(CELL, (n * CELL) / (2 * Math.PI) + CELL / 2);
  const c = MARGIN + r;
  return Array.from({ length: n }, (_, i) => {
    const theta = (2 * Math.PI * i) / n - Math.PI / 2;
    return {
      x: c + r * Math.cos(theta),
      y: c + r * Math.sin(theta),
      node: i + 1,
      level: 1,
    };
  });
}

export function layout(labels: string[]): Position[] {
  return isGridQuiver(labels) ? gridLayout(labels) : circleLayout(labels.length);
}

export function canvasSize(positions: Position[]): { width: number; height: number } {
  const width = Math.max(...positions.map((p) => p.x)) + MARGIN;
  const height = Math.max(...positions.map((p) => p.y)) + MARGIN;
  return { width, height };
}
