/** JSON shapes of the workbench HTTP API consumed by the UI. */

export interface QuiverJson {
  n_mut: number;
  n_frozen: number;
  labels: string[];
  b: number[][];
  frozen_arrows?: number[][];
}

export interface SeedJson {
  descriptor: {
    family: string;
    rank: number;
    level: number;
    principal: boolean;
  };
  history: number[];
  quiver: QuiverJson;
  arrows: number[][]; // [src, dst, multiplicity]
  variables: string[]; // canonical Laurent text, one per vertex
}

export interface MutateResponse {
  mutated: number;
  label: string;
  old_variable: string;
  new_variable: string;
  seed: SeedJson;
}

export interface CensusJson {
  status: 'complete' | 'budget_exceeded';
  clusters?: number;
  variables?: number;
  nodes_explored?: number;
}

export interface RuledCell {
  kind: string;
  text: string;
  rule: string;
}

export interface ReportJson {
  type: string;
  level: number;
  n_generators: number;
  A: Record<string, RuledCell>;
  Aex: {
    aut_cl: RuledCell;
    pic_com: RuledCell;
    grassmannian: string | null;
    cl: RuledCell | null;
  };
  notes: string[];
}

export type Arrow = { src: number; dst: number; mult: number };

export function decodeArrows(raw: number[][]): Arrow[] {
  return raw.map(([src, dst, mult]) => ({ src, dst, mult }));
}

/**
 * Decode the arrow list straight from the exchange matrix, mirroring the
 * server's convention: b[i][k] > 0 means b[i][k] arrows i -> k.  Used to
 * check the displayed arrows always match the current b-matrix.
 */
export function arrowsFromMatrix(q: QuiverJson): Arrow[] {
  const out: Arrow[] = [];
  for (let i = 0; i < q.n_mut; i++) {
    for (let k = i + 1; k < q.n_mut; k++) {
      const m = q.b[i][k];
      if (m > 0) out.push({ src: i, dst: k, mult: m });
      else if (m < 0) out.push({ src: k, dst: i, mult: -m });
    }
  }
  const n = q.n_mut + q.n_frozen;
  for (let i = q.n_mut; i < n; i++) {
    for (let k = 0; k < q.n_mut; k++) {
      const m = q.b[i][k];
      if (m > 0) out.push({ src: i, dst: k, mult: m });
      else if (m < 0) out.push({ src: k, dst: i, mult: -m });
    }
  }
  for (const [src, dst, mult] of q.frozen_arrows ?? []) {
    out.push({ src, dst, mult });
  }
  return out.sort((a, b) => a.src - b.src || a.dst - b.dst);
}
