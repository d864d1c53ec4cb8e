/**
 * SVG rendering of a seed: vertices on the layout grid, arrows with
 * multiplicity badges, the frozen row styled distinctly, and mutation-diff
 * highlighting (inserted arrows vs flipped arrows).
 */

import { canvasSize, layout, Position } from './layout';
import { formatLaurent } from './format';
import { Arrow, SeedJson, decodeArrows } from './types';

const R = 26;

export interface ArrowDiff {
  inserted: Set<string>;
  flipped: Set<string>;
}

const arrowKey = (a: Arrow) => `${a.src}->${a.dst}`;

/** Classify arrows of `after` relative to `before` (for diff styling):
 * an arrow is "flipped" when its reverse existed before, "inserted" when it
 * is new between a previously unconnected pair. */
export function diffArrows(before: Arrow[], after: Arrow[]): ArrowDiff {
  const prev = new Set(before.map(arrowKey));
  const inserted = new Set<string>();
  const flipped = new Set<string>();
  for (const a of after) {
    const key = arrowKey(a);
    if (prev.has(key)) continue;
    if (prev.has(`${a.dst}->${a.src}`)) flipped.add(key);
    else inserted.add(key);
  }
  return { inserted, flipped };
}

function esc(s: string): string {
  return s.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;').replace(/"/g, '&quot;');
}

function arrowSvg(a: Arrow, pos: Position[], cls: string): string {
  const p = pos[a.src];
  const q = pos[a.dst];
  const d = Math.hypot(q.x - p.x, q.y - p.y) || 1;
  const ux = (q.x - p.x) / d;
  const uy = (q.y - p.y) / d;
  const x1 = p.x + ux * R;
  const y1 = p.y + uy * R;
  const x2 = q.x - ux * (R + 6);
  const y2 = q.y - uy * (R + 6);
  let svg = `<line class="arrow ${cls}" x1="${x1.toFixed(1)}" y1="${y1.toFixed(1)}" x2="${x2.toFixed(1)}" y2="${y2.toFixed(1)}" marker-end="url(#head)"/>`;
  if (a.mult > 1) {
    const mx = (x1 + x2) / 2 + uy * 12;
    const my = (y1 + y2) / 2 - ux * 12;
    svg += `<text class="mult" x="${mx.toFixed(1)}" y="${my.toFixed(1)}">${a.mult}</text>`;
  }
  return svg;
}

export function renderSeedSvg(seed: SeedJson, diff?: ArrowDiff): string {
  const pos = layout(seed.quiver.labels);
  const { width, height } = canvasSize(pos);
  const arrows = decodeArrows(seed.arrows);
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" width="${width}" height="${height}">`,
    '<defs><marker id="head" markerWidth="8" markerHeight="8" refX="6" refY="3" orient="auto">' +
      '<path d="M0,0 L6,3 L0,6 z"/></marker></defs>',
  ];
  for (const a of arrows) {
    const key = arrowKey(a);
    const cls = diff?.inserted.has(key)
      ? 'inserted'
      : diff?.flipped.has(key)
        ? 'flipped'
        : 'plain';
    parts.push(arrowSvg(a, pos, cls));
  }
  seed.quiver.labels.forEach((label, i) => {
    const frozen = i >= seed.quiver.n_mut;
    const p = pos[i];
    const shape = frozen
      ? `<rect class="vertex frozen" data-vertex="${i}" x="${p.x - R}" y="${p.y - R}" width="${2 * R}" height="${2 * R}" rx="6"/>`
      : `<circle class="vertex mutable" data-vertex="${i}" cx="${p.x}" cy="${p.y}" r="${R}"/>`;
    parts.push(shape);
    parts.push(`<text class="label" x="${p.x}" y="${p.y + 4}">${esc(label)}</text>`);
  });
  parts.push('</svg>');
  return parts.join('\n');
}

export function renderVariableList(seed: SeedJson, expanded: Set<number>): string {
  const rows = seed.variables.map((text, i) => {
    const frozen = i >= seed.quiver.n_mut;
    const f = formatLaurent(text, expanded.has(i));
    const expand = f.truncated
      ? ` <button class="expand" data-expand="${i}">show all ${f.termCount} terms</button>`
      : '';
    return (
      `<li class="${frozen ? 'frozen' : 'mutable'}">` +
      `<span class="vlabel">${esc(seed.quiver.labels[i])}</span> = ` +
      `<span class="vexpr">${esc(f.display)}</span>${expand}</li>`
    );
  });
  return `<ul class="variables">${rows.join('')}</ul>`;
}

export function renderHistory(seed: SeedJson): string {
  if (seed.history.length === 0) return '<span class="crumb">initial seed</span>';
  return seed.history
    .map((k) => `<span class="crumb">μ(${esc(seed.quiver.labels[k] ?? String(k))})</span>`)
    .join(' → ');
}
