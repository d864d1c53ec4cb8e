/** Browser entry point: wires the controller to the DOM. */

import { Client } from './api';
import { censusSummary, Controller, ViewState } from './controller';
import { renderHistory, renderSeedSvg, renderVariableList } from './render';
import { ReportJson } from './types';

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node;
}

function reportHtml(r: ReportJson): string {
  const rows: string[] = [
    `<tr><td>Aut(𝒜)</td><td>${r.A.aut.text}</td></tr>`,
    `<tr><td>Pic_com(𝒜)</td><td>${r.A.pic_com.text}</td></tr>`,
    `<tr><td>Pic(𝒜)</td><td>${r.A.pic.text}</td></tr>`,
    `<tr><td>K₀(𝒜)</td><td>${r.A.k0.text}</td></tr>`,
    `<tr><td>K₀(𝒜⊗𝒜)</td><td>${r.A.k0_tensor_square.text}</td></tr>`,
    `<tr><td>Aut_cl(𝒜ᵉˣ)</td><td>${r.Aex.aut_cl.text}</td></tr>`,
  ];
  if (r.Aex.grassmannian) {
    rows.push(`<tr><td>model</td><td>${r.Aex.grassmannian}</td></tr>`);
  }
  return (
    `<h3>${r.type}, level ${r.level} (${r.n_generators} generators)</h3>` +
    `<table>${rows.join('')}</table>` +
    `<ul class="notes">${r.notes.map((n) => `<li>${n}</li>`).join('')}</ul>`
  );
}

function draw(ctrl: Controller, state: ViewState): void {
  el('offline').hidden = !state.offline;
  el('notice').textContent = state.notice ?? '';
  if (!state.seed) return;
  el('canvas').innerHTML = renderSeedSvg(state.seed, state.lastDiff ?? undefined);
  el('variables').innerHTML = renderVariableList(state.seed, state.expanded);
  el('history').innerHTML = renderHistory(state.seed);
  el('census').textContent = state.census ? censusSummary(state.census) : '';
  el('report').innerHTML = state.report ? reportHtml(state.report) : '';
  document.body.classList.toggle('busy', state.busy);

  for (const node of el('canvas').querySelectorAll<SVGElement>('.vertex')) {
    const vertex = Number(node.dataset.vertex);
    node.addEventListener('click', () => {
      if (!ctrl.canMutate(vertex) && vertex >= (state.seed?.quiver.n_mut ?? 0)) {
        node.classList.add('shake');
        setTimeout(() => node.classList.remove('shake'), 400);
      }
      void ctrl.clickVertex(vertex);
    });
  }
  for (const btn of el('variables').querySelectorAll<HTMLButtonElement>('.expand')) {
    btn.addEventListener('click', () => ctrl.toggleExpand(Number(btn.dataset.expand)));
  }
}

export function boot(): void {
  const ctrl = new Controller(new Client(''), (s) => draw(ctrl, s));
  el('reset-form').addEventListener('submit', (ev) => {
    ev.preventDefault();
    const family = (el('family') as HTMLSelectElement).value;
    const rank = Number((el('rank') as HTMLInputElement).value);
    const level = Number((el('level') as HTMLInputElement).value);
    const principal = (el('principal') as HTMLInputElement).checked;
    void ctrl.reset(family, rank, level, principal);
  });
  el('undo').addEventListener('click', () => void ctrl.undo());
  el('load-census').addEventListener('click', () => void ctrl.loadCensus());
  el('load-report').addEventListener('click', () => void ctrl.loadReport());
  void ctrl.reset('A', 4, 1, false);
}

if (typeof document !== 'undefined' && document.getElementById('canvas')) {
  boot();
}
