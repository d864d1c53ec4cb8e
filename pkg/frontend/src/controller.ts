/**
 * UI state machine.  All state is the latest service responses plus the
 * expand set; at most one mutation request is in flight, and vertex clicks
 * are ignored while one is pending (single-writer contract with the
 * service).
 */

import { ApiError, Client } from './api';
import { ArrowDiff, diffArrows } from './render';
import { CensusJson, ReportJson, SeedJson, decodeArrows } from './types';

export interface ViewState {
  seed: SeedJson | null;
  lastDiff: ArrowDiff | null;
  census: CensusJson | null;
  report: ReportJson | null;
  expanded: Set<number>;
  busy: boolean;
  offline: boolean;
  notice: string | null;
}

export class Controller {
  state: ViewState = {
    seed: null,
    lastDiff: null,
    census: null,
    report: null,
    expanded: new Set(),
    busy: false,
    offline: false,
    notice: null,
  };

  constructor(
    private client: Client,
    private onChange: (s: ViewState) => void = () => {},
  ) {}

  private emit(): void {
    this.onChange(this.state);
  }

  private async guard<T>(op: () => Promise<T>): Promise<T | null> {
    try {
      const out = await op();
      this.state.offline = false;
      return out;
    } catch (err) {
      if (err instanceof ApiError) {
        this.state.notice = err.message;
      } else {
        this.state.offline = true;
        this.state.notice = 'service unreachable';
      }
      this.emit();
      return null;
    }
  }

  async reset(family: string, rank: number, level: number, principal: boolean): Promise<void> {
    const seed = await this.guard(() => this.client.reset(family, rank, level, principal));
    if (!seed) return;
    this.state.seed = seed;
    this.state.lastDiff = null;
    this.state.census = null;
    this.state.report = null;
    this.state.expanded = new Set();
    this.state.notice = null;
    this.emit();
  }

  /** True when a click on this vertex index would send a request. */
  canMutate(vertex: number): boolean {
    const seed = this.state.seed;
    return (
      !this.state.busy && seed !== null && vertex >= 0 && vertex < seed.quiver.n_mut
    );
  }

  async clickVertex(vertex: number): Promise<void> {
    const seed = this.state.seed;
    if (!seed || this.state.busy) return;
    if (vertex >= seed.quiver.n_mut) {
      this.state.notice = `${seed.quiver.labels[vertex]} is frozen`;
      this.emit();
      return;
    }
    this.state.busy = true;
    this.emit();
    const before = decodeArrows(seed.arrows);
    const resp = await this.guard(() => this.client.mutate(vertex));
    this.state.busy = false;
    if (!resp) return;
    this.state.seed = resp.seed;
    this.state.lastDiff = diffArrows(before, decodeArrows(resp.seed.arrows));
    this.state.census = null; // counts refer to the previous seed
    this.state.notice = null;
    this.emit();
  }

  async undo(): Promise<void> {
    if (this.state.busy || !this.state.seed) return;
    this.state.busy = true;
    this.emit();
    const seed = await this.guard(() => this.client.undo());
    this.state.busy = false;
    if (!seed) return;
    this.state.seed = seed;
    this.state.lastDiff = null;
    this.state.census = null;
    this.state.notice = null;
    this.emit();
  }

  async loadCensus(budget?: number): Promise<void> {
    const census = await this.guard(() => this.client.census(budget));
    if (!census) return;
    this.state.census = census;
    this.emit();
  }

  async loadReport(): Promise<void> {
    const report = await this.guard(() => this.client.report());
    if (!report) return;
    this.state.report = report;
    this.emit();
  }

  toggleExpand(vertex: number): void {
    if (this.state.expanded.has(vertex)) this.state.expanded.delete(vertex);
    else this.state.expanded.add(vertex);
    this.emit();
  }
}

export function censusSummary(c: CensusJson): string {
  if (c.status === 'budget_exceeded') {
    return `partial result: ${c.nodes_explored} clusters explored, budget exceeded`;
  }
  return `${c.clusters} clusters / ${c.variables} variables`;
}
