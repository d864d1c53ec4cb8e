/** Thin typed client over the workbench JSON API. */

import { CensusJson, MutateResponse, ReportJson, SeedJson } from './types';

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
  ) {
    super(message);
  }
}

export class Client {
  constructor(
    private base = '',
    private fetchImpl: FetchLike = (i, init) => fetch(i, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await this.fetchImpl(this.base + path, init);
    const body = await resp.json().catch(() => ({}));
    if (!resp.ok) {
      const detail = (body as { detail?: string; error?: string }) ?? {};
      throw new ApiError(resp.status, detail.detail ?? detail.error ?? resp.statusText);
    }
    return body as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(payload),
    });
  }

  seed(): Promise<SeedJson> {
    return this.request('/api/seed');
  }

  reset(family: string, rank: number, level: number, principal: boolean): Promise<SeedJson> {
    return this.post('/api/reset', { family, rank, level, principal });
  }

  mutate(vertex: number | string): Promise<MutateResponse> {
    return this.post('/api/mutate', { vertex });
  }

  undo(): Promise<SeedJson> {
    return this.post('/api/undo', {});
  }

  census(budget?: number): Promise<CensusJson> {
    const qs = budget === undefined ? '' : `?budget=${budget}`;
    return this.request(`/api/census${qs}`);
  }

  report(): Promise<ReportJson> {
    return this.request('/api/report');
  }
}
