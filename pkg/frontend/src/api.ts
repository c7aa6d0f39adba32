// Thin fetch wrappers over the session API. The fetch function is
// injectable so tests can replay recorded server transcripts.

import type { ApiErrorJson, GraphDoc, SessionJson, SolutionJson } from './types.js';

export interface ResponseLike {
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}

export type FetchLike = (url: string, init?: {
  method?: string;
  headers?: Record<string, string>;
  body?: string;
}) => Promise<ResponseLike>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly payload: ApiErrorJson,
  ) {
    super(payload.error ?? payload.detail ?? `HTTP ${status}`);
  }
}

export class ApiClient {
  constructor(
    private readonly fetchFn: FetchLike,
    private readonly base = '',
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const res = await this.fetchFn(this.base + path, {
      method,
      headers: { 'Content-Type': 'application/json' },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!res.ok) {
      throw new ApiError(res.status, (await res.json()) as ApiErrorJson);
    }
    if (res.status === 204) {
      return undefined as T;
    }
    return (await res.json()) as T;
  }

  solve(graph: GraphDoc): Promise<SolutionJson> {
    return this.request('POST', '/api/solve', graph);
  }

  createSession(graph: GraphDoc, humanSide: 'A' | 'B',
                mode: 'engine' | 'human' = 'engine'): Promise<SessionJson> {
    return this.request('POST', '/api/sessions', {
      graph,
      mode,
      human_side: humanSide,
    });
  }

  readSession(sid: string): Promise<SessionJson> {
    return this.request('GET', `/api/sessions/${sid}`);
  }

  postMove(sid: string, next: number): Promise<SessionJson> {
    return this.request('POST', `/api/sessions/${sid}/moves`, { next });
  }

  deleteSession(sid: string): Promise<void> {
    return this.request('DELETE', `/api/sessions/${sid}`);
  }
}
