// Test doubles: a fetch that replays recorded server exchanges, and a
// minimal DOM implementing the renderer's document facade.

import { readFileSync } from 'node:fs';
import { join } from 'node:path';
import type { FetchLike, ResponseLike } from '../src/api.js';
import type { DocumentLike, ElementLike } from '../src/render.js';

interface Exchange {
  method: string;
  url: string;
  body: unknown;
  status: number;
  response: unknown;
}

export function loadTranscript(): Exchange[] {
  const raw = readFileSync(
    join(__dirname, 'fixtures', 'transcript.json'), 'utf-8');
  return JSON.parse(raw) as Exchange[];
}

function deepEqual(a: unknown, b: unknown): boolean {
  return JSON.stringify(a) === JSON.stringify(b);
}

/**
 * Replays recorded request/response pairs in order of first match; each
 * exchange is consumed once. Unmatched requests throw, so a test can
 * prove that an interaction sent nothing by counting calls.
 */
export function transcriptFetch(exchanges: Exchange[]): FetchLike & { calls: number } {
  const remaining = [...exchanges];
  const fn = (async (url: string, init?: { method?: string; body?: string }) => {
    fn.calls += 1;
    const method = init?.method ?? 'GET';
    const body = init?.body === undefined ? null : JSON.parse(init.body);
    const idx = remaining.findIndex(
      (e) => e.method === method && e.url === url && deepEqual(e.body, body),
    );
    if (idx < 0) {
      throw new Error(`no recorded exchange for ${method} ${url} ${init?.body ?? ''}`);
    }
    const [e] = remaining.splice(idx, 1);
    const res: ResponseLike = {
      ok: e.status < 400,
      status: e.status,
      json: async () => e.response,
    };
    return res;
  }) as FetchLike & { calls: number };
  fn.calls = 0;
  return fn;
}

export class StubElement implements ElementLike {
  attrs: Record<string, string> = {};
  children: StubElement[] = [];
  listeners: Record<string, Array<() => void>> = {};
  textContent: string | null = null;

  constructor(readonly tag: string) {}

  setAttribute(name: string, value: string): void {
    this.attrs[name] = value;
  }

  appendChild(child: ElementLike): void {
    this.children.push(child as StubElement);
  }

  addEventListener(type: string, listener: () => void): void {
    (this.listeners[type] ??= []).push(listener);
  }

  click(): void {
    for (const fn of this.listeners['click'] ?? []) fn();
  }

  /** Depth-first collection of descendants matching a predicate. */
  collect(pred: (el: StubElement) => boolean): StubElement[] {
    const out: StubElement[] = [];
    const walk = (el: StubElement) => {
      if (pred(el)) out.push(el);
      el.children.forEach(walk);
    };
    walk(this);
    return out;
  }

  byClass(cls: string): StubElement[] {
    return this.collect((el) => (el.attrs['class'] ?? '').split(' ').includes(cls));
  }
}

export class StubDocument implements DocumentLike {
  createElementNS(_ns: string, tag: string): ElementLike {
    return new StubElement(tag);
  }

  createElement(tag: string): ElementLike {
    return new StubElement(tag);
  }
}
