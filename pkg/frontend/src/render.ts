// SVG board rendering against a narrow document facade so tests can use
// a plain stub instead of a browser DOM. Pure view: every number printed
// here is copied from the server payload.

import { forceLayout } from './layout.js';
import type { BoardModel } from './model.js';

export interface ElementLike {
  setAttribute(name: string, value: string): void;
  appendChild(child: ElementLike): void;
  addEventListener(type: string, listener: () => void): void;
  textContent: string | null;
}

export interface DocumentLike {
  createElementNS(ns: string, tag: string): ElementLike;
  createElement(tag: string): ElementLike;
}

const SVG_NS = 'http://www.w3.org/2000/svg';

export interface RenderCallbacks {
  onMove(next: number): void;
}

function svgEl(doc: DocumentLike, tag: string, attrs: Record<string, string>): ElementLike {
  const el = doc.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) {
    el.setAttribute(k, v);
  }
  return el;
}

function label(model: BoardModel, v: number): string {
  const labels = model.session?.graph.labels;
  return labels ? labels[v] : String(v);
}

function visitedBadges(model: BoardModel): Map<number, string> {
  const badges = new Map<number, string>();
  for (const [v, parity] of model.session?.state.visited ?? []) {
    const mark = parity === 0 ? 'A' : 'B';
    badges.set(v, (badges.get(v) ?? '') + mark);
  }
  return badges;
}

export function renderBoard(
  doc: DocumentLike,
  mount: ElementLike,
  model: BoardModel,
  callbacks: RenderCallbacks,
): void {
  const session = model.session;
  if (!session) {
    const note = doc.createElement('p');
    note.setAttribute('class', 'empty');
    note.textContent = 'no active session';
    mount.appendChild(note);
    return;
  }
  const g = session.graph;
  const pos = forceLayout(g.n, g.edges);
  const legal = new Map(session.legal_moves.map((m) => [m.next, m]));
  const clickable = model.isHumanTurn();

  if (model.connectionLost) {
    const banner = doc.createElement('div');
    banner.setAttribute('class', 'banner connection-lost');
    banner.textContent = 'connection lost - retry when the server is back';
    mount.appendChild(banner);
  }

  const svg = svgEl(doc, 'svg', {
    viewBox: '0 0 640 420',
    width: '640',
    height: '420',
    class: 'board',
  });
  mount.appendChild(svg);

  const current = session.state.current;
  for (const [u, v, cost] of g.edges) {
    const fromCurrent = u === current ? v : v === current && !g.directed ? u : null;
    const mv = fromCurrent !== null ? legal.get(fromCurrent) : undefined;
    const isLegal = mv !== undefined;
    const line = svgEl(doc, 'line', {
      x1: String(pos[u].x),
      y1: String(pos[u].y),
      x2: String(pos[v].x),
      y2: String(pos[v].y),
      class: isLegal && clickable ? 'edge legal' : 'edge',
      'data-edge': `${u}-${v}`,
    });
    if (isLegal && clickable && mv) {
      line.addEventListener('click', () => callbacks.onMove(mv.next));
    }
    svg.appendChild(line);
    const mx = (pos[u].x + pos[v].x) / 2;
    const my = (pos[u].y + pos[v].y) / 2;
    const tag = svgEl(doc, 'text', {
      x: String(mx),
      y: String(my - 4),
      class: 'edge-cost',
    });
    tag.textContent = String(cost);
    svg.appendChild(tag);
    if (isLegal && mv?.what_if) {
      const hint = svgEl(doc, 'text', {
        x: String(mx),
        y: String(my + 12),
        class: 'what-if',
        'data-move': String(mv.next),
      });
      hint.textContent = `(${mv.what_if.decider},${mv.what_if.follower})`;
      svg.appendChild(hint);
    }
  }

  const badges = visitedBadges(model);
  for (let v = 0; v < g.n; v++) {
    const cls = ['vertex'];
    if (v === g.s) cls.push('source');
    if (v === g.t) cls.push('sink');
    if (v === current) cls.push('current');
    const circle = svgEl(doc, 'circle', {
      cx: String(pos[v].x),
      cy: String(pos[v].y),
      r: '14',
      class: cls.join(' '),
      'data-vertex': String(v),
    });
    if (clickable && legal.has(v)) {
      circle.setAttribute('class', cls.concat('legal').join(' '));
      circle.addEventListener('click', () => callbacks.onMove(v));
    }
    svg.appendChild(circle);
    const name = svgEl(doc, 'text', {
      x: String(pos[v].x),
      y: String(pos[v].y + 4),
      class: 'vertex-label',
    });
    name.textContent = label(model, v);
    svg.appendChild(name);
    const badge = badges.get(v);
    if (badge) {
      const b = svgEl(doc, 'text', {
        x: String(pos[v].x + 16),
        y: String(pos[v].y - 12),
        class: 'visited-badge',
        'data-badge': String(v),
      });
      b.textContent = badge;
      svg.appendChild(b);
    }
  }

  const panel = doc.createElement('div');
  panel.setAttribute('class', 'panel');
  const costs = doc.createElement('p');
  costs.setAttribute('class', 'running-costs');
  costs.textContent =
    `A paid ${session.state.cost_a}, B paid ${session.state.cost_b}`;
  panel.appendChild(costs);

  if (session.state.terminal) {
    const done = doc.createElement('p');
    done.setAttribute('class', 'summary');
    done.textContent =
      `game over: (${session.state.cost_a},${session.state.cost_b})`;
    panel.appendChild(done);
    if (model.equilibrium) {
      const eq = model.equilibrium;
      const matched =
        eq.cost_a === session.state.cost_a && eq.cost_b === session.state.cost_b;
      const compare = doc.createElement('p');
      compare.setAttribute('class', 'spe-compare');
      compare.textContent = matched
        ? `you played the equilibrium (${eq.cost_a},${eq.cost_b})`
        : `equilibrium play would end (${eq.cost_a},${eq.cost_b})`;
      panel.appendChild(compare);
    }
  } else {
    const turn = doc.createElement('p');
    turn.setAttribute('class', 'turn');
    turn.textContent = model.isHumanTurn()
      ? `your move (${session.state.to_move})`
      : `waiting for ${session.state.to_move}`;
    panel.appendChild(turn);
  }

  if (model.lastError) {
    const err = doc.createElement('p');
    err.setAttribute('class', 'error');
    err.textContent = model.lastRule
      ? `${model.lastError} [${model.lastRule}]`
      : model.lastError;
    panel.appendChild(err);
  }

  const log = doc.createElement('p');
  log.setAttribute('class', 'move-log');
  log.textContent = `moves: ${model.moveLog().map((v) => label(model, v)).join(' > ')}`;
  panel.appendChild(log);
  mount.appendChild(panel);
}
