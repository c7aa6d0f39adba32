// Browser bootstrap: wire the model, renderer and page controls together.

import { ApiClient } from './api.js';
import { BoardModel } from './model.js';
import { renderBoard } from './render.js';
import type { DocumentLike, ElementLike } from './render.js';
import type { GraphDoc } from './types.js';

const SAMPLE: GraphDoc = {
  directed: true,
  n: 6,
  labels: ['s', 'a', 'b', 'c', 'd', 't'],
  edges: [
    [0, 1, 5], [1, 3, 1], [1, 2, 2], [3, 4, 5], [3, 5, 6], [2, 4, 1], [4, 5, 1],
  ],
  s: 0,
  t: 5,
};

function mountApp(): void {
  const root = document.getElementById('app');
  if (!root) return;
  const graphBox = document.getElementById('graph-json') as HTMLTextAreaElement;
  const sideBox = document.getElementById('side') as HTMLSelectElement;
  const startBtn = document.getElementById('start') as HTMLButtonElement;
  const board = document.getElementById('board')!;
  graphBox.value = JSON.stringify(SAMPLE, null, 1);

  const client = new ApiClient((url, init) => fetch(url, init));
  const model = new BoardModel(client);

  const redraw = () => {
    board.replaceChildren();
    // the renderer works against a narrow facade; the browser DOM satisfies it
    renderBoard(document as unknown as DocumentLike,
                board as unknown as ElementLike, model, {
      onMove: (next) => {
        void model.playTurn(next).then((posted) => {
          if (posted) redraw();
        });
      },
    });
  };

  startBtn.addEventListener('click', () => {
    let graph: GraphDoc;
    try {
      graph = JSON.parse(graphBox.value) as GraphDoc;
    } catch {
      board.replaceChildren();
      const p = document.createElement('p');
      p.className = 'error';
      p.textContent = 'graph box does not contain valid JSON';
      board.appendChild(p);
      return;
    }
    void model
      .start(graph, sideBox.value === 'B' ? 'B' : 'A')
      .then(redraw)
      .catch((err) => {
        board.replaceChildren();
        const p = document.createElement('p');
        p.className = 'error';
        p.textContent = String(err);
        board.appendChild(p);
      });
  });
}

mountApp();
