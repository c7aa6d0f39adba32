// Small deterministic force layout: vertices start on a circle and relax
// under spring attraction along edges and pairwise repulsion. No
// randomness, so positions are stable across renders and tests.

export interface Point {
  x: number;
  y: number;
}

export function forceLayout(
  n: number,
  edges: [number, number, number][],
  width = 640,
  height = 420,
  iterations = 150,
): Point[] {
  const cx = width / 2;
  const cy = height / 2;
  const radius = Math.min(width, height) * 0.38;
  const pos: Point[] = [];
  for (let i = 0; i < n; i++) {
    const angle = (2 * Math.PI * i) / Math.max(n, 1);
    pos.push({ x: cx + radius * Math.cos(angle), y: cy + radius * Math.sin(angle) });
  }
  if (n <= 2) {
    return pos;
  }
  const k = radius / Math.sqrt(n);
  for (let it = 0; it < iterations; it++) {
    const disp: Point[] = pos.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let dx = pos[i].x - pos[j].x;
        let dy = pos[i].y - pos[j].y;
        const d2 = dx * dx + dy * dy + 0.01;
        const f = (k * k) / d2;
        dx *= f;
        dy *= f;
        disp[i].x += dx;
        disp[i].y += dy;
        disp[j].x -= dx;
        disp[j].y -= dy;
      }
    }
    for (const [u, v] of edges) {
      const dx = pos[v].x - pos[u].x;
      const dy = pos[v].y - pos[u].y;
      const d = Math.sqrt(dx * dx + dy * dy) + 0.01;
      const f = (d / k) * 0.05;
      disp[u].x += dx * f;
      disp[u].y += dy * f;
      disp[v].x -= dx * f;
      disp[v].y -= dy * f;
    }
    const cool = 1 - it / iterations;
    for (let i = 0; i < n; i++) {
      pos[i].x += Math.max(-8, Math.min(8, disp[i].x)) * cool;
      pos[i].y += Math.max(-8, Math.min(8, disp[i].y)) * cool;
      pos[i].x = Math.max(24, Math.min(width - 24, pos[i].x));
      pos[i].y = Math.max(24, Math.min(height - 24, pos[i].y));
    }
  }
  return pos;
}
