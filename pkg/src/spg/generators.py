"""Seed-deterministic random instance generators for tests and benchmarks."""

from __future__ import annotations

import random

from .docio import GraphDocument


def _assign_costs(rng: random.Random, count: int, cost_range, distinct: bool):
    lo, hi = cost_range
    if distinct:
        span = max(hi - lo + 1, 3 * count)
        return rng.sample(range(lo, lo + span), count)
    return [rng.randint(lo, hi) for _ in range(count)]


def gen_random_cactus(n: int, seed: int, cost_range=(1, 20),
                      distinct: bool = False) -> GraphDocument:
    """Random connected cactus: a block tree of pendant edges and cycles.

    Deterministic in (n, seed).  s and t are distinct random vertices;
    the distinct flag draws pairwise-different costs.
    """
    if n < 2:
        raise ValueError("need at least two vertices")
    rng = random.Random(seed)
    edges_uv: list[tuple[int, int]] = []
    count = 1
    while count < n:
        attach = rng.randrange(count)
        remaining = n - count
        if remaining >= 2 and rng.random() < 0.55:
            length = rng.randint(3, min(7, remaining + 1))
            ring = [attach] + [count + i for i in range(length - 1)]
            count += length - 1
            for a, b in zip(ring, ring[1:]):
                edges_uv.append((a, b))
            edges_uv.append((ring[-1], ring[0]))
        else:
            edges_uv.append((attach, count))
            count += 1
    costs = _assign_costs(rng, len(edges_uv), cost_range, distinct)
    s = rng.randrange(n)
    t = rng.randrange(n - 1)
    if t >= s:
        t += 1
    return GraphDocument(
        directed=False, n=n,
        edges=tuple((u, v, c) for (u, v), c in zip(edges_uv, costs)),
        s=s, t=t, labels=None,
    )


def gen_random_directed_cactus(n: int, seed: int, cost_range=(1, 20),
                               distinct: bool = False) -> GraphDocument:
    """Random orientation of a cactus that keeps t reachable from s.

    Strip blocks between s and t point toward t (cycles become either a
    directed cycle or two directed entry-to-exit paths); all other blocks
    are oriented at random.
    """
    from .cactus import decompose
    from .graph import load_and_validate

    base = gen_random_cactus(n, seed, cost_range, distinct)
    rng = random.Random(seed ^ 0x9E3779B9)
    g = load_and_validate(base.as_dict())
    strip, _branches, bct, path_set = decompose(g)

    oriented: dict[frozenset, tuple[int, int]] = {}

    def orient(u, v):
        oriented[frozenset((u, v))] = (u, v)

    for comp in strip.components:
        if comp.kind == "bridge":
            orient(comp.near, comp.far)
        else:
            ring = list(comp.ring)
            l = ring.index(comp.far)
            if rng.random() < 0.5:
                for a, b in zip(ring, ring[1:] + ring[:1]):
                    orient(a, b)  # cyclic
            else:
                for i in range(l):
                    orient(ring[i], ring[i + 1])
                prev = ring[0]
                for v in reversed(ring[l + 1:]):
                    orient(prev, v)
                    prev = v
                if l < len(ring) - 1:
                    orient(prev, ring[l])
    for b_id, block in enumerate(bct.blocks):
        if b_id in path_set:
            continue
        if block.is_bridge:
            e = g.edges[block.edge_indices[0]]
            orient(*(  (e.u, e.v) if rng.random() < 0.5 else (e.v, e.u)))
        else:
            ring = list(block.ring)
            if rng.random() < 0.6:
                for a, b in zip(ring, ring[1:] + ring[:1]):
                    orient(a, b)
            else:
                m = rng.randrange(1, len(ring))
                for i in range(m):
                    orient(ring[i], ring[i + 1] if i + 1 < len(ring) else ring[0])
                prev = ring[0]
                for v in reversed(ring[m + 1:]):
                    orient(prev, v)
                    prev = v
                if m < len(ring) - 1:
                    orient(prev, ring[m])

    cost_of = {frozenset((u, v)): c for u, v, c in base.edges}
    edges = tuple(
        (u, v, cost_of[key]) for key, (u, v) in sorted(
            oriented.items(), key=lambda kv: kv[1])
    )
    return GraphDocument(directed=True, n=n, edges=edges, s=base.s, t=base.t,
                         labels=None)


def gen_random_dag(n: int, seed: int, arc_probability: float = 0.4,
                   cost_range=(0, 20), distinct: bool = False) -> GraphDocument:
    """Random DAG over a shuffled vertex order; s is first, t last.

    If t is not reachable from s, the order's chain arcs are added as a
    repair path.  Deterministic in (n, seed).
    """
    if n < 2:
        raise ValueError("need at least two vertices")
    if not 0 < arc_probability <= 1:
        raise ValueError("arc probability must be in (0, 1]")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges_uv = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < arc_probability:
                edges_uv.append((order[i], order[j]))
    s, t = order[0], order[-1]
    costs = _assign_costs(rng, len(edges_uv), cost_range, distinct)
    doc_edges = [(u, v, c) for (u, v), c in zip(edges_uv, costs)]
    from .graph import load_and_validate
    from .errors import NoPathToSink

    try:
        load_and_validate({"directed": True, "n": n, "edges": doc_edges,
                           "s": s, "t": t})
    except NoPathToSink:
        present = {(u, v) for u, v in edges_uv}
        lo, hi = cost_range
        for a, b in zip(order, order[1:]):
            if (a, b) not in present:
                doc_edges.append((a, b, rng.randint(lo, max(lo, hi))))
    return GraphDocument(directed=True, n=n, edges=tuple(doc_edges), s=s, t=t,
                         labels=None)
