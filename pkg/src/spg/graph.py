"""Graph representation, validation, classification and decompositions.

Vertices are dense integer ids 0..n-1 assigned by input order; that order
is also the fixed numbering used for tie-breaking everywhere else in the
package.  All costs are exact non-negative integers.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    CycleDetected,
    MalformedInput,
    NegativeCost,
    NoPathToSink,
    NotUndirected,
    ParallelEdge,
    SelfLoop,
    ZeroCost,
)


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    cost: int


@dataclass(frozen=True)
class GameGraph:
    """Immutable weighted game graph with source s and sink t.

    For directed graphs each Edge is the arc u -> v; for undirected graphs
    it may be traversed both ways.  Adjacency caches are built once at
    construction and shared by concurrent readers.
    """

    directed: bool
    n: int
    edges: tuple[Edge, ...]
    s: int
    t: int
    labels: tuple[str, ...] | None = None
    _succ: tuple = field(init=False, repr=False, compare=False, default=())
    _pred: tuple = field(init=False, repr=False, compare=False, default=())

    def __post_init__(self):
        succ = [[] for _ in range(self.n)]
        pred = [[] for _ in range(self.n)]
        for idx, e in enumerate(self.edges):
            succ[e.u].append((e.v, e.cost, idx))
            pred[e.v].append((e.u, e.cost, idx))
            if not self.directed:
                succ[e.v].append((e.u, e.cost, idx))
                pred[e.u].append((e.v, e.cost, idx))
        for row in succ:
            row.sort()
        for row in pred:
            row.sort()
        object.__setattr__(self, "_succ", tuple(tuple(r) for r in succ))
        object.__setattr__(self, "_pred", tuple(tuple(r) for r in pred))

    def successors(self, v: int) -> tuple:
        """(neighbor, cost, edge_index) triples leaving v, sorted by id."""
        return self._succ[v]

    def predecessors(self, v: int) -> tuple:
        return self._pred[v]

    def label(self, v: int) -> str:
        if self.labels is not None:
            return self.labels[v]
        return str(v)


@dataclass(frozen=True)
class GraphClass:
    is_tree: bool
    is_dag: bool
    is_cactus: bool
    is_directed_cactus: bool
    is_bipartite: bool
    is_general: bool


@dataclass(frozen=True)
class Block:
    """One biconnected component: either a bridge or a 2-connected block.

    For cycle blocks `ring` lists the vertices in cyclic order.
    """

    index: int
    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]
    is_bridge: bool
    is_cycle: bool
    ring: tuple[int, ...] | None = None


@dataclass(frozen=True)
class BlockCutTree:
    blocks: tuple[Block, ...]
    articulation_points: frozenset[int]
    blocks_of_vertex: tuple[tuple[int, ...], ...]


def load_and_validate(doc, strict_positive: bool = False) -> GameGraph:
    """Build a GameGraph from a parsed document, rejecting bad input.

    Accepts a mapping with keys directed/n/edges/s/t (labels optional) or
    any object exposing those attributes.  Verifies s-to-t reachability,
    which for directed graphs means directed reachability.
    """
    if isinstance(doc, Mapping):
        get = doc.get
    else:
        def get(k, default=None):
            return getattr(doc, k, default)

    directed = get("directed")
    n = get("n")
    raw_edges = get("edges")
    s = get("s")
    t = get("t")
    labels = get("labels")

    if not isinstance(directed, bool):
        raise MalformedInput("'directed' must be a boolean")
    if not isinstance(n, int) or n <= 0:
        raise MalformedInput("'n' must be a positive integer")
    for name, v in (("s", s), ("t", t)):
        if not isinstance(v, int) or not 0 <= v < n:
            raise MalformedInput(f"'{name}' must be a vertex index in 0..{n - 1}")
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise MalformedInput("'labels' must list one label per vertex")
    if raw_edges is None:
        raise MalformedInput("'edges' is required")

    edges = []
    seen = set()
    for item in raw_edges:
        try:
            u, v, cost = item
        except (TypeError, ValueError):
            raise MalformedInput(f"edge {item!r} is not a (u, v, cost) triple")
        if not all(isinstance(x, int) for x in (u, v, cost)):
            raise MalformedInput(f"edge {item!r} must contain integers")
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedInput(f"edge ({u}, {v}) has a vertex index out of range")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if cost < 0:
            raise NegativeCost(f"edge ({u}, {v}) has negative cost {cost}")
        if strict_positive and cost == 0:
            raise ZeroCost(f"edge ({u}, {v}) has zero cost in strict mode")
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise ParallelEdge(f"parallel edge ({u}, {v})")
        seen.add(key)
        edges.append(Edge(u, v, cost))

    g = GameGraph(directed=directed, n=n, edges=tuple(edges), s=s, t=t, labels=labels)
    if s not in vertices_reaching(g, t):
        raise NoPathToSink(f"no path from s={s} to t={t}")
    return g


def make_graph(n: int, edges: Iterable[tuple[int, int, int]], s: int, t: int,
               directed: bool = False, labels: Sequence[str] | None = None,
               strict_positive: bool = False) -> GameGraph:
    """Convenience constructor running the same validation as file loads."""
    return load_and_validate(
        {"directed": directed, "n": n, "edges": list(edges), "s": s, "t": t,
         "labels": list(labels) if labels is not None else None},
        strict_positive=strict_positive,
    )


def vertices_reaching(g: GameGraph, target: int) -> frozenset[int]:
    """Exact set of vertices from which target is reachable (reverse search)."""
    seen = {target}
    stack = [target]
    while stack:
        v = stack.pop()
        for u, _, _ in g.predecessors(v):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return frozenset(seen)


def reachable_from(g: GameGraph, source: int) -> frozenset[int]:
    seen = {source}
    stack = [source]
    while stack:
        v = stack.pop()
        for w, _, _ in g.successors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def topological_order(g: GameGraph) -> list[int]:
    """Kahn's algorithm; lowest vertex id first among ready vertices.

    Restricted to the vertices on s-t paths the order automatically starts
    at s and ends at t, since s is the only source and t the only sink of
    that subgraph.
    """
    indeg = [0] * g.n
    for e in g.edges:
        indeg[e.v] += 1
    ready = [v for v in range(g.n) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for w, _, _ in g.successors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    if len(order) != g.n:
        raise CycleDetected("graph contains a directed cycle")
    return order


def is_acyclic(g: GameGraph) -> bool:
    try:
        topological_order(g)
        return True
    except CycleDetected:
        return False


def cooperative_shortest_path(g: GameGraph) -> int:
    """Minimal total edge cost of an s-t path (Dijkstra, exact integers)."""
    dist = {g.s: 0}
    heap = [(0, g.s)]
    done = set()
    while heap:
        d, v = heapq.heappop(heap)
        if v in done:
            continue
        if v == g.t:
            return d
        done.add(v)
        for w, c, _ in g.successors(v):
            nd = d + c
            if w not in done and nd < dist.get(w, nd + 1):
                dist[w] = nd
                heapq.heappush(heap, (nd, w))
    raise NoPathToSink(f"no path from s={g.s} to t={g.t}")


def _undirected_adjacency(g: GameGraph) -> list[list[tuple[int, int]]]:
    adj = [[] for _ in range(g.n)]
    for idx, e in enumerate(g.edges):
        adj[e.u].append((e.v, idx))
        adj[e.v].append((e.u, idx))
    for row in adj:
        row.sort()
    return adj


def _cycle_ring(vertices: set[int], edge_list: list[Edge]) -> tuple[int, ...] | None:
    """Cyclic vertex order of a block, or None if it is not a simple cycle."""
    if len(edge_list) != len(vertices) or len(vertices) < 3:
        return None
    nbr = {v: [] for v in vertices}
    for e in edge_list:
        nbr[e.u].append(e.v)
        nbr[e.v].append(e.u)
    if any(len(ns) != 2 for ns in nbr.values()):
        return None
    start = min(vertices)
    ring = [start]
    prev, cur = None, start
    for _ in range(len(vertices) - 1):
        a, b = nbr[cur]
        nxt = b if a == prev else a
        ring.append(nxt)
        prev, cur = cur, nxt
    if start not in nbr[ring[-1]]:
        return None
    return tuple(ring)


def block_cut_tree(g: GameGraph) -> BlockCutTree:
    """Biconnected decomposition of an undirected graph (iterative DFS).

    In a cactus every block with three or more vertices is a simple cycle
    and every edge belongs to exactly one block.
    """
    if g.directed:
        raise NotUndirected("block-cut tree is defined for undirected graphs")
    adj = _undirected_adjacency(g)
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    estack: list[int] = []
    raw_blocks: list[list[int]] = []
    artic = set()

    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        # frame: (vertex, parent edge index, adjacency iterator)
        frames = [(root, -1, iter(adj[root]))]
        while frames:
            v, pe, it = frames[-1]
            advanced = False
            for w, ei in it:
                if ei == pe:
                    continue
                if disc[w] == -1:
                    estack.append(ei)
                    disc[w] = low[w] = timer
                    timer += 1
                    frames.append((w, ei, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    estack.append(ei)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            frames.pop()
            if not frames:
                break
            u = frames[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                comp = []
                while True:
                    e = estack.pop()
                    comp.append(e)
                    if e == pe:
                        break
                raw_blocks.append(comp)
                if u == root:
                    root_children += 1
                    if root_children >= 2:
                        artic.add(u)
                else:
                    artic.add(u)

    blocks = []
    blocks_of_vertex: list[list[int]] = [[] for _ in range(n)]
    for bi, eidxs in enumerate(raw_blocks):
        vs = set()
        elist = []
        for ei in sorted(eidxs):
            e = g.edges[ei]
            vs.add(e.u)
            vs.add(e.v)
            elist.append(e)
        ring = _cycle_ring(vs, elist)
        block = Block(
            index=bi,
            vertices=tuple(sorted(vs)),
            edge_indices=tuple(sorted(eidxs)),
            is_bridge=(len(elist) == 1),
            is_cycle=(ring is not None),
            ring=ring,
        )
        blocks.append(block)
        for v in vs:
            blocks_of_vertex[v].append(bi)
    return BlockCutTree(
        blocks=tuple(blocks),
        articulation_points=frozenset(artic),
        blocks_of_vertex=tuple(tuple(b) for b in blocks_of_vertex),
    )


def _is_connected_undirected(g: GameGraph) -> bool:
    if g.n == 1:
        return True
    adj = _undirected_adjacency(g)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w, _ in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def _is_bipartite(g: GameGraph) -> bool:
    adj = _undirected_adjacency(g)
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for w, _ in adj[v]:
                if color[w] == -1:
                    color[w] = color[v] ^ 1
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def _blocks_all_cactus(bct: BlockCutTree) -> bool:
    return all(b.is_bridge or b.is_cycle for b in bct.blocks)


def _has_antiparallel_pair(g: GameGraph) -> bool:
    arcs = {(e.u, e.v) for e in g.edges}
    return any((v, u) in arcs for (u, v) in arcs)


def _underlying_undirected(g: GameGraph) -> GameGraph:
    """Undirected copy used for structural classification of digraphs."""
    return GameGraph(directed=False, n=g.n, edges=g.edges, s=g.s, t=g.t, labels=g.labels)


def classify(g: GameGraph) -> GraphClass:
    """Structural flags used to pick a solver."""
    is_bip = _is_bipartite(g)
    if g.directed:
        acyclic = is_acyclic(g)
        dir_cactus = False
        if not _has_antiparallel_pair(g):
            ug = _underlying_undirected(g)
            if _is_connected_undirected(ug) and _blocks_all_cactus(block_cut_tree(ug)):
                dir_cactus = True
        return GraphClass(
            is_tree=False,
            is_dag=acyclic,
            is_cactus=False,
            is_directed_cactus=dir_cactus,
            is_bipartite=is_bip,
            is_general=not (acyclic or dir_cactus),
        )
    connected = _is_connected_undirected(g)
    tree = connected and len(g.edges) == g.n - 1
    cactus = connected and _blocks_all_cactus(block_cut_tree(g))
    return GraphClass(
        is_tree=tree,
        is_dag=False,
        is_cactus=cactus,
        is_directed_cactus=False,
        is_bipartite=is_bip,
        is_general=not cactus,
    )
