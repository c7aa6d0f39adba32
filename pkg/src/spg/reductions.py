"""Instance constructions from two-player vertex geography and quantified
3-SAT, with tiny exhaustive deciders for both source games.

The constructions turn winner/truth questions into exact equilibrium cost
splits, so small instances double as end-to-end solver fixtures.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BadQuantifierPattern, MalformedInput, NotBipartite, TooLarge
from .graph import GameGraph, load_and_validate

GREEN = 0
RED = 1


@dataclass(frozen=True)
class GeographyInstance:
    """Directed graph with a start vertex; players alternate extending a
    vertex-simple path, and whoever cannot move loses."""

    n: int
    arcs: tuple[tuple[int, int], ...]
    start: int

    def __post_init__(self):
        if not 0 <= self.start < self.n:
            raise MalformedInput("start vertex out of range")
        for u, v in self.arcs:
            if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
                raise MalformedInput(f"bad arc ({u}, {v})")


@dataclass(frozen=True)
class QsatInstance:
    """Alternating formula over x1..xn (exists first, n even), in 3-CNF.

    Literals are signed 1-based variable indices; clauses may repeat a
    literal.
    """

    n: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.n < 2 or self.n % 2 != 0:
            raise BadQuantifierPattern(
                "variable count must be even so the last quantifier is universal"
            )
        for clause in self.clauses:
            if len(clause) != 3:
                raise MalformedInput("clauses carry exactly three literals")
            for lit in clause:
                if lit == 0 or abs(lit) > self.n:
                    raise MalformedInput(f"literal {lit} out of range")


@dataclass(frozen=True)
class ReductionOutput:
    graph: GameGraph
    c_a: int
    c_b: int
    roles: dict[str, int]          # source-instance role -> vertex id
    coloring: tuple[int, ...]      # GREEN / RED per vertex (bipartite witness)


def _check_two_sided(g: GameGraph, coloring) -> None:
    for e in g.edges:
        if coloring[e.u] == coloring[e.v]:
            raise AssertionError("construction lost bipartiteness")


def two_color(n: int, arcs, anchor: int) -> list[int]:
    """2-coloring of the underlying undirected graph, anchor colored green."""
    adj = [[] for _ in range(n)]
    for u, v in arcs:
        adj[u].append(v)
        adj[v].append(u)
    color = [-1] * n
    for root in [anchor] + list(range(n)):
        if color[root] != -1:
            continue
        color[root] = GREEN
        stack = [root]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if color[w] == -1:
                    color[w] = color[v] ^ 1
                    stack.append(w)
                elif color[w] == color[v]:
                    raise NotBipartite("graph admits no two-coloring")
    return color


def geography_to_spg(geo: GeographyInstance) -> ReductionOutput:
    """Game graph whose equilibrium identifies the geography winner.

    Original arcs cost 1.  Two escape vertices are added: every green
    vertex gets an arc of cost M to the new sink, every original red
    vertex an arc of cost M to a relay that reaches the sink for 1, with
    M one more than the source arc count.  A stuck player escapes at cost
    M and is thereby the loser; bounds (2, M) accept exactly the
    instances the first player wins.
    """
    color = two_color(geo.n, geo.arcs, geo.start)
    m_big = len(geo.arcs) + 1
    t = geo.n
    z = geo.n + 1
    edges = [(u, v, 1) for u, v in geo.arcs]
    for v in range(geo.n):
        if color[v] == GREEN:
            edges.append((v, t, m_big))
        else:
            edges.append((v, z, m_big))
    edges.append((z, t, 1))
    labels = [f"v{i}" for i in range(geo.n)] + ["t", "z"]
    g = load_and_validate({
        "directed": True,
        "n": geo.n + 2,
        "edges": edges,
        "s": geo.start,
        "t": t,
        "labels": labels,
    })
    coloring = tuple(color + [RED, GREEN])
    _check_two_sided(g, coloring)
    return ReductionOutput(g, c_a=2, c_b=m_big,
                           roles={"t": t, "z": z}, coloring=coloring)


def solve_geography(geo: GeographyInstance, max_vertices: int = 12) -> str:
    """Exhaustive minimax over vertex-simple paths: returns "A" or "B"."""
    if geo.n > max_vertices:
        raise TooLarge(f"instance has {geo.n} > {max_vertices} vertices")
    succ = [[] for _ in range(geo.n)]
    for u, v in geo.arcs:
        succ[u].append(v)

    @lru_cache(maxsize=None)
    def mover_wins(cur: int, visited: frozenset) -> bool:
        return any(
            w not in visited and not mover_wins(w, visited | {w})
            for w in succ[cur]
        )

    win = mover_wins(geo.start, frozenset({geo.start}))
    mover_wins.cache_clear()
    return "A" if win else "B"


def eval_qbf(q: QsatInstance, max_vars: int = 16) -> bool:
    """Exhaustive alternating evaluation: exists odd, forall even."""
    if q.n > max_vars:
        raise TooLarge(f"instance has {q.n} > {max_vars} variables")

    def sat(assign) -> bool:
        return all(
            any((lit > 0) == assign[abs(lit)] for lit in clause)
            for clause in q.clauses
        )

    def down(i: int, assign: dict) -> bool:
        if i > q.n:
            return sat(assign)
        outcomes = (
            down(i + 1, {**assign, i: val}) for val in (True, False)
        )
        if i % 2 == 1:
            return any(outcomes)
        return all(outcomes)

    return down(1, {})


def _gadget_size(i: int) -> int:
    return 6 if i % 2 == 1 else 8


def qsat_to_spg(q: QsatInstance) -> ReductionOutput:
    """Bipartite game graph whose equilibrium is (0, 2) iff the formula
    holds, and (4, 1) otherwise.

    One polygon per variable (six vertices for existential, eight for
    universal positions): crossing it commits the mover to a truth value.
    A clause vertex can be escaped cheaply only through a literal made
    true earlier; otherwise the stuck player pays the expensive clause
    exit.  Literal check edges therefore attach at the entry neighbour on
    the complementary side of the polygon, which is exactly the vertex
    left unvisited when the literal was chosen.
    """
    ids: dict[tuple, int] = {}
    labels: list[str] = []
    colors: list[int] = []

    def add(key, label, color) -> int:
        ids[key] = len(labels)
        labels.append(label)
        colors.append(color)
        return ids[key]

    for i in range(1, q.n + 1):
        size = _gadget_size(i)
        for j in range(size):
            if i % 2 == 1:
                color = GREEN if j % 2 == 0 else RED
            else:
                color = RED if j % 2 == 0 else GREEN
            add(("v", i, j), f"v{i},{j}", color)
        if i % 2 == 0:
            add(("u", i), f"u{i}", GREEN)
    for j in range(1, len(q.clauses) + 1):
        add(("c", j), f"c{j}", GREEN)
    add(("d",), "d", GREEN)
    add(("p",), "p", GREEN)
    add(("q",), "q", RED)
    add(("r",), "r", GREEN)
    add(("w",), "w", RED)
    add(("t",), "t", RED)

    edges: set[tuple[int, int, int]] = set()

    def connect(a, b, cost):
        ia, ib = ids[a], ids[b]
        edges.add((min(ia, ib), max(ia, ib), cost))

    for i in range(1, q.n + 1):
        size = _gadget_size(i)
        for j in range(size):
            connect(("v", i, j), ("v", i, (j + 1) % size), 0)
        if i % 2 == 0:
            connect(("v", i - 1, 3), ("u", i), 0)
            connect(("u", i), ("v", i, 0), 0)
            connect(("v", i, 2), ("r",), 2)
            connect(("v", i, 6), ("r",), 2)
            if i < q.n:
                connect(("v", i, 4), ("v", i + 1, 0), 0)
            else:
                connect(("v", i, 4), ("p",), 1)
        else:
            connect(("v", i, 1), ("r",), 2)
            connect(("v", i, 5), ("r",), 2)
    for j, clause in enumerate(q.clauses, start=1):
        connect(("q",), ("c", j), 0)
        connect(("w",), ("c", j), 4)
        for lit in clause:
            i = abs(lit)
            # the check edge lands on the complementary side's entry
            # neighbour: unvisited exactly when this literal was chosen
            if lit > 0:
                spot = ("v", i, 5) if i % 2 == 1 else ("v", i, 6)
            else:
                spot = ("v", i, 1) if i % 2 == 1 else ("v", i, 2)
            connect(spot, ("c", j), 3)
    connect(("p",), ("q",), 0)
    connect(("r",), ("t",), 0)
    connect(("w",), ("d",), 0)
    connect(("d",), ("t",), 0)

    g = load_and_validate({
        "directed": False,
        "n": len(labels),
        "edges": sorted(edges),
        "s": ids[("v", 1, 0)],
        "t": ids[("t",)],
        "labels": labels,
    })
    coloring = tuple(colors)
    _check_two_sided(g, coloring)
    roles = {label: idx for idx, label in enumerate(labels)}
    return ReductionOutput(g, c_a=0, c_b=2, roles=roles, coloring=coloring)
