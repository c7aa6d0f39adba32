"""Linear-time equilibrium computation on directed acyclic graphs.

One reverse-topological sweep: for each vertex the mover picks the
successor minimising its own onward cost, breaking ties by the opponent's
cost and then by successor id, exactly as the generic engine does.
Successors with no path to the sink are skipped, so infeasible entries
never poison a minimum; such vertices keep TOP in the tables.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoPathToSink, NotADag
from .graph import GameGraph
from .values import TOP, CostValue

_UNSET = -1


@dataclass(frozen=True)
class DagTables:
    """Per-vertex mover/follower costs-to-go and the chosen successor."""

    p_d: dict[int, CostValue]
    p_f: dict[int, CostValue]
    choice: dict[int, int | None]
    arcs_examined: int


def _reverse_topological(g: GameGraph) -> list[int]:
    """Plain Kahn order, reversed; raises NotADag on a directed cycle."""
    n = g.n
    indeg = [0] * n
    succ = g._succ
    for row in succ:
        for w, _, _ in row:
            indeg[w] += 1
    ready = [v for v in range(n) if indeg[v] == 0]
    order = []
    while ready:
        v = ready.pop()
        order.append(v)
        for w, _, _ in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    if len(order) != n:
        raise NotADag("graph contains a directed cycle")
    order.reverse()
    return order


def dag_tables(g: GameGraph) -> DagTables:
    if not g.directed:
        raise NotADag("graph is undirected")
    order = _reverse_topological(g)

    # A vertex reaches t exactly when its table entry turns finite during
    # the sweep, so no separate reachability pass is needed.
    n = g.n
    INF = None
    pd: list = [INF] * n
    pf: list = [INF] * n
    choice: list = [_UNSET] * n
    pd[g.t] = 0
    pf[g.t] = 0
    succ = g._succ
    examined = 0
    t = g.t
    for v in order:
        row = succ[v]
        examined += len(row)
        if v == t:
            continue
        best_own = INF
        best_other = 0
        best_u = _UNSET
        for u, c, _ in row:
            pfu = pf[u]
            if pfu is INF:
                continue
            own = c + pfu
            if best_u == _UNSET or own < best_own:
                best_own, best_other, best_u = own, pd[u], u
            elif own == best_own and pd[u] < best_other:
                best_other, best_u = pd[u], u
        if best_u != _UNSET:
            pd[v] = best_own
            pf[v] = best_other
            choice[v] = best_u

    return DagTables(
        p_d={v: (TOP if pd[v] is INF else pd[v]) for v in range(n)},
        p_f={v: (TOP if pf[v] is INF else pf[v]) for v in range(n)},
        choice={v: (None if choice[v] == _UNSET else choice[v]) for v in range(n)},
        arcs_examined=examined,
    )


def solve_dag(g: GameGraph):
    """Equilibrium Solution on a DAG in one pass over the arcs."""
    from .engine import finalize_solution

    tables = dag_tables(g)
    if g.s == g.t:
        from .engine import Solution

        return Solution(0, 0, (g.s,), (), 0, "dag")
    if tables.p_d[g.s] is TOP:
        raise NoPathToSink(f"no path from s={g.s} to t={g.t}")
    walk = [g.s]
    v = g.s
    while v != g.t:
        v = tables.choice[v]
        walk.append(v)
    return finalize_solution(g, walk, tables.arcs_examined, "dag")
