"""Generic exact solver: backward induction over the game tree.

Works on any graph.  States are (vertex, parity, visited pair set); the
memoized mode keys its cache on that triple packed into bit masks, which
is sound because values are costs-to-go and accumulated costs never enter
the key.  The dfs mode runs the same recursion without a cache, trading
time for polynomial memory.
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .errors import NoPathToSink, TooManyVertices, ZeroShortestPath
from .graph import GameGraph, cooperative_shortest_path, vertices_reaching
from .rules import GameState, Move, is_terminal, payer_sequence, verify_complete_walk
from .values import CostPair, OptionRank, best_option

DEFAULT_VERTEX_LIMIT = 64
MODES = ("memoized", "dfs")


@dataclass(frozen=True)
class Solution:
    """An equilibrium walk with its exact cost split and solver telemetry."""

    cost_a: int
    cost_b: int
    walk: tuple[int, ...]
    payers: tuple[str, ...]
    node_count: int
    algorithm: str


def finalize_solution(g: GameGraph, walk, node_count: int, algorithm: str) -> Solution:
    """Verify a complete walk's legality and package the outcome."""
    cost_a, cost_b = verify_complete_walk(g, walk)
    return Solution(
        cost_a=cost_a,
        cost_b=cost_b,
        walk=tuple(walk),
        payers=tuple(payer_sequence(walk)),
        node_count=node_count,
        algorithm=algorithm,
    )


def vertex_limit() -> int:
    raw = os.environ.get("SPG_ENGINE_VERTEX_LIMIT")
    if raw:
        return int(raw)
    return DEFAULT_VERTEX_LIMIT


class Evaluator:
    """Backward induction evaluator over mask-encoded states.

    One instance owns its memo table exclusively; a finished table may be
    shared by concurrent readers (value_at reuse in play sessions).
    """

    def __init__(self, g: GameGraph, memo: bool = True):
        self.g = g
        self.t = g.t
        self.succ = [tuple((w, c) for w, c, _ in g.successors(v)) for v in range(g.n)]
        self.memo: dict | None = {} if memo else None
        self.node_count = 0

    @staticmethod
    def bit(v: int, p: int) -> int:
        return 1 << ((v << 1) | p)

    def continuation(self, start: int, p: int, mask: int) -> bool:
        """Sink reachable from (start, p) through pairs outside mask."""
        t = self.t
        if start == t:
            return True
        succ = self.succ
        seen = mask
        stack = [(start, p)]
        while stack:
            v, q = stack.pop()
            r = q ^ 1
            for w, _ in succ[v]:
                if w == t:
                    return True
                b = 1 << ((w << 1) | r)
                if seen & b:
                    continue
                seen |= b
                stack.append((w, r))
        return False

    def options(self, v: int, p: int, mask: int):
        """Ranked legal options at a state: (rank, next, cost, child value)."""
        out = []
        q = p ^ 1
        for w, c in self.succ[v]:
            b = 1 << ((w << 1) | q)
            if mask & b:
                continue
            nmask = mask | b
            if w != self.t and not self.continuation(w, q, nmask):
                continue
            cd, cf = (0, 0) if w == self.t else self.value(w, q, nmask)
            out.append((OptionRank(c + cf, cd, w), w, c, (cd, cf)))
        return out

    def value(self, v: int, p: int, mask: int) -> tuple[int, int]:
        """(decider, follower) cost-to-go of the state (v, p, mask)."""
        if v == self.t:
            return (0, 0)
        if self.memo is not None:
            key = (v, p, mask)
            hit = self.memo.get(key)
            if hit is not None:
                return hit
        self.node_count += 1
        best = best_option(r for r, _, _, _ in self.options(v, p, mask))
        if best is None:
            raise NoPathToSink(f"no feasible continuation from vertex {v}")
        result = (best.own, best.other)
        if self.memo is not None:
            self.memo[key] = result
        return result

    def best_walk(self) -> list[int]:
        g = self.g
        walk = [g.s]
        v, p = g.s, 0
        mask = self.bit(g.s, 0)
        while v != self.t:
            best = None
            choice = None
            for rank, w, _, _ in self.options(v, p, mask):
                k = rank.key()
                if best is None or k < best:
                    best, choice = k, w
            if choice is None:
                raise NoPathToSink(f"no feasible continuation from vertex {v}")
            walk.append(choice)
            v, p = choice, p ^ 1
            mask |= self.bit(v, p)
        return walk


def _check_inputs(g: GameGraph, mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if mode == "memoized" and g.n > vertex_limit():
        raise TooManyVertices(
            f"memoized mode supports up to {vertex_limit()} vertices; "
            f"got {g.n} (use dfs mode or raise SPG_ENGINE_VERTEX_LIMIT)"
        )
    if g.s not in vertices_reaching(g, g.t):
        raise NoPathToSink(f"no path from s={g.s} to t={g.t}")


def _with_recursion_room(g: GameGraph):
    need = 4 * max(len(g.edges), g.n) + 1000
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def solve(g: GameGraph, mode: str = "memoized") -> Solution:
    """Unique equilibrium walk and cost split under the fixed tie-break."""
    _check_inputs(g, mode)
    if g.s == g.t:
        return Solution(0, 0, (g.s,), (), 0, f"engine-{mode}")
    _with_recursion_room(g)
    ev = Evaluator(g, memo=(mode == "memoized"))
    d, f = ev.value(g.s, 0, Evaluator.bit(g.s, 0))
    walk = ev.best_walk()
    sol = finalize_solution(g, walk, ev.node_count, f"engine-{mode}")
    if (sol.cost_a, sol.cost_b) != (d, f):
        raise AssertionError(
            f"replayed costs {(sol.cost_a, sol.cost_b)} disagree with value {(d, f)}"
        )
    return sol


def spgd(g: GameGraph, c_a: int, c_b: int, mode: str = "memoized") -> bool:
    """Decision form: are both equilibrium costs within the given bounds?"""
    if c_a < 0 or c_b < 0:
        raise ValueError("cost bounds must be non-negative")
    sol = solve(g, mode=mode)
    return sol.cost_a <= c_a and sol.cost_b <= c_b


def price_of_anarchy(g: GameGraph, mode: str = "memoized") -> Fraction:
    """(equilibrium total cost) / (cooperative shortest path), exact."""
    shortest = cooperative_shortest_path(g)
    if shortest == 0:
        raise ZeroShortestPath("cooperative shortest path has zero cost")
    sol = solve(g, mode=mode)
    return Fraction(sol.cost_a + sol.cost_b, shortest)


def value_at(g: GameGraph, state: GameState, mode: str = "memoized",
             evaluator: Evaluator | None = None):
    """Cost-to-go at a state plus the what-if pair for each legal move.

    Returns (CostPair, list[(Move, CostPair)]) where each move's pair is
    (edge cost + child follower, child decider) from the mover's side.
    Terminal states yield ((0, 0), []).
    """
    if is_terminal(state, g):
        return CostPair(0, 0), []
    _check_inputs(g, mode)
    _with_recursion_room(g)
    ev = evaluator if evaluator is not None else Evaluator(g, memo=(mode == "memoized"))
    mask = 0
    for v, p in state.visited:
        mask |= Evaluator.bit(v, int(p))
    edge_to = {w: g.edges[idx] for w, _, idx in g.successors(state.current)}
    per_move = []
    for rank, w, _, _ in ev.options(state.current, int(state.parity), mask):
        per_move.append((Move(edge=edge_to[w], next=w), CostPair(rank.own, rank.other)))
    per_move.sort(key=lambda mc: mc[0].next)
    best = best_option(
        OptionRank(pair.decider, pair.follower, move.next) for move, pair in per_move
    )
    if best is None:
        raise NoPathToSink(f"no feasible continuation from vertex {state.current}")
    return CostPair(best.own, best.other), per_move
