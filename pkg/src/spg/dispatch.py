"""Algorithm selection: route a graph to the cheapest applicable solver."""

from __future__ import annotations

from . import engine
from .cactus import solve_cactus, solve_directed_cactus
from .dag import solve_dag
from .errors import NoPathToSink, SpgError
from .graph import GameGraph, classify

ALGORITHMS = ("auto", "engine", "engine-dfs", "dag", "cactus",
              "directed-cactus", "tree")


def solve_forced_path(g: GameGraph):
    """Replay the unique s-t path of a tree; nobody ever has a choice."""
    parent = {g.s: None}
    stack = [g.s]
    while stack:
        v = stack.pop()
        if v == g.t:
            break
        for w, _, _ in g.successors(v):
            if w not in parent:
                parent[w] = v
                stack.append(w)
    if g.t not in parent:
        raise NoPathToSink(f"no path from s={g.s} to t={g.t}")
    walk = [g.t]
    while walk[-1] != g.s:
        walk.append(parent[walk[-1]])
    walk.reverse()
    return engine.finalize_solution(g, walk, len(walk) - 1, "tree")


def choose_algorithm(g: GameGraph) -> str:
    cls = classify(g)
    if cls.is_tree:
        return "tree"
    if cls.is_dag:
        return "dag"
    if cls.is_cactus:
        return "cactus"
    if cls.is_directed_cactus:
        return "directed-cactus"
    if g.n <= engine.vertex_limit():
        return "engine"
    return "engine-dfs"


def solve_with(g: GameGraph, algorithm: str = "auto"):
    if algorithm not in ALGORITHMS:
        raise SpgError(f"unknown algorithm '{algorithm}'")
    if algorithm == "auto":
        algorithm = choose_algorithm(g)
    if algorithm == "tree":
        return solve_forced_path(g)
    if algorithm == "dag":
        return solve_dag(g)
    if algorithm == "cactus":
        return solve_cactus(g)
    if algorithm == "directed-cactus":
        return solve_directed_cactus(g)
    if algorithm == "engine-dfs":
        return engine.solve(g, mode="dfs")
    return engine.solve(g, mode="memoized")
