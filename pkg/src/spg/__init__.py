"""Exact solvers for the two-player shortest path game."""

from .engine import Solution, price_of_anarchy, solve, spgd, value_at
from .graph import GameGraph, classify, load_and_validate, make_graph

__all__ = [
    "GameGraph",
    "Solution",
    "classify",
    "load_and_validate",
    "make_graph",
    "price_of_anarchy",
    "solve",
    "spgd",
    "value_at",
]
