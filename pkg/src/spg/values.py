"""Exact cost values shared by every solver.

Costs are non-negative integers plus a distinguished infeasible value TOP.
TOP is absorbing under addition and compares greater than every finite
value, so DP minima simply never select it while it stays representable.
"""

from __future__ import annotations

from typing import NamedTuple, Union


class _Top:
    __slots__ = ()

    def __repr__(self) -> str:
        return "TOP"


TOP = _Top()

CostValue = Union[int, _Top]


def is_top(x: CostValue) -> bool:
    return x is TOP


def add(a: CostValue, b: CostValue) -> CostValue:
    if a is TOP or b is TOP:
        return TOP
    return a + b


def value_key(x: CostValue):
    """Sort key placing TOP after every finite value."""
    if x is TOP:
        return (1, 0)
    return (0, x)


class CostPair(NamedTuple):
    """Cost split relative to whoever moves at a state.

    decider pays for the move taken at the state; follower is the other
    player.  TOP appears in both components or in neither.
    """

    decider: CostValue
    follower: CostValue

    @property
    def infeasible(self) -> bool:
        return self.decider is TOP


INFEASIBLE_PAIR = CostPair(TOP, TOP)
ZERO_PAIR = CostPair(0, 0)


class OptionRank(NamedTuple):
    """Lexicographic comparison key for a decider's option.

    own: decider's total if the option is taken; other: the opponent's
    total; next_vertex: id of the vertex the option moves to.  A decider
    minimises own cost, then the opponent's cost, then the next vertex id.
    """

    own: CostValue
    other: CostValue
    next_vertex: int

    def key(self):
        return (value_key(self.own), value_key(self.other), self.next_vertex)


def best_option(ranks):
    """Minimal OptionRank, or None for an empty iterable."""
    best = None
    best_key = None
    for r in ranks:
        k = r.key()
        if best_key is None or k < best_key:
            best, best_key = r, k
    return best
