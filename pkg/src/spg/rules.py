"""Operational semantics of a single play: turns, costs, move legality.

Legality folds both play restrictions into one reachability question on
the parity-expanded graph, whose nodes are (vertex, mover parity) pairs:
a move is legal iff it lands on an unvisited pair from which the sink is
still reachable through unvisited pairs.  Repeating a pair is exactly a
closed walk of even length, and a pair-simple path to the sink is a legal
continuation, so the two restrictions reduce to this single check.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

from .errors import IllegalMove, TerminalState
from .graph import Edge, GameGraph


class Parity(IntEnum):
    A_TO_MOVE = 0
    B_TO_MOVE = 1

    def flipped(self) -> "Parity":
        return Parity(self ^ 1)


@dataclass(frozen=True)
class GameState:
    """Current vertex, mover parity, visited pairs and accumulated costs."""

    current: int
    parity: Parity
    visited: frozenset[tuple[int, Parity]]
    cost_a: int = 0
    cost_b: int = 0


@dataclass(frozen=True)
class Move:
    edge: Edge
    next: int


def initial_state(g: GameGraph) -> GameState:
    return GameState(
        current=g.s,
        parity=Parity.A_TO_MOVE,
        visited=frozenset({(g.s, Parity.A_TO_MOVE)}),
    )


def is_terminal(state: GameState, g: GameGraph) -> bool:
    """Reaching t ends the game unconditionally, even if t has out-edges."""
    return state.current == g.t


def continuation_exists(g: GameGraph, start: int, parity: Parity,
                        forbidden: frozenset[tuple[int, Parity]]) -> bool:
    """True iff t is reachable from (start, parity) avoiding forbidden pairs.

    The start pair itself is not re-entered; t counts at either parity.
    """
    if start == g.t:
        return True
    stack = [(start, int(parity))]
    seen = {(start, int(parity))}
    while stack:
        v, p = stack.pop()
        q = p ^ 1
        for w, _, _ in g.successors(v):
            node = (w, q)
            if node in seen or (w, q) in forbidden:
                continue
            if w == g.t:
                return True
            seen.add(node)
            stack.append(node)
    return False


def illegal_reason(g: GameGraph, state: GameState, next_vertex: int) -> str | None:
    """None if moving to next_vertex is legal, else the violated rule tag.

    "R2" marks a revisited (vertex, parity) pair, "R1" a move with no
    feasible continuation to t.
    """
    q = state.parity.flipped()
    if (next_vertex, q) in state.visited:
        return "R2"
    blocked = state.visited | {(next_vertex, q)}
    if not continuation_exists(g, next_vertex, q, blocked):
        return "R1"
    return None


def legal_moves(g: GameGraph, state: GameState) -> list[Move]:
    """Legal moves from a non-terminal state, sorted by next-vertex id."""
    if is_terminal(state, g):
        raise TerminalState(f"game already ended at vertex {state.current}")
    moves = []
    for w, cost, idx in g.successors(state.current):
        if illegal_reason(g, state, w) is None:
            moves.append(Move(edge=g.edges[idx], next=w))
    return moves


def apply_move(g: GameGraph, state: GameState, move: Move) -> GameState:
    """Next state after the mover pays for and traverses the chosen edge."""
    if is_terminal(state, g):
        raise TerminalState(f"game already ended at vertex {state.current}")
    found = any(
        w == move.next and g.edges[idx] == move.edge
        for w, _, idx in g.successors(state.current)
    )
    if not found:
        raise IllegalMove(
            f"edge {move.edge} does not leave vertex {state.current}", rule=None
        )
    reason = illegal_reason(g, state, move.next)
    if reason is not None:
        raise IllegalMove(
            f"move to {move.next} violates ({reason})", rule=reason
        )
    q = state.parity.flipped()
    cost_a, cost_b = state.cost_a, state.cost_b
    if state.parity == Parity.A_TO_MOVE:
        cost_a += move.edge.cost
    else:
        cost_b += move.edge.cost
    return GameState(
        current=move.next,
        parity=q,
        visited=state.visited | {(move.next, q)},
        cost_a=cost_a,
        cost_b=cost_b,
    )


def move_to(g: GameGraph, state: GameState, next_vertex: int) -> GameState:
    """apply_move by target vertex id (there are no parallel edges)."""
    for w, _, idx in g.successors(state.current):
        if w == next_vertex:
            return apply_move(g, state, Move(edge=g.edges[idx], next=w))
    raise IllegalMove(f"no edge from {state.current} to {next_vertex}", rule=None)


def replay_walk(g: GameGraph, walk) -> GameState:
    """Replay a full walk from s, enforcing legality at every step.

    Returns the final state; raises IllegalMove / TerminalState if the
    walk is not a legal play ending where it ends.
    """
    walk = list(walk)
    if not walk or walk[0] != g.s:
        raise IllegalMove(f"walk must start at s={g.s}", rule=None)
    state = initial_state(g)
    for v in walk[1:]:
        state = move_to(g, state, v)
    return state


def payer_sequence(walk) -> list[str]:
    """Alternating payer labels for each move of a walk starting at s."""
    return ["A" if i % 2 == 0 else "B" for i in range(len(walk) - 1)]


def verify_complete_walk(g: GameGraph, walk) -> tuple[int, int]:
    """Check a full s-to-t walk in O(length) and return its cost split.

    A walk that follows existing edges, never repeats a (vertex, parity)
    pair, stops at its only visit of t and starts at s is a legal play:
    each suffix is itself the feasible continuation the move rules demand,
    so no reachability search is needed.
    """
    walk = list(walk)
    if not walk or walk[0] != g.s:
        raise IllegalMove(f"walk must start at s={g.s}", rule=None)
    if walk[-1] != g.t:
        raise IllegalMove(f"walk must end at t={g.t}", rule=None)
    seen = {(g.s, 0)}
    costs = [0, 0]
    for i, (u, w) in enumerate(zip(walk, walk[1:])):
        if u == g.t:
            raise IllegalMove("walk passes through t", rule=None)
        c = next((c for x, c, _ in g.successors(u) if x == w), None)
        if c is None:
            raise IllegalMove(f"no edge from {u} to {w}", rule=None)
        pair = (w, (i + 1) & 1)
        if pair in seen:
            raise IllegalMove(f"repeated pair {pair}", rule="R2")
        seen.add(pair)
        costs[i & 1] += c
    return costs[0], costs[1]
