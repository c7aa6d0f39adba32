import random
from fractions import Fraction

import pytest

from spg import errors
from spg.engine import price_of_anarchy, solve, spgd, value_at
from spg.graph import make_graph
from spg.rules import initial_state, move_to, replay_walk

from conftest import example1_graph
from oracles import brute_force_solve


def walk_labels(g, walk):
    return [g.label(v) for v in walk]


def test_example2_solution(example2):
    sol = solve(example2)
    assert (sol.cost_a, sol.cost_b) == (10, 2)
    assert walk_labels(example2, sol.walk) == ["s", "a", "c", "d", "t"]
    assert sol.payers == ("A", "B", "A", "B")


def test_single_arc():
    g = make_graph(2, [(0, 1, 3)], s=0, t=1, directed=True)
    sol = solve(g)
    assert (sol.cost_a, sol.cost_b) == (3, 0)
    assert sol.walk == (0, 1)


def test_example1_oracle_frozen(example1):
    # frozen from the exhaustive expansion oracle: one traversal of the
    # odd cycle hands the expensive arc to the first player
    d, f, walk = brute_force_solve(example1)
    assert (d, f) == (12, 2)
    sol = solve(example1)
    assert (sol.cost_a, sol.cost_b) == (12, 2)
    assert walk_labels(example1, sol.walk) == ["s", "v", "x", "y", "v", "t"]
    assert sol.walk == walk


def test_example1_large_m_same_shape():
    g = example1_graph(1000)
    sol = solve(g)
    assert (sol.cost_a, sol.cost_b) == (1002, 2)


def test_outerplanar_split(outerplanar):
    sol = solve(outerplanar)
    assert (sol.cost_a, sol.cost_b) == (2, 1)
    labels = walk_labels(outerplanar, sol.walk)
    assert "a" in labels and "b" in labels
    assert (sol.cost_a, sol.cost_b, tuple(sol.walk)) == brute_force_solve(outerplanar)


def test_s_equals_t():
    g = make_graph(2, [(0, 1, 1)], s=0, t=0, directed=True)
    sol = solve(g)
    assert (sol.cost_a, sol.cost_b) == (0, 0)
    assert sol.walk == (0,)


def test_spgd_example2(example2):
    assert spgd(example2, 10, 2)
    assert not spgd(example2, 9, 2)
    assert not spgd(example2, 10, 1)


def test_spgd_single_arc():
    g = make_graph(2, [(0, 1, 3)], s=0, t=1, directed=True)
    assert spgd(g, 3, 0)


def test_price_of_anarchy(example2, poa100):
    assert price_of_anarchy(poa100) == Fraction(101, 2)
    assert price_of_anarchy(example2) == Fraction(4, 3)
    g = make_graph(2, [(0, 1, 3)], s=0, t=1, directed=True)
    assert price_of_anarchy(g) == 1


def test_price_of_anarchy_zero_shortest():
    g = make_graph(2, [(0, 1, 0)], s=0, t=1, directed=True)
    with pytest.raises(errors.ZeroShortestPath):
        price_of_anarchy(g)


def test_value_at_example2(example2):
    s1 = move_to(example2, initial_state(example2), 1)  # at a, B to move
    pair, _ = value_at(example2, s1)
    assert pair == (2, 5)
    s_c = replay_walk(example2, [0, 1, 3])  # at c, A to move
    pair, children = value_at(example2, s_c)
    assert pair == (5, 1)
    what_if = {m.next: p for m, p in children}
    assert what_if[4] == (5, 1)
    assert what_if[5] == (6, 0)


def test_value_at_terminal(example2):
    end = replay_walk(example2, [0, 1, 3, 4, 5])
    pair, children = value_at(example2, end)
    assert pair == (0, 0) and children == []


def test_value_at_root_what_if(example2):
    pair, children = value_at(example2, initial_state(example2))
    assert pair == (10, 2)
    assert [(m.next, p) for m, p in children] == [(1, (10, 2))]


def test_modes_agree_on_fixtures(example1, example2, outerplanar):
    for g in (example1, example2, outerplanar):
        a = solve(g, mode="memoized")
        b = solve(g, mode="dfs")
        assert (a.cost_a, a.cost_b, a.walk) == (b.cost_a, b.cost_b, b.walk)


def test_solve_deterministic(example2):
    assert solve(example2) == solve(example2)


def test_vertex_limit_guard(monkeypatch):
    edges = [(i, i + 1, 1) for i in range(70)]
    g = make_graph(71, edges, s=0, t=70, directed=True)
    with pytest.raises(errors.TooManyVertices):
        solve(g, mode="memoized")
    sol = solve(g, mode="dfs")
    assert sol.cost_a == 35 and sol.cost_b == 35
    monkeypatch.setenv("SPG_ENGINE_VERTEX_LIMIT", "128")
    sol2 = solve(g, mode="memoized")
    assert (sol2.cost_a, sol2.cost_b) == (35, 35)


def _random_graph(rng, n, directed):
    edges = []
    seen = set()
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            key = (u, v) if directed else (min(u, v), max(u, v))
            if key in seen:
                continue
            if rng.random() < 0.45:
                seen.add(key)
                edges.append((u, v, rng.randint(0, 8)))
    return edges


def random_playable_graph(rng, n, directed):
    while True:
        edges = _random_graph(rng, n, directed)
        if not edges:
            continue
        try:
            return make_graph(n, edges, s=0, t=n - 1, directed=directed)
        except errors.SpgError:
            continue


def test_oracle_equivalence_random_graphs():
    """Engine equals the memo-free exhaustive expansion on 200 instances."""
    rng = random.Random(2024)
    for i in range(200):
        n = rng.randint(2, 7) if i % 2 else rng.randint(2, 9)
        g = random_playable_graph(rng, n, directed=bool(i % 3))
        d, f, walk = brute_force_solve(g)
        sol = solve(g)
        assert (sol.cost_a, sol.cost_b) == (d, f), f"instance {i}"
        assert sol.walk == walk, f"instance {i}"


def test_dfs_mode_agrees_random():
    rng = random.Random(77)
    for _ in range(40):
        g = random_playable_graph(rng, rng.randint(2, 7), directed=rng.random() < 0.5)
        a = solve(g, mode="memoized")
        b = solve(g, mode="dfs")
        assert (a.cost_a, a.cost_b, a.walk) == (b.cost_a, b.cost_b, b.walk)


def test_subgame_consistency_along_walk(example2, example1, outerplanar):
    """Every suffix of the equilibrium walk is itself the equilibrium."""
    rng = random.Random(5)
    graphs = [example2, example1, outerplanar]
    graphs += [random_playable_graph(rng, rng.randint(3, 9), rng.random() < 0.5) for _ in range(200)]
    for g in graphs:
        sol = solve(g)
        state = initial_state(g)
        for i, v in enumerate(sol.walk[1:], start=1):
            rest = sol.walk[i - 1:]
            suffix_cost = [0, 0]
            par = (i - 1) % 2
            for j in range(len(rest) - 1):
                c = next(c for w, c, _ in g.successors(rest[j]) if w == rest[j + 1])
                suffix_cost[(par + j) % 2] += c
            pair, _ = value_at(g, state)
            mover_cost = suffix_cost[par]
            other_cost = suffix_cost[par ^ 1]
            assert pair == (mover_cost, other_cost)
            state = move_to(g, state, v)


def test_optimality_against_deviations():
    """On the walk, no deviating move improves the deviator's cost-to-go."""
    rng = random.Random(31)
    for _ in range(60):
        g = random_playable_graph(rng, rng.randint(3, 8), rng.random() < 0.5)
        sol = solve(g)
        state = initial_state(g)
        for v in sol.walk[1:]:
            pair, children = value_at(g, state)
            chosen = dict((m.next, p) for m, p in children)[v]
            assert chosen == pair
            for m, p in children:
                assert (p.decider, p.follower, m.next) >= (pair.decider, pair.follower, v)
            state = move_to(g, state, v)


def test_engine_options_match_rules_legality():
    """The mask-based evaluator sees exactly the moves the rules allow."""
    from spg.engine import Evaluator
    from spg.rules import initial_state, is_terminal, legal_moves, move_to

    rng = random.Random(909)
    for _ in range(80):
        g = random_playable_graph(rng, rng.randint(2, 8), rng.random() < 0.5)
        ev = Evaluator(g)
        state = initial_state(g)
        while not is_terminal(state, g):
            mask = 0
            for v, p in state.visited:
                mask |= Evaluator.bit(v, int(p))
            via_engine = sorted(
                w for _, w, _, _ in ev.options(state.current, int(state.parity), mask))
            via_rules = [m.next for m in legal_moves(g, state)]
            assert via_engine == via_rules
            state = move_to(g, state, rng.choice(via_rules))
