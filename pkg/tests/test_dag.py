import random

import pytest

from spg import errors
from spg.dag import dag_tables, solve_dag
from spg.engine import solve
from spg.graph import make_graph
from spg.values import TOP


def test_example2(example2):
    sol = solve_dag(example2)
    assert (sol.cost_a, sol.cost_b) == (10, 2)
    assert sol.walk == (0, 1, 3, 4, 5)


def test_single_arc():
    g = make_graph(2, [(0, 1, 7)], s=0, t=1, directed=True)
    sol = solve_dag(g)
    assert (sol.cost_a, sol.cost_b) == (7, 0)


def test_diamond_tie_breaks_to_lowest_id():
    g = make_graph(4, [(0, 1, 1), (0, 2, 1), (1, 3, 5), (2, 3, 5)], s=0, t=3, directed=True)
    assert solve_dag(g).walk == solve(g).walk == (0, 1, 3)


def test_rejects_non_dag():
    g = make_graph(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)], s=0, t=2, directed=True)
    with pytest.raises(errors.NotADag):
        solve_dag(g)
    u = make_graph(2, [(0, 1, 1)], s=0, t=1, directed=False)
    with pytest.raises(errors.NotADag):
        solve_dag(u)


def test_tables_structure(example2):
    tb = dag_tables(example2)
    assert tb.p_d[example2.t] == 0 and tb.p_f[example2.t] == 0
    for v in range(example2.n):
        if tb.p_d[v] is not TOP:
            if v != example2.t:
                assert tb.p_f[v] == tb.p_d[tb.choice[v]]


def test_off_path_vertices_get_top():
    g = make_graph(4, [(0, 1, 1), (1, 3, 1), (2, 2 + 1, 4), (0, 2, 9)], s=0, t=3, directed=True)
    # vertex set has all reaching t here; craft one that does not
    g = make_graph(4, [(0, 1, 1), (1, 3, 1), (0, 2, 9)], s=0, t=3, directed=True)
    tb = dag_tables(g)
    assert tb.p_d[2] is TOP and tb.p_f[2] is TOP and tb.choice[2] is None


def test_arc_examination_count(example2):
    tb = dag_tables(example2)
    assert tb.arcs_examined == len(example2.edges)


def random_dag(rng, n, p=0.4, costs=(0, 20), distinct=False):
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append([u, v])
    if not any(e == [0, n - 1] for e in edges):
        edges.append([0, n - 1])
    if distinct:
        values = rng.sample(range(1, 4 * len(edges) + 1), len(edges))
        edges = [(u, v, c) for (u, v), c in zip(edges, values)]
    else:
        edges = [(u, v, rng.randint(*costs)) for u, v in edges]
    return make_graph(n, edges, s=0, t=n - 1, directed=True)


def test_differential_vs_engine_1000():
    """1000 seeded random DAGs: exact cost equality, walk equality on distinct costs."""
    rng = random.Random(424242)
    for i in range(1000):
        n = rng.randint(2, 10)
        distinct = i % 2 == 0
        g = random_dag(rng, n, distinct=distinct)
        fast = solve_dag(g)
        slow = solve(g)
        assert (fast.cost_a, fast.cost_b) == (slow.cost_a, slow.cost_b), f"instance {i}"
        if distinct:
            assert fast.walk == slow.walk, f"instance {i}"
