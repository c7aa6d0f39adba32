import pytest

from spg import errors
from spg.graph import (
    block_cut_tree,
    classify,
    cooperative_shortest_path,
    load_and_validate,
    make_graph,
    topological_order,
    vertices_reaching,
)

from oracles import shortest_path_by_enumeration, simple_cycles_per_edge


def test_load_single_arc():
    g = make_graph(2, [(0, 1, 3)], s=0, t=1, directed=True)
    assert g.n == 2
    assert g.edges[0].cost == 3


def test_load_example2_is_dag(example2):
    assert classify(example2).is_dag


def test_load_rejects_unreachable_sink():
    with pytest.raises(errors.NoPathToSink):
        make_graph(3, [(1, 2, 1)], s=0, t=2, directed=True)


def test_load_rejects_negative_cost():
    with pytest.raises(errors.NegativeCost):
        make_graph(2, [(0, 1, -1)], s=0, t=1, directed=True)


def test_load_rejects_self_loop():
    with pytest.raises(errors.SelfLoop):
        make_graph(2, [(0, 0, 1), (0, 1, 1)], s=0, t=1, directed=True)


def test_load_rejects_parallel_edges():
    with pytest.raises(errors.ParallelEdge):
        make_graph(2, [(0, 1, 1), (0, 1, 2)], s=0, t=1, directed=True)
    with pytest.raises(errors.ParallelEdge):
        make_graph(2, [(0, 1, 1), (1, 0, 2)], s=0, t=1, directed=False)


def test_antiparallel_arcs_allowed_when_directed():
    g = make_graph(2, [(0, 1, 1), (1, 0, 2)], s=0, t=1, directed=True)
    assert len(g.edges) == 2


def test_strict_mode_rejects_zero_costs():
    with pytest.raises(errors.ZeroCost):
        make_graph(2, [(0, 1, 0)], s=0, t=1, directed=True, strict_positive=True)
    g = make_graph(2, [(0, 1, 0)], s=0, t=1, directed=True)
    assert g.edges[0].cost == 0


def test_load_rejects_malformed():
    with pytest.raises(errors.MalformedInput):
        load_and_validate({"directed": True, "n": 2, "edges": [(0, 1)], "s": 0, "t": 1})
    with pytest.raises(errors.MalformedInput):
        load_and_validate({"directed": True, "n": 0, "edges": [], "s": 0, "t": 0})


def test_classify_path_graph_is_tree_and_cactus():
    g = make_graph(3, [(0, 1, 1), (1, 2, 1)], s=0, t=2, directed=False)
    c = classify(g)
    assert c.is_tree and c.is_cactus and not c.is_general


def test_classify_shared_edge_not_cactus():
    # K4 has edges lying on more than one simple cycle
    edges = [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)]
    g = make_graph(4, edges, s=0, t=3, directed=False)
    counts = simple_cycles_per_edge(g)
    assert max(counts.values()) > 1
    assert not classify(g).is_cactus


def test_classify_matches_cycle_counting_oracle():
    cases = [
        make_graph(4, [(0, 1, 1), (1, 2, 1), (2, 0, 1), (2, 3, 1)], s=0, t=3),
        make_graph(5, [(0, 1, 1), (1, 2, 1), (2, 0, 1), (2, 3, 1), (3, 4, 1), (4, 2, 1)], s=0, t=4),
        make_graph(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)], s=0, t=3),
    ]
    for g in cases:
        counts = simple_cycles_per_edge(g)
        assert classify(g).is_cactus == (max(counts.values()) <= 1)


def test_topological_order_example2(example2):
    order = topological_order(example2)
    pos = {v: i for i, v in enumerate(order)}
    for e in example2.edges:
        assert pos[e.u] < pos[e.v]
    assert order == [0, 1, 2, 3, 4, 5]


def test_topological_order_single_vertex():
    g = make_graph(1, [], s=0, t=0, directed=True)
    assert topological_order(g) == [0]


def test_topological_order_rejects_cycle():
    g = make_graph(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)], s=0, t=2, directed=True)
    with pytest.raises(errors.CycleDetected):
        topological_order(g)


def test_vertices_reaching_example2(example2):
    assert vertices_reaching(example2, example2.t) == frozenset(range(6))


def test_vertices_reaching_excludes_isolated():
    g = make_graph(3, [(0, 1, 1)], s=0, t=1, directed=True)
    assert vertices_reaching(g, 1) == frozenset({0, 1})


def test_vertices_reaching_undirected_path():
    g = make_graph(3, [(0, 1, 1), (1, 2, 1)], s=0, t=2, directed=False)
    assert vertices_reaching(g, 2) == frozenset({0, 1, 2})


def test_vertices_reaching_matches_forward_search():
    import random

    from spg.graph import reachable_from

    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(2, 12)
        edges = []
        seen = set()
        for _ in range(rng.randint(1, 2 * n)):
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v and (u, v) not in seen:
                seen.add((u, v))
                edges.append((u, v, 1))
        if not edges:
            continue
        t = edges[0][1]
        s = edges[0][0]
        g = make_graph(n, edges, s=s, t=t, directed=True)
        expected = frozenset(v for v in range(n) if t in reachable_from(g, v))
        assert vertices_reaching(g, t) == expected


def test_block_cut_tree_triangle_with_pendant():
    g = make_graph(4, [(0, 1, 1), (1, 2, 1), (2, 0, 1), (2, 3, 1)], s=0, t=3)
    bct = block_cut_tree(g)
    assert len(bct.blocks) == 2
    kinds = sorted((b.is_bridge, b.is_cycle) for b in bct.blocks)
    assert kinds == [(False, True), (True, False)]
    assert bct.articulation_points == frozenset({2})


def test_block_cut_tree_tree_every_edge_own_block():
    g = make_graph(4, [(0, 1, 1), (1, 2, 1), (1, 3, 1)], s=0, t=3)
    bct = block_cut_tree(g)
    assert len(bct.blocks) == 3
    assert all(b.is_bridge for b in bct.blocks)


def test_block_cut_tree_two_triangles_sharing_vertex():
    edges = [(0, 1, 1), (1, 2, 1), (2, 0, 1), (2, 3, 1), (3, 4, 1), (4, 2, 1)]
    g = make_graph(5, edges, s=0, t=4)
    bct = block_cut_tree(g)
    assert len(bct.blocks) == 2
    assert all(b.is_cycle for b in bct.blocks)
    assert bct.articulation_points == frozenset({2})


def test_block_cut_tree_rejects_directed(example2):
    with pytest.raises(errors.NotUndirected):
        block_cut_tree(example2)


def test_classify_agrees_with_block_cut_tree():
    import random

    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(2, 10)
        edges = set()
        for _ in range(rng.randint(1, 2 * n)):
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v:
                edges.add((min(u, v), max(u, v)))
        edges = [(u, v, 1) for u, v in edges]
        if not edges:
            continue
        s, t = edges[0][0], edges[0][1]
        g = make_graph(n, edges, s=s, t=t, directed=False)
        bct = block_cut_tree(g)
        from spg.graph import _is_connected_undirected

        expected = _is_connected_undirected(g) and all(
            b.is_bridge or b.is_cycle for b in bct.blocks
        )
        assert classify(g).is_cactus == expected


def test_shortest_path_example2(example2):
    assert cooperative_shortest_path(example2) == 9


def test_shortest_path_single_edge():
    g = make_graph(2, [(0, 1, 3)], s=0, t=1, directed=True)
    assert cooperative_shortest_path(g) == 3


def test_shortest_path_poa_figure(poa100):
    assert cooperative_shortest_path(poa100) == 2


def test_shortest_path_matches_enumeration():
    import random

    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(2, 9)
        edges = set()
        for _ in range(rng.randint(n, 3 * n)):
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v:
                edges.add((min(u, v), max(u, v)))
        edges = [(u, v, rng.randint(0, 9)) for u, v in edges]
        if not edges:
            continue
        g_edges = edges + [(0, n - 1, 50)]
        try:
            g = make_graph(n, g_edges, s=0, t=n - 1, directed=False)
        except errors.ParallelEdge:
            continue
        assert cooperative_shortest_path(g) == shortest_path_by_enumeration(g)


def test_graph_class_flags_consistent():
    import random

    from spg.generators import gen_random_cactus, gen_random_dag

    rng = random.Random(14)
    docs = [gen_random_cactus(rng.randint(2, 15), i) for i in range(30)]
    docs += [gen_random_dag(rng.randint(2, 15), i) for i in range(30)]
    for doc in docs:
        g = load_and_validate(doc.as_dict())
        c = classify(g)
        if c.is_tree:
            assert c.is_cactus
        if c.is_dag or c.is_directed_cactus:
            assert g.directed and not c.is_tree and not c.is_cactus
        if c.is_cactus or c.is_tree:
            assert not g.directed
