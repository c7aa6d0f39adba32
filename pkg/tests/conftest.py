import pytest

from spg.graph import make_graph


@pytest.fixture
def example2():
    """Six-vertex directed graph with equilibrium split (10, 2) and shortest path 9."""
    return make_graph(
        n=6,
        edges=[(0, 1, 5), (1, 3, 1), (1, 2, 2), (3, 4, 5), (3, 5, 6), (2, 4, 1), (4, 5, 1)],
        s=0,
        t=5,
        directed=True,
        labels=["s", "a", "b", "c", "d", "t"],
    )


def example1_graph(m: int):
    """Directed graph with an odd cycle that lets the mover at v hand off the big arc."""
    return make_graph(
        n=5,
        edges=[(0, 1, 1), (1, 4, m), (1, 2, 1), (2, 3, 1), (3, 1, 1)],
        s=0,
        t=4,
        directed=True,
        labels=["s", "v", "x", "y", "t"],
    )


@pytest.fixture
def example1():
    return example1_graph(10)


def poa_graph(m: int):
    """Three-vertex graph whose anarchy ratio is (1+m)/2."""
    return make_graph(
        n=3,
        edges=[(0, 2, 2), (0, 1, 1), (1, 2, m)],
        s=0,
        t=2,
        directed=True,
        labels=["s", "u", "t"],
    )


@pytest.fixture
def poa100():
    return poa_graph(100)


def outerplanar_graph(m: int):
    """Outerplanar counterexample: local equilibria do not compose."""
    return make_graph(
        n=6,
        edges=[(0, 1, 0), (1, 2, 0), (2, 3, 0), (3, 5, m), (3, 4, 1), (4, 5, 2), (1, 4, 0)],
        s=0,
        t=5,
        directed=False,
        labels=["s", "a", "c", "d", "b", "t"],
    )


@pytest.fixture
def outerplanar():
    return outerplanar_graph(10)
