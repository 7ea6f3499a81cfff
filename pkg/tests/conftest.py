import random

import pytest

from actbij.core import is_connected_matroid
from actbij.examples import diamond_doubled, digon, k3, k4
from actbij.graphs import OrderedDigraph, om_from_digraph


def random_multigraph(rng: random.Random, max_vertices=6, max_edges=10, min_edges=0):
    """Loops, parallel edges, bridges and disconnected graphs all occur."""
    nv = rng.randint(1, max_vertices)
    vertices = tuple(chr(97 + i) for i in range(nv))
    ne = rng.randint(min_edges, max_edges)
    edges = tuple((rng.choice(vertices), rng.choice(vertices)) for _ in range(ne))
    return OrderedDigraph(vertices, edges)


def random_om(rng: random.Random, max_vertices=6, max_edges=10, min_edges=0):
    return om_from_digraph(random_multigraph(rng, max_vertices, max_edges, min_edges))


def random_connected_om(rng: random.Random, max_vertices=5, max_edges=8):
    """A graph whose matroid is connected (loopless 2-connected graph)."""
    while True:
        vertices = tuple(chr(97 + i) for i in range(rng.randint(2, max_vertices)))
        ne = rng.randint(2, max_edges)
        edges = []
        for _ in range(ne):
            t = rng.choice(vertices)
            h = rng.choice([v for v in vertices if v != t])
            edges.append((t, h))
        m = om_from_digraph(OrderedDigraph(vertices, tuple(edges)))
        if m.n >= 2 and is_connected_matroid(m):
            return m


def subsets(n: int):
    for mask in range(1 << n):
        yield frozenset(i for i in range(1, n + 1) if mask >> (i - 1) & 1)


@pytest.fixture(scope="session")
def k3_om():
    return k3()


@pytest.fixture(scope="session")
def k4_om():
    return k4()


@pytest.fixture(scope="session")
def diamond_om():
    return diamond_doubled()


@pytest.fixture(scope="session")
def digon_om():
    return digon()
