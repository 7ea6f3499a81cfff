"""Small named digraphs used by the docs, the data files and the tests."""

from __future__ import annotations

from .core import OrientedMatroid
from .graphs import OrderedDigraph, om_from_digraph


def k3_digraph() -> OrderedDigraph:
    """Triangle; edges 1=ab, 2=ac, 3=bc, all oriented alphabetically."""
    return OrderedDigraph(("a", "b", "c"), (("a", "b"), ("a", "c"), ("b", "c")))


def k4_digraph() -> OrderedDigraph:
    """Complete graph on four vertices; edges 1=ab, 2=ac, 3=bc, 4=ad,
    5=bd, 6=cd, all oriented alphabetically."""
    return OrderedDigraph(
        ("a", "b", "c", "d"),
        (("a", "b"), ("a", "c"), ("b", "c"), ("a", "d"), ("b", "d"), ("c", "d")),
    )


def diamond_doubled_digraph() -> OrderedDigraph:
    """A diamond (K4 minus an edge) with one doubled edge: rank 3 on six
    elements, with proper cyclic flats {3,5}, {2,4,6} and {1,3,4,5}."""
    return OrderedDigraph(
        ("u", "v", "w", "x"),
        (("u", "v"), ("u", "x"), ("v", "w"), ("u", "w"), ("v", "w"), ("w", "x")),
    )


def digon_digraph() -> OrderedDigraph:
    """Two parallel edges; the smallest graph with a bounded orientation."""
    return OrderedDigraph(("a", "b"), (("a", "b"), ("a", "b")))


def k3() -> OrientedMatroid:
    return om_from_digraph(k3_digraph())


def k4() -> OrientedMatroid:
    return om_from_digraph(k4_digraph())


def diamond_doubled() -> OrientedMatroid:
    return om_from_digraph(diamond_doubled_digraph())


def digon() -> OrientedMatroid:
    return om_from_digraph(digon_digraph())
