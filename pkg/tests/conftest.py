"""Shared hypothesis strategies for randomized graph tests."""

import itertools

from hypothesis import strategies as st

from contractads import Graph


@st.composite
def connected_graphs(draw, min_n=1, max_n=6):
    """Random connected graph: random spanning tree plus extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    rest = sorted(e for e in itertools.combinations(range(n), 2) if e not in edges)
    if rest:
        extra = draw(st.sets(st.sampled_from(rest), max_size=len(rest)))
        edges |= extra
    return Graph(n, tuple(sorted(edges)))
