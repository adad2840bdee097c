"""
Small graph builders and hypothesis strategies used across the suites.
"""
import random
from itertools import combinations

from hypothesis import strategies as st
from hypothesis.strategies import DrawFn, composite

from src.families.random_graphs import random_partial_2tree, random_td_graph
from src.graph.blocks import is_biconnected
from src.graph.core import Graph, build_graph, is_connected


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


@composite
def graphs(draw: DrawFn, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


@composite
def connected_graphs(draw: DrawFn, min_n: int = 2, max_n: int = 8) -> Graph:
    """Random spanning tree plus extra edges, so every draw is connected."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [p for p in combinations(range(n), 2) if p not in edges]
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), unique=True, max_size=n)))
    g = build_graph(n, edges)
    assert is_connected(g)
    return g


@composite
def partial_2trees(draw: DrawFn, min_n: int = 3, max_n: int = 10) -> Graph:
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_partial_2tree(n, random.Random(seed))


@composite
def td_graphs(draw: DrawFn, max_n: int = 9, max_d: int = 4):
    """(graph, elimination tree) pairs of bounded depth."""
    d = draw(st.integers(2, max_d))
    n = draw(st.integers(d, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_td_graph(n, d, random.Random(seed))


@composite
def biconnected_partial_2trees(draw: DrawFn, min_n: int = 4, max_n: int = 11) -> Graph:
    """
    2-connected graphs of tree-width at most 2, built without filtering.

    Starts from a cycle and repeatedly hangs a path (an ear) between the ends
    of an existing edge, sometimes dropping that edge. Either step is a
    parallel composition or a subdivision, so 2-connectivity and tree-width
    at most 2 are kept.
    """
    n = draw(st.integers(min_n, max_n))
    cycle = draw(st.integers(3, n))
    edges = {tuple(sorted((i, (i + 1) % cycle))) for i in range(cycle)}
    size = cycle
    while size < n:
        u, v = draw(st.sampled_from(sorted(edges)))
        inner = draw(st.integers(1, n - size))
        path = [u, *range(size, size + inner), v]
        edges |= {tuple(sorted(pair)) for pair in zip(path, path[1:])}
        if draw(st.booleans()):
            edges.discard((u, v))
        size += inner
    g = build_graph(n, edges)
    assert is_biconnected(g)
    return g
