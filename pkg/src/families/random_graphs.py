"""
Seeded random instances for property suites.

Every generator takes a `random.Random` so a suite is reproducible from one
seed. Vertex labels are shuffled where the construction would otherwise put
structure in the numbering.
"""
from __future__ import annotations

import random
from itertools import combinations
from typing import Optional

import networkx as nx

from ..graph.core import Edge, Graph, build_graph
from ..graph.elimination import EliminationTree
from ..utils.error_handler import InputError


def _relabel(n: int, edges: list[Edge], rng: random.Random) -> tuple[list[Edge], list[int]]:
    perm = list(range(n))
    rng.shuffle(perm)
    return [(perm[u], perm[v]) for u, v in edges], perm


def random_partial_2tree(n: int, rng: random.Random, keep: float = 0.6) -> Graph:
    """
    Connected graph of tree-width at most 2 on n >= 2 vertices.

    Grows a 2-tree by attaching each new vertex to a random existing edge,
    keeps a random spanning tree, and keeps every other edge with probability
    `keep`.
    """
    if n < 2:
        raise InputError(f"n must be at least 2, got {n}")
    edges: list[Edge] = [(0, 1)]
    if n >= 3:
        edges += [(0, 2), (1, 2)]
    for v in range(3, n):
        a, b = rng.choice(edges)
        edges += [(a, v), (b, v)]

    full = nx.Graph(edges)
    for u, v in full.edges:
        full.edges[u, v]["weight"] = rng.random()
    spanning = {tuple(sorted(e)) for e in nx.minimum_spanning_edges(full, data=False)}
    kept = [e for e in edges if tuple(sorted(e)) in spanning or rng.random() < keep]
    shuffled, _ = _relabel(n, kept, rng)
    return build_graph(n, shuffled)


def random_td_graph(
    n: int,
    d: int,
    rng: random.Random,
    star_rooted: bool = False,
    density: float = 0.5,
) -> tuple[Graph, EliminationTree]:
    """
    Connected graph with an underlying tree of depth at most d, and that tree.

    Vertex 0 is the root. Each later vertex picks a parent among earlier
    vertices above depth d; with star_rooted, vertex 1 is the root's only
    child. Every vertex is joined to its parent and to each further ancestor
    with probability `density`.
    """
    if n < 1 or d < 1:
        raise InputError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    if star_rooted and (n < 2 or d < 2):
        raise InputError("a star-rooted tree needs n >= 2 and d >= 2")
    if d == 1 and n > 1:
        raise InputError("depth 1 holds a single vertex")
    if star_rooted and d == 2 and n > 2:
        raise InputError("a star-rooted tree of depth 2 holds two vertices")
    parent: dict[int, Optional[int]] = {0: None}
    level = {0: 1}
    for v in range(1, n):
        if star_rooted and v == 1:
            choices = [0]
        else:
            choices = [u for u in range(v) if level[u] < d and not (star_rooted and u == 0)]
        p = rng.choice(choices)
        parent[v] = p
        level[v] = level[p] + 1

    edges: list[Edge] = []
    for v in range(1, n):
        p = parent[v]
        edges.append((p, v))
        a = parent[p]
        while a is not None:
            if rng.random() < density:
                edges.append((a, v))
            a = parent[a]
    return build_graph(n, edges), EliminationTree(parent)


def random_planar_graph(n: int, rng: random.Random, max_edges: Optional[int] = None) -> Graph:
    """
    Planar graph on n vertices: vertex pairs in random order are added while
    the graph stays planar, up to `max_edges` (random in [n-1, 3n-6] by default).
    """
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    if max_edges is None:
        max_edges = rng.randint(max(n - 1, 0), max(3 * n - 6, n - 1))
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    h = nx.Graph()
    h.add_nodes_from(range(n))
    for u, v in pairs:
        if h.number_of_edges() >= max_edges:
            break
        h.add_edge(u, v)
        planar, _ = nx.check_planarity(h)
        if not planar:
            h.remove_edge(u, v)
    return build_graph(n, h.edges)


def random_gnp(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p) with a seed drawn from rng."""
    h = nx.gnp_random_graph(n, p, seed=rng.randrange(2**32))
    return build_graph(n, h.edges)
