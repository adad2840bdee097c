"""
Deterministic constructions of the extremal graph families.

Vertex numbering is fixed per family and documented on each generator, so the
edge-list output of `gen` is byte-stable across runs.
"""
from __future__ import annotations

from itertools import combinations
from math import comb

import networkx as nx

from ..graph.core import Edge, Graph, VertexSet, build_graph, mask_of
from ..utils.error_handler import InputError, PreconditionError


def _require(value: int, minimum: int, name: str) -> None:
    if value < minimum:
        raise InputError(f"{name} must be at least {minimum}, got {value}", {name: value})


# =========================================================================
# Wheel
# =========================================================================

def wheel(c: int) -> Graph:
    """Wheel on a c-cycle: center 0, rim 1..c in cyclic order."""
    _require(c, 3, "c")
    edges = [(0, i) for i in range(1, c + 1)]
    edges += [(i, i + 1) for i in range(1, c)]
    edges.append((1, c))
    return build_graph(c + 1, edges)


def wheel_cover(c: int) -> list[VertexSet]:
    """
    Reference cover of the wheel: two rim paths, then center stars.

    The rim paths miss vertex 1 and vertex 4; together they hold every rim
    edge with c-2 edges each, so they alone cover the wheel for 4 <= k <= c-2.
    The stars join the center to independent rim sets that together meet every
    rim vertex, each with at least three leaves: two stars for even c, three
    for odd c (the third is {c, 2, 4}).

    Raises:
        InputError: c < 6
    """
    _require(c, 6, "c")
    rim = mask_of(range(1, c + 1))
    forests = [rim & ~(1 << 1), rim & ~(1 << 4)]
    if c % 2 == 0:
        forests.append(1 | mask_of(range(1, c, 2)))
        forests.append(1 | mask_of(range(2, c + 1, 2)))
    else:
        forests.append(1 | mask_of(range(1, c - 1, 2)))
        forests.append(1 | mask_of(range(2, c, 2)))
        forests.append(1 | mask_of((c, 2, 4)))
    return forests


# =========================================================================
# Subdivisions of complete graphs
# =========================================================================

def subdivided_complete(t: int) -> Graph:
    """
    K_t with every edge subdivided once.

    Original vertices are 0..t-1; the vertex on the i-th pair of
    combinations(range(t), 2) is t+i.
    """
    _require(t, 2, "t")
    edges: list[Edge] = []
    for i, (a, b) in enumerate(combinations(range(t), 2)):
        s = t + i
        edges += [(a, s), (b, s)]
    return build_graph(t + comb(t, 2), edges)


def subdivided_complete_split(t: int) -> tuple[list[Edge], list[Edge]]:
    """
    The two star forests partitioning subdivided_complete(t): the first holds
    each subdivided pair's edge at its smaller original end, the second the
    edge at its larger end.
    """
    _require(t, 2, "t")
    low: list[Edge] = []
    high: list[Edge] = []
    for i, (a, b) in enumerate(combinations(range(t), 2)):
        low.append((a, t + i))
        high.append((b, t + i))
    return low, high


def _pendant_layout(t: int) -> tuple[list[tuple[int, int, int, int]], int]:
    """(a, p, q, b) per pair of K_t and the index of the first pendant vertex."""
    pairs = [(a, t + 2 * i, t + 2 * i + 1, b) for i, (a, b) in enumerate(combinations(range(t), 2))]
    return pairs, t + 2 * len(pairs)


def pendant_double_subdivided_complete(t: int, k: int) -> Graph:
    """
    K_t with every edge subdivided twice and k-1 pendant vertices on the
    subdivision vertex next to the smaller original end.

    For the i-th pair (a, b), a < b, of combinations(range(t), 2) the path is
    a - p - q - b with p = t+2i, q = t+2i+1; its pendants are numbered
    t + 2*C(t,2) + i*(k-1) + j for j in 0..k-2.
    """
    _require(t, 3, "t")
    _require(k, 1, "k")
    pairs, first_pendant = _pendant_layout(t)
    edges: list[Edge] = []
    for i, (a, p, q, b) in enumerate(pairs):
        edges += [(a, p), (p, q), (q, b)]
        base = first_pendant + i * (k - 1)
        edges += [(p, base + j) for j in range(k - 1)]
    return build_graph(first_pendant + len(pairs) * (k - 1), edges)


def balanced_orientation(t: int) -> list[Edge]:
    """
    Orientation of K_t, as (tail, head) pairs, in which every vertex has in-
    and out-degree at least (t-2)//2.

    Odd t follows an Eulerian circuit. For even t, K_{t-1} on 0..t-2 is
    oriented that way and the edges at x = t-1 alternate: x -> i for even i,
    i -> x for odd i.
    """
    _require(t, 3, "t")
    odd = t if t % 2 else t - 1
    arcs: list[Edge] = list(nx.eulerian_circuit(nx.complete_graph(odd), source=0))
    if t % 2 == 0:
        x = t - 1
        arcs += [(x, i) if i % 2 == 0 else (i, x) for i in range(x)]
    return arcs


def pendant_double_subdivided_cover(t: int, k: int) -> list[VertexSet]:
    """
    Three k-strong forests covering pendant_double_subdivided_complete(t, k).

    The first holds every middle edge with its pendants (a star with k edges
    per pair). With K_t oriented so every in- and out-degree is at least k,
    the second takes for each arc the end edge at its tail and the third the
    end edge at its head; both are unions of stars centered at original
    vertices.

    Raises:
        PreconditionError: t < 2k + 2
    """
    _require(k, 1, "k")
    if t < 2 * k + 2:
        raise PreconditionError(
            f"the three-forest cover needs t >= 2k+2, got t={t}, k={k}", {"t": t, "k": k}
        )
    pairs, first_pendant = _pendant_layout(t)
    at = {(a, b): (p, q) for a, p, q, b in pairs}
    originals = mask_of(range(t))
    middle = mask_of(range(t, first_pendant + len(pairs) * (k - 1)))
    tails = heads = originals
    for u, v in balanced_orientation(t):
        a, b = min(u, v), max(u, v)
        p, q = at[(a, b)]
        near_u, near_v = (p, q) if u == a else (q, p)
        tails |= 1 << near_u
        heads |= 1 << near_v
    return [middle, tails, heads]


# =========================================================================
# Small extremal constructions
# =========================================================================

def clique_plus_tail(n: int, k: int) -> Graph:
    """Clique on 0..n with a path of k-1 edges from 0 through n+1, ..., n+k-1."""
    _require(n, 1, "n")
    _require(k, 1, "k")
    edges = list(combinations(range(n + 1), 2))
    path = [0] + list(range(n + 1, n + k))
    edges += list(zip(path, path[1:]))
    return build_graph(n + k, edges)


def saw_graph(k: int) -> Graph:
    """
    Path u_1..u_2k (vertices 0..2k-1) with w_i (vertex 2k+i-1) adjacent to
    u_i and u_{i+1} for i = 1..2k-1.
    """
    _require(k, 2, "k")
    path = [(i, i + 1) for i in range(2 * k - 1)]
    teeth = []
    for i in range(2 * k - 1):
        w = 2 * k + i
        teeth += [(i, w), (i + 1, w)]
    return build_graph(4 * k - 1, path + teeth)


def subdivided_biclique(n: int) -> tuple[Graph, VertexSet, VertexSet]:
    """
    K_{n,n} with every edge subdivided once, and two induced trees covering it.

    Sides are A = 0..n-1 and B = n..2n-1; the vertex on A_i B_j is 2n + i*n + j.
    T1 deletes A_1..A_{n-1}, T2 deletes B_1..B_{n-1}. Each tree keeps 1 + n + n²
    vertices and so n² + n edges: the pair is a k-strong cover exactly for
    k ≤ n² + n. At k = n² + n + 1 no edge is k-valid and both trees fall short.
    """
    _require(n, 1, "n")
    edges: list[Edge] = []
    for i in range(n):
        for j in range(n):
            s = 2 * n + i * n + j
            edges += [(i, s), (n + j, s)]
    g = build_graph(2 * n + n * n, edges)
    t1 = g.vertex_mask & ~mask_of(range(1, n))
    t2 = g.vertex_mask & ~mask_of(range(n + 1, 2 * n))
    return g, t1, t2


def triangle_with_pendants() -> Graph:
    """Triangle 0, 1, 2 with pendants 3-0, 4-1, 5-2."""
    return build_graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])


def td3_extremal(k: int) -> Graph:
    """
    Tree-depth 3 graph whose k-valid edges need exactly k-1 k-strong forests.

    Vertex 0 (hub) and vertex 1 (far end) are both joined to y_i = 2..k;
    leaves k+1..k+m hang from the hub, m = max(1, k-2). Every edge y_i-1 is
    k-valid, and any forest holding two of them either closes a cycle through
    the hub or leaves a component with fewer than k edges.
    """
    _require(k, 2, "k")
    leaves = max(1, k - 2)
    edges: list[Edge] = []
    for y in range(2, k + 1):
        edges += [(0, y), (1, y)]
    edges += [(0, k + j) for j in range(1, leaves + 1)]
    return build_graph(k + 1 + leaves, edges)


def td3_extremal_cover(k: int) -> list[VertexSet]:
    """One forest per y_i: the path 1 - y_i - 0 with all hub leaves."""
    _require(k, 2, "k")
    leaves = mask_of(range(k + 1, k + 1 + max(1, k - 2)))
    return [0b11 | (1 << y) | leaves for y in range(2, k + 1)]
