"""
k-valid edges and k-strong forests.

An edge is k-valid when some induced tree with exactly k edges (a witness
tree) contains it. Witness trees are found by growing induced trees from the
edge one vertex at a time; a vertex may join only if it has exactly one
neighbor in the current set, which keeps the set an induced tree. Every
induced tree through the edge is reachable this way, and each vertex set is
expanded once.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from ..graph.core import Edge, Graph, VertexSet, bits, is_induced_forest, members, normalize_edge
from ..logger import get_logger
from ..utils.error_handler import InputError, PreconditionError

logger = get_logger(__name__)


@dataclass(frozen=True)
class WitnessTree:
    """Induced tree with exactly k edges certifying that `edge` is k-valid."""
    vertices: VertexSet
    edges: tuple[Edge, ...]
    edge: Edge

    @property
    def k(self) -> int:
        return len(self.edges)


def _check_k(k: int) -> None:
    if k < 1:
        raise InputError(f"k must be a positive integer, got {k}")


def _check_edge(g: Graph, e: Edge, within: VertexSet) -> Edge:
    u, v = normalize_edge(*e)
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise PreconditionError(f"({u}, {v}) is not an edge of the graph", {"edge": (u, v)})
    if not (within >> u & 1 and within >> v & 1):
        raise PreconditionError(f"edge ({u}, {v}) is not inside the given vertex set")
    return u, v


def tree_extensions(g: Graph, s: VertexSet, allowed: VertexSet) -> list[int]:
    """Vertices of `allowed` outside s with exactly one neighbor in s."""
    reach = 0
    for u in bits(s):
        reach |= g.rows[u]
    return [w for w in bits(reach & allowed & ~s) if (g.rows[w] & s).bit_count() == 1]


def iter_witness_sets(
    g: Graph, e: Edge, k: int, within: Optional[VertexSet] = None
) -> Iterator[VertexSet]:
    """
    Every vertex set of size k+1 inducing a tree that contains e, each once.

    Depth-first, smallest extension vertex first, so the order is deterministic.
    """
    _check_k(k)
    allowed = g.vertex_mask if within is None else within
    u, v = _check_edge(g, e, allowed)
    target = k + 1
    if target > allowed.bit_count():
        return
    start = (1 << u) | (1 << v)
    seen = {start}
    stack = [start]
    while stack:
        s = stack.pop()
        if s.bit_count() == target:
            yield s
            continue
        for w in reversed(tree_extensions(g, s, allowed)):
            t = s | (1 << w)
            if t not in seen:
                seen.add(t)
                stack.append(t)


def find_witness_tree(
    g: Graph,
    e: Edge,
    k: int,
    within: Optional[VertexSet] = None,
    least: bool = False,
) -> Optional[WitnessTree]:
    """
    A witness tree for e at strength k inside g[within], or None.

    Args:
        g: Graph
        e: An edge of g[within]
        k: Number of tree edges
        within: Restrict the search to this vertex set (default: all of g)
        least: Return the witness whose sorted vertex list is lexicographically least
            instead of the first one found

    Raises:
        PreconditionError: e is not an edge of g[within]
    """
    found = None
    for s in iter_witness_sets(g, e, k, within):
        if not least:
            found = s
            break
        if found is None or members(s) < members(found):
            found = s
    if found is None:
        return None
    return WitnessTree(found, tuple(g.edges_within(found)), normalize_edge(*e))


@lru_cache(maxsize=65536)
def _valid_edges(g: Graph, k: int, within: VertexSet) -> tuple[Edge, ...]:
    valid: set[Edge] = set()
    for e in g.edges_within(within):
        if e in valid:
            continue
        for s in iter_witness_sets(g, e, k, within):
            # every edge of a witness tree is k-valid
            valid.update(g.edges_within(s))
            break
    return tuple(sorted(valid))


def k_valid_edges(g: Graph, k: int, within: Optional[VertexSet] = None) -> list[Edge]:
    """
    Edges of g[within] lying in an induced tree of g[within] with exactly k edges.

    Returns an empty list for k >= |within|; results are cached per (g, k, within).
    """
    _check_k(k)
    allowed = g.vertex_mask if within is None else within
    if k + 1 > allowed.bit_count():
        return []
    return list(_valid_edges(g, k, allowed))


def is_k_valid(g: Graph, e: Edge, k: int, within: Optional[VertexSet] = None) -> bool:
    allowed = g.vertex_mask if within is None else within
    return normalize_edge(*_check_edge(g, e, allowed)) in set(k_valid_edges(g, k, allowed))


def is_k_strong_forest(g: Graph, s: VertexSet, k: int) -> bool:
    """g[s] is a forest and every component has at least k edges."""
    _check_k(k)
    check = is_induced_forest(g, s)
    return check.is_forest and all(info.edge_count >= k for info in check.components)


def strip_small_components(g: Graph, s: VertexSet, k: int) -> VertexSet:
    """Drop components of g[s] with fewer than k edges."""
    check = is_induced_forest(g, s)
    out = 0
    for info in check.components:
        if info.edge_count >= k:
            out |= info.vertices
    return out
