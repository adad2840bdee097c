"""
Saturating a tree-width-2 graph to a 2-tree.

A connected graph has tree-width at most 2 iff repeatedly deleting a vertex of
degree at most 2 (joining the two neighbors of a degree-2 vertex) empties it.
Replaying the deletions backwards attaches every vertex to an edge of a growing
2-tree, which yields the completion H and its construction sequence.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from ..graph.core import Edge, Graph, graph_from_rows, is_connected, normalize_edge
from ..logger import get_logger
from ..utils.error_handler import PreconditionError

logger = get_logger(__name__)


@dataclass(frozen=True)
class TwoTreeCompletion:
    """
    2-tree H ⊇ G on the same vertices.

    H is the base triangle plus, in order, each `sequence` vertex joined to both
    ends of its attachment edge. Outer edges lie in exactly one triangle of H,
    inner edges in two or more.
    """
    source: Graph
    h: Graph
    base: tuple[int, int, int]
    sequence: tuple[tuple[int, Edge], ...]

    @cached_property
    def triangles(self) -> tuple[tuple[int, int, int], ...]:
        out = [self.base]
        for v, (a, b) in self.sequence:
            out.append(tuple(sorted((v, a, b))))
        return tuple(out)

    @cached_property
    def triangle_count(self) -> dict[Edge, int]:
        count: dict[Edge, int] = {e: 0 for e in self.h.edges}
        for a, b, c in self.triangles:
            for e in ((a, b), (a, c), (b, c)):
                count[e] += 1
        return count

    @property
    def outer(self) -> tuple[Edge, ...]:
        return tuple(e for e, c in self.triangle_count.items() if c == 1)

    @property
    def inner(self) -> tuple[Edge, ...]:
        return tuple(e for e, c in self.triangle_count.items() if c >= 2)


def degree_two_elimination(g: Graph) -> Optional[tuple[list[int], dict[int, tuple[int, ...]]]]:
    """
    Eliminate least-indexed vertices of degree ≤ 2, filling degree-2 neighborhoods.

    Returns the order and each vertex's neighbors at deletion time, or None if
    the process gets stuck (tree-width ≥ 3).
    """
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    alive = set(range(g.n))
    order: list[int] = []
    later: dict[int, tuple[int, ...]] = {}
    while alive:
        v = min((u for u in alive if len(adj[u]) <= 2), default=None)
        if v is None:
            return None
        nbrs = tuple(sorted(adj[v]))
        later[v] = nbrs
        if len(nbrs) == 2:
            a, b = nbrs
            adj[a].add(b)
            adj[b].add(a)
        for w in nbrs:
            adj[w].discard(v)
        alive.remove(v)
        order.append(v)
    return order, later


def complete_to_2tree(g: Graph) -> Optional[TwoTreeCompletion]:
    """
    A 2-tree completion of g, or None when tw(g) ≥ 3.

    Raises:
        PreconditionError: g is disconnected or has fewer than 3 vertices
    """
    if g.n < 3 or not is_connected(g):
        raise PreconditionError("2-tree completion needs a connected graph on at least 3 vertices")
    eliminated = degree_two_elimination(g)
    if eliminated is None:
        logger.debug(f"{g!r} has tree-width at least 3")
        return None
    order, later = eliminated

    rows = [0] * g.n

    def link(a: int, b: int) -> None:
        rows[a] |= 1 << b
        rows[b] |= 1 << a

    x, y, z = sorted(order[-3:])
    link(x, y)
    link(x, z)
    link(y, z)
    sequence = []
    for v in reversed(order[:-3]):
        nbrs = later[v]
        if len(nbrs) == 2:
            a, b = nbrs
        elif len(nbrs) == 1:
            a = nbrs[0]
            b = (rows[a] & -rows[a]).bit_length() - 1
        else:
            a, b = min(graph_from_rows(rows).edges)
        a, b = normalize_edge(a, b)
        link(v, a)
        link(v, b)
        sequence.append((v, (a, b)))

    h = graph_from_rows(rows)
    return TwoTreeCompletion(source=g, h=h, base=(x, y, z), sequence=tuple(sequence))


def has_treewidth_at_most_two(g: Graph) -> bool:
    """Every component with ≥ 3 vertices reduces to nothing by degree-≤2 deletions."""
    return degree_two_elimination(g) is not None


def find_contractible_edge(g: Graph, comp: TwoTreeCompletion) -> Optional[Edge]:
    """Least outer edge of the completion that is an edge of g in no triangle of g."""
    for u, w in sorted(comp.outer):
        if g.has_edge(u, w) and not g.rows[u] & g.rows[w]:
            return (u, w)
    return None
