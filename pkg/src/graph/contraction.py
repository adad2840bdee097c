"""
Matching contraction and its inverse bookkeeping.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..utils.error_handler import GraphMismatchError, PreconditionError
from .core import Edge, Graph, VertexSet, bits, graph_from_rows, normalize_edge


@dataclass(frozen=True)
class ContractionMap:
    """
    Records how a matching was contracted.

    class_of[v] is the contracted vertex holding old vertex v; classes are
    numbered in order of their least old vertex.
    """
    source_hash: str
    source_n: int
    class_of: tuple[int, ...]
    matching: tuple[Edge, ...]

    @property
    def target_n(self) -> int:
        return max(self.class_of, default=-1) + 1

    def members(self, new: int) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.class_of) if c == new)

    def merged_vertex(self, edge: Edge) -> int:
        """Contracted vertex of an edge of the matching."""
        return self.class_of[edge[0]]

    def expand(self, mask: VertexSet) -> VertexSet:
        """Old vertices whose class lies in `mask`."""
        out = 0
        for v, c in enumerate(self.class_of):
            if mask >> c & 1:
                out |= 1 << v
        return out

    def check_source(self, g: Graph) -> None:
        if g.graph_hash != self.source_hash:
            raise GraphMismatchError(
                "contraction map was built for another graph",
                {"expected": self.source_hash, "got": g.graph_hash},
            )


def check_matching(g: Graph, m: Iterable[Sequence[int]]) -> tuple[Edge, ...]:
    """
    Normalize and validate a matching of g.

    Raises:
        PreconditionError: a pair is not an edge, or two edges share a vertex
    """
    used = 0
    out = []
    for pair in m:
        u, v = normalize_edge(int(pair[0]), int(pair[1]))
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise PreconditionError(f"({u}, {v}) is not an edge of the graph", {"edge": (u, v)})
        if used >> u & 1 or used >> v & 1:
            raise PreconditionError(f"edge ({u}, {v}) shares a vertex with another matching edge")
        used |= (1 << u) | (1 << v)
        out.append((u, v))
    return tuple(sorted(out))


def contract_matching(g: Graph, m: Iterable[Sequence[int]]) -> tuple[Graph, ContractionMap]:
    """
    Contract every edge of the matching m.

    Parallel edges collapse and the contracted edges disappear.
    """
    matching = check_matching(g, m)
    partner = {}
    for u, v in matching:
        partner[u] = v
        partner[v] = u

    class_of = [-1] * g.n
    count = 0
    for v in range(g.n):
        if class_of[v] >= 0:
            continue
        class_of[v] = count
        if v in partner:
            class_of[partner[v]] = count
        count += 1

    rows = [0] * count
    for u, v in g.edges:
        cu, cv = class_of[u], class_of[v]
        if cu != cv:
            rows[cu] |= 1 << cv
            rows[cv] |= 1 << cu

    cmap = ContractionMap(
        source_hash=g.graph_hash,
        source_n=g.n,
        class_of=tuple(class_of),
        matching=matching,
    )
    return graph_from_rows(rows), cmap


def is_induced_matching(g: Graph, m: Sequence[Edge]) -> bool:
    """Pairwise disjoint edges with no edge of g joining two of them."""
    ends = [(1 << u) | (1 << v) for u, v in m]
    union = 0
    for mask in ends:
        if union & mask:
            return False
        union |= mask
    for i, mask in enumerate(ends):
        reach = 0
        for w in bits(mask):
            reach |= g.rows[w]
        if reach & (union & ~mask):
            return False
    return True
