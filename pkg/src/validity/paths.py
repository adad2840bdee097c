"""
Induced paths through a fixed vertex.
"""
from __future__ import annotations

from collections import deque
from typing import Iterator, Optional

from ..graph.core import Edge, Graph, VertexSet, bits


def iter_root_paths(
    g: Graph,
    root: int,
    within: Optional[VertexSet] = None,
    endpoint_only: bool = False,
) -> Iterator[tuple[VertexSet, int, int]]:
    """
    Induced paths of g[within] containing `root`, shortest first.

    Yields (vertex set, end a, end b). With endpoint_only, a == root always;
    otherwise the root may be an inner vertex. Each vertex set appears once.
    """
    allowed = g.vertex_mask if within is None else within
    start = 1 << root
    seen = {start}
    queue = deque([(start, root, root)])
    while queue:
        s, a, b = queue.popleft()
        yield s, a, b
        ends = [(b, False)]
        if not endpoint_only and s != start:
            ends.append((a, True))
        for end, at_a in ends:
            for w in bits(g.rows[end] & allowed & ~s):
                if g.rows[w] & s != 1 << end:
                    continue
                t = s | (1 << w)
                if t in seen:
                    continue
                seen.add(t)
                queue.append((t, w, b) if at_a else (t, a, w))


def find_root_path(
    g: Graph,
    root: int,
    edge: Edge,
    within: Optional[VertexSet] = None,
    endpoint_only: bool = False,
) -> Optional[VertexSet]:
    """Shortest induced path through `root` containing both ends of `edge`, or None."""
    need = (1 << edge[0]) | (1 << edge[1])
    for s, _, _ in iter_root_paths(g, root, within, endpoint_only):
        if s & need == need:
            return s
    return None


def root_path_edges(
    g: Graph,
    root: int,
    within: Optional[VertexSet] = None,
    endpoint_only: bool = False,
) -> set[Edge]:
    """Edges lying on some induced path of g[within] through `root`."""
    out: set[Edge] = set()
    for s, _, _ in iter_root_paths(g, root, within, endpoint_only):
        out.update(g.edges_within(s))
    return out
