"""
Block (biconnected component) decomposition via networkx.
"""
from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .core import Graph, VertexSet, bits, mask_of, members


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks ordered by their sorted member lists, and the cut vertices."""
    blocks: tuple[VertexSet, ...]
    cut_vertices: tuple[int, ...]

    def leaf_blocks(self) -> list[VertexSet]:
        """Blocks containing exactly one cut vertex."""
        cuts = mask_of(self.cut_vertices)
        return [b for b in self.blocks if (b & cuts).bit_count() == 1]

    def cut_vertex_of(self, block: VertexSet) -> int:
        cuts = mask_of(self.cut_vertices)
        return next(bits(block & cuts))


def blocks(g: Graph) -> BlockDecomposition:
    """
    Biconnected components and articulation points.

    Bridges are 2-vertex blocks and isolated vertices are 1-vertex blocks.
    """
    h = g.to_networkx()
    found = [mask_of(comp) for comp in nx.biconnected_components(h)]
    covered = 0
    for b in found:
        covered |= b
    for v in range(g.n):
        if not covered >> v & 1:
            found.append(1 << v)
    found.sort(key=members)
    cuts = tuple(sorted(nx.articulation_points(h)))
    return BlockDecomposition(tuple(found), cuts)


def is_biconnected(g: Graph) -> bool:
    """Connected, at least 3 vertices and no cut vertex."""
    if g.n < 3:
        return False
    return nx.is_biconnected(g.to_networkx())
