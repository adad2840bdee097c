"""
Vertex colorings with a declared contract.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Literal, Optional, Sequence

from .core import Graph, VertexSet, components, is_induced_forest

ColoringContract = Literal["proper", "acyclic", "good", "p-tree-depth", "t-tree"]


@dataclass(frozen=True)
class Coloring:
    """
    colors[v] is the color of v. Colors are 0-based except for good colorings,
    which use 1..3.
    """
    graph_hash: str
    colors: tuple[int, ...]
    contract: ColoringContract
    p: Optional[int] = None

    @property
    def palette(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.colors)))

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def class_mask(self, *colors: int) -> VertexSet:
        wanted = set(colors)
        mask = 0
        for v, c in enumerate(self.colors):
            if c in wanted:
                mask |= 1 << v
        return mask


def color_class_masks(colors: Sequence[int]) -> dict[int, VertexSet]:
    out: dict[int, VertexSet] = {}
    for v, c in enumerate(colors):
        out[c] = out.get(c, 0) | (1 << v)
    return out


def is_proper(g: Graph, colors: Sequence[int]) -> bool:
    return all(colors[u] != colors[v] for u, v in g.edges)


def is_acyclic_coloring(g: Graph, colors: Sequence[int]) -> bool:
    """Proper, and every two color classes induce a forest."""
    if not is_proper(g, colors):
        return False
    classes = color_class_masks(colors)
    return all(
        is_induced_forest(g, classes[a] | classes[b]).is_forest
        for a, b in combinations(sorted(classes), 2)
    )


def two_coloring_of_forest(g: Graph, forest: VertexSet) -> dict[int, int]:
    """Proper 2-coloring (sides 0/1) of the forest g[forest] by BFS from least vertices."""
    side: dict[int, int] = {}
    for comp in components(g, forest):
        root = (comp & -comp).bit_length() - 1
        side[root] = 0
        queue = [root]
        while queue:
            u = queue.pop()
            row = g.rows[u] & forest
            while row:
                low = row & -row
                w = low.bit_length() - 1
                row ^= low
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
    return side
