"""
Rooted forests whose ancestor relation contains a graph (tree-depth certificates).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Optional

from ..utils.error_handler import PreconditionError
from .core import Graph, VertexSet, bits, mask_of


@dataclass(frozen=True)
class EliminationTree:
    """
    Rooted forest on a vertex set, given by parent pointers (None at roots).

    A graph is certified when every edge inside `vertices` joins an
    ancestor/descendant pair. Depth counts vertices on the longest root path.
    """
    parent: Mapping[int, Optional[int]] = field(compare=True)

    @cached_property
    def vertices(self) -> VertexSet:
        return mask_of(self.parent)

    @cached_property
    def roots(self) -> tuple[int, ...]:
        return tuple(sorted(v for v, p in self.parent.items() if p is None))

    @property
    def root(self) -> int:
        if len(self.roots) != 1:
            raise PreconditionError(f"expected a single root, found {len(self.roots)}")
        return self.roots[0]

    @cached_property
    def _children(self) -> dict[int, tuple[int, ...]]:
        kids: dict[int, list[int]] = {v: [] for v in self.parent}
        for v, p in self.parent.items():
            if p is not None:
                kids[p].append(v)
        return {v: tuple(sorted(c)) for v, c in kids.items()}

    def children(self, v: int) -> tuple[int, ...]:
        return self._children[v]

    @cached_property
    def levels(self) -> dict[int, int]:
        out: dict[int, int] = {}
        stack = [(r, 1) for r in self.roots]
        while stack:
            v, level = stack.pop()
            out[v] = level
            stack.extend((c, level + 1) for c in self._children[v])
        return out

    @property
    def depth(self) -> int:
        return max(self.levels.values(), default=0)

    @property
    def is_star_rooted(self) -> bool:
        """Single root with exactly one child."""
        return len(self.roots) == 1 and len(self._children[self.roots[0]]) == 1

    def subtree(self, v: int) -> VertexSet:
        mask = 0
        stack = [v]
        while stack:
            u = stack.pop()
            mask |= 1 << u
            stack.extend(self._children[u])
        return mask

    def ancestors(self, v: int) -> VertexSet:
        mask = 0
        p = self.parent[v]
        while p is not None:
            mask |= 1 << p
            p = self.parent[p]
        return mask

    def problems(self, g: Graph) -> list[str]:
        """Reasons this tree does not certify g[vertices]; empty when it does."""
        out = []
        for v, p in self.parent.items():
            if not 0 <= v < g.n or (p is not None and p not in self.parent):
                out.append(f"vertex {v} or its parent is outside the graph")
        if out:
            return out
        if len(self.levels) != len(self.parent):
            return ["parent pointers contain a cycle"]
        for u, v in g.edges_within(self.vertices):
            if not (self.ancestors(u) >> v & 1 or self.ancestors(v) >> u & 1):
                out.append(f"edge ({u}, {v}) joins vertices in different root paths")
        return out

    def is_valid_for(self, g: Graph) -> bool:
        return not self.problems(g)

    def validate(self, g: Graph) -> None:
        issues = self.problems(g)
        if issues:
            raise PreconditionError("tree does not certify the graph", {"violations": issues[:5]})

    def restrict(self, v: int) -> "EliminationTree":
        """The subtree below v as a tree rooted at v."""
        mask = self.subtree(v)
        return EliminationTree({u: (None if u == v else self.parent[u]) for u in bits(mask)})

    def without_root(self) -> "EliminationTree":
        """Delete the root; its children become roots."""
        r = self.root
        return EliminationTree(
            {u: (None if p == r else p) for u, p in self.parent.items() if u != r}
        )

    def without_vertex(self, x: int) -> "EliminationTree":
        """Delete x; its children hang from x's parent."""
        px = self.parent[x]
        return EliminationTree(
            {u: (px if p == x else p) for u, p in self.parent.items() if u != x}
        )


def dfs_elimination_forest(g: Graph, within: Optional[VertexSet] = None) -> EliminationTree:
    """
    A depth-first search forest of g[within]; DFS trees have no cross edges, so
    the forest certifies g with depth equal to its height.
    """
    allowed = g.vertex_mask if within is None else within
    parent: dict[int, Optional[int]] = {}
    for start in bits(allowed):
        if start in parent:
            continue
        parent[start] = None
        stack = [(start, iter(bits(g.rows[start] & allowed)))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if w not in parent:
                    parent[w] = v
                    stack.append((w, iter(bits(g.rows[w] & allowed))))
                    break
            else:
                stack.pop()
    return EliminationTree(parent)
