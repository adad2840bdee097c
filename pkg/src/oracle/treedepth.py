"""
Exact tree-depth with an elimination-tree certificate.

td of a connected vertex set = 1 + min over roots r of the largest td among
the components left after deleting r; td of a disconnected set is the max over
its components. Values are memoized per vertex-set bitset.
"""
from __future__ import annotations

from typing import Optional

from ..graph.core import Graph, VertexSet, bits, components
from ..graph.elimination import EliminationTree, dfs_elimination_forest
from ..logger import get_logger
from ..utils.budget import SearchBudget, resolve_budget
from ..utils.error_handler import BudgetExhausted, VerificationError
from .cover import ExactResult

logger = get_logger(__name__)


class TreeDepthSolver:
    """Memoized tree-depth search over vertex subsets of one graph."""

    def __init__(self, g: Graph, budget: Optional[SearchBudget] = None):
        self.g = g
        self.budget = resolve_budget(budget, "tree_depth")
        self.memo: dict[VertexSet, tuple[int, int]] = {}

    def connected_depth(self, mask: VertexSet) -> int:
        """td of the connected graph g[mask]."""
        hit = self.memo.get(mask)
        if hit is not None:
            return hit[0]
        size = mask.bit_count()
        if size == 1:
            self.memo[mask] = (1, (mask & -mask).bit_length() - 1)
            return 1
        self.budget.tick()
        rows = self.g.rows
        if all((rows[v] & mask) | (1 << v) == mask for v in bits(mask)):
            v = (mask & -mask).bit_length() - 1
            self.memo[mask] = (size, v)
            return size
        roots = sorted(bits(mask), key=lambda v: (-(rows[v] & mask).bit_count(), v))
        best, best_root = size + 1, roots[0]
        for r in roots:
            depth = self._depth_below(mask & ~(1 << r), best - 1)
            if depth is not None and 1 + depth < best:
                best, best_root = 1 + depth, r
                if best == 2:
                    break
        self.memo[mask] = (best, best_root)
        return best

    def _depth_below(self, rest: VertexSet, limit: int) -> Optional[int]:
        """max td over components of g[rest], or None once it reaches `limit`."""
        worst = 0
        for comp in sorted(components(self.g, rest), key=lambda c: -c.bit_count()):
            worst = max(worst, self.connected_depth(comp))
            if worst >= limit:
                return None
        return worst

    def forest_depth(self, mask: VertexSet) -> int:
        return max((self.connected_depth(c) for c in components(self.g, mask)), default=0)

    def single_tree_depth(self, mask: VertexSet) -> tuple[int, int]:
        """Least depth of one rooted tree certifying g[mask] (mask may be disconnected)."""
        comps = components(self.g, mask)
        if len(comps) == 1:
            return self.connected_depth(mask), self.memo[mask][1]
        best, best_root = mask.bit_count() + 1, -1
        for r in bits(mask):
            rest = mask & ~(1 << r)
            depth = 1 + max((self.connected_depth(c) for c in components(self.g, rest)), default=0)
            if depth < best:
                best, best_root = depth, r
        return best, best_root

    def build_forest(self, mask: VertexSet) -> EliminationTree:
        parent: dict[int, Optional[int]] = {}
        for comp in components(self.g, mask):
            self._attach(comp, None, parent)
        return EliminationTree(parent)

    def build_single_tree(self, mask: VertexSet) -> EliminationTree:
        _, root = self.single_tree_depth(mask)
        parent: dict[int, Optional[int]] = {root: None}
        for comp in components(self.g, mask & ~(1 << root)):
            self._attach(comp, root, parent)
        return EliminationTree(parent)

    def _attach(self, comp: VertexSet, above: Optional[int], parent: dict) -> None:
        stack = [(comp, above)]
        while stack:
            mask, up = stack.pop()
            self.connected_depth(mask)
            root = self.memo[mask][1]
            parent[root] = up
            for sub in components(self.g, mask & ~(1 << root)):
                stack.append((sub, root))


def exact_tree_depth(g: Graph, budget: Optional[SearchBudget] = None) -> ExactResult[EliminationTree]:
    """
    Exact tree-depth with an optimal elimination forest.

    On budget exhaustion the DFS forest height is reported as the upper bound.
    """
    if g.n == 0:
        return ExactResult(0, 0, 0, EliminationTree({}), "exhausted")
    solver = TreeDepthSolver(g, budget)
    try:
        depth = solver.forest_depth(g.vertex_mask)
        tree = solver.build_forest(g.vertex_mask)
    except BudgetExhausted:
        fallback = dfs_elimination_forest(g)
        lower = 2 if g.m else 1
        logger.warning(f"exact_tree_depth ran out of budget; bounds [{lower}, {fallback.depth}]")
        return ExactResult(None, lower, fallback.depth, fallback, "unknown")
    if tree.depth != depth:
        raise VerificationError("elimination forest depth disagrees with the computed tree-depth")
    return ExactResult(depth, depth, depth, tree, "exhausted")
