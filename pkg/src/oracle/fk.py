"""
Exact k-strong induced arboricity f_k(G).

f_k is a minimum set cover of the k-valid edges by candidate forests. The
solver tries cover sizes from a lower bound upward (iterative deepening),
branching on the uncovered edge that the fewest candidates contain. The lower
bound is a largest-found set of pairwise conflicting edges (no candidate holds
two of them); the upper bound is the greedy cover.
"""
from __future__ import annotations

from typing import Optional

from ..graph.core import Edge, Graph, VertexSet, bits
from ..logger import get_logger
from ..utils.budget import SearchBudget, resolve_budget
from ..utils.error_handler import BudgetExhausted
from ..validity.witness import k_valid_edges
from .candidates import enumerate_candidate_forests
from .cover import ExactResult, ForestCover, require_valid_cover

logger = get_logger(__name__)


class CoverProblem:
    """Set-cover instance: universe = k-valid edges, sets = candidate forests."""

    def __init__(self, g: Graph, k: int, valid: list[Edge], candidates: list[VertexSet]):
        self.g = g
        self.k = k
        self.valid = valid
        self.forests = candidates
        index = {e: i for i, e in enumerate(valid)}
        self.universe = (1 << len(valid)) - 1
        self.covers: list[int] = []
        for forest in candidates:
            mask = 0
            for e in g.edges_within(forest):
                if e in index:
                    mask |= 1 << index[e]
            self.covers.append(mask)
        self.sets_with: list[list[int]] = [
            [j for j, c in enumerate(self.covers) if c >> i & 1] for i in range(len(valid))
        ]
        self.max_set = max((c.bit_count() for c in self.covers), default=0)

    def cover_of(self, chosen: list[int]) -> ForestCover:
        return ForestCover.from_masks(self.g, self.k, [self.forests[j] for j in chosen])

    def conflict_lower_bound(self) -> int:
        """Size of a greedily grown set of edges no two of which share a candidate."""
        conflict = []
        for i in range(len(self.valid)):
            together = 0
            for j in self.sets_with[i]:
                together |= self.covers[j]
            conflict.append(self.universe & ~together)
        best = 1 if self.valid else 0
        for start in range(len(self.valid)):
            size = 1
            pool = conflict[start]
            while pool:
                pick = max(bits(pool), key=lambda e: ((conflict[e] & pool).bit_count(), -e))
                size += 1
                pool &= conflict[pick]
            best = max(best, size)
        return best

    def greedy(self) -> list[int]:
        uncovered = self.universe
        chosen = []
        while uncovered:
            j = max(range(len(self.covers)), key=lambda j: ((self.covers[j] & uncovered).bit_count(), -j))
            chosen.append(j)
            uncovered &= ~self.covers[j]
        return chosen

    def search(self, size: int, budget: SearchBudget) -> Optional[list[int]]:
        """A cover with at most `size` sets, or None if none exists."""
        failed: dict[int, int] = {}
        chosen: list[int] = []

        def rec(uncovered: int, depth: int) -> bool:
            if uncovered == 0:
                return True
            if depth == 0 or failed.get(uncovered, -1) >= depth:
                return False
            if uncovered.bit_count() > depth * self.max_set:
                return False
            budget.tick()
            edge = min(bits(uncovered), key=lambda i: (len(self.sets_with[i]), i))
            options = sorted(
                self.sets_with[edge],
                key=lambda j: (-(self.covers[j] & uncovered).bit_count(), j),
            )
            for j in options:
                chosen.append(j)
                if rec(uncovered & ~self.covers[j], depth - 1):
                    return True
                chosen.pop()
            failed[uncovered] = depth
            return False

        return list(chosen) if rec(self.universe, size) else None


def _build_problem(g: Graph, k: int, budget: SearchBudget) -> Optional[CoverProblem]:
    valid = k_valid_edges(g, k)
    if not valid:
        return None
    return CoverProblem(g, k, valid, enumerate_candidate_forests(g, k, budget))


def exact_f_k(g: Graph, k: int, budget: Optional[SearchBudget] = None) -> ExactResult[ForestCover]:
    """
    Exact f_k(g) with an optimal cover.

    Returns 0 with an empty cover when no edge is k-valid. When the budget runs
    out the result has proof "unknown" and brackets the value; the greedy cover
    is attached as the upper-bound certificate when it is known.
    """
    budget = resolve_budget(budget, "exact_f_k")
    try:
        problem = _build_problem(g, k, budget)
    except BudgetExhausted:
        logger.warning(f"exact_f_k(k={k}) ran out of budget while enumerating candidates")
        return ExactResult(None, 1, None, None, "unknown")
    if problem is None:
        return ExactResult(0, 0, 0, ForestCover(k=k, graph_hash=g.graph_hash), "exhausted")

    lower = problem.conflict_lower_bound()
    greedy = problem.greedy()
    greedy_cover = require_valid_cover(g, problem.cover_of(greedy), "greedy set cover")
    logger.debug(f"f_{k}: {len(problem.forests)} candidates, bounds [{lower}, {len(greedy)}]")
    if lower == len(greedy):
        return ExactResult(lower, lower, lower, greedy_cover, "bound-met")

    size = lower
    try:
        for size in range(lower, len(greedy)):
            chosen = problem.search(size, budget)
            if chosen is not None:
                cover = require_valid_cover(g, problem.cover_of(chosen), "exact set cover")
                return ExactResult(len(chosen), len(chosen), len(chosen), cover, "exhausted")
    except BudgetExhausted:
        logger.warning(f"exact_f_k(k={k}) ran out of budget at size {size}")
        return ExactResult(None, size, len(greedy), greedy_cover, "unknown")
    return ExactResult(len(greedy), len(greedy), len(greedy), greedy_cover, "exhausted")


def bound_f_k(g: Graph, k: int, budget: Optional[SearchBudget] = None) -> ExactResult[ForestCover]:
    """Conflict lower bound and greedy upper bound without the exact search."""
    budget = resolve_budget(budget, "bound_f_k")
    problem = _build_problem(g, k, budget)
    if problem is None:
        return ExactResult(0, 0, 0, ForestCover(k=k, graph_hash=g.graph_hash), "exhausted")
    lower = problem.conflict_lower_bound()
    greedy = problem.greedy()
    cover = require_valid_cover(g, problem.cover_of(greedy), "greedy set cover")
    if lower == len(greedy):
        return ExactResult(lower, lower, lower, cover, "bound-met")
    return ExactResult(None, lower, len(greedy), cover, "unknown")
