"""
Decomposing an edge set into matchings (proper edge coloring).
"""
from __future__ import annotations

from typing import Optional, Sequence

from ..graph.core import Edge
from ..logger import get_logger
from ..utils.budget import SearchBudget, resolve_budget
from ..utils.error_handler import VerificationError

logger = get_logger(__name__)


def _max_degree(edges: Sequence[Edge]) -> int:
    degree: dict[int, int] = {}
    for u, v in edges:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    return max(degree.values(), default=0)


def greedy_edge_coloring(edges: Sequence[Edge]) -> list[int]:
    """Each edge in order takes the least color free at both ends."""
    used: dict[int, set[int]] = {}
    colors = []
    for u, v in edges:
        taken = used.setdefault(u, set()) | used.setdefault(v, set())
        c = next(c for c in range(len(edges) + 1) if c not in taken)
        used[u].add(c)
        used[v].add(c)
        colors.append(c)
    return colors


def edge_coloring_with(edges: Sequence[Edge], q: int, budget: SearchBudget) -> Optional[list[int]]:
    """A proper edge coloring with colors 0..q-1 by backtracking, or None."""
    colors = [-1] * len(edges)
    used: dict[int, int] = {}

    def rec(i: int, top: int) -> bool:
        if i == len(edges):
            return True
        budget.tick()
        u, v = edges[i]
        busy = used.get(u, 0) | used.get(v, 0)
        for c in range(min(top + 1, q)):
            if busy >> c & 1:
                continue
            colors[i] = c
            used[u] = used.get(u, 0) | (1 << c)
            used[v] = used.get(v, 0) | (1 << c)
            if rec(i + 1, max(top, c + 1)):
                return True
            used[u] &= ~(1 << c)
            used[v] &= ~(1 << c)
        return False

    return colors if rec(0, 0) else None


def decompose_into_matchings(
    edges: Sequence[Edge], budget: Optional[SearchBudget] = None
) -> list[tuple[Edge, ...]]:
    """
    Split edges into at most Δ + 1 matchings.

    Greedy first; when it needs more than Δ + 1 colors, a backtracking search
    with exactly Δ + 1 colors (which always succeeds).
    """
    edges = sorted(edges)
    if not edges:
        return []
    delta = _max_degree(edges)
    colors = greedy_edge_coloring(edges)
    if max(colors) + 1 > delta + 1:
        logger.debug(f"greedy edge coloring used {max(colors) + 1} > Δ+1 = {delta + 1} colors")
        colors = edge_coloring_with(edges, delta + 1, resolve_budget(budget, "edge_coloring"))
        if colors is None:
            raise VerificationError(f"no edge coloring with Δ+1 = {delta + 1} colors")
    groups: dict[int, list[Edge]] = {}
    for e, c in zip(edges, colors):
        groups.setdefault(c, []).append(e)
    return [tuple(groups[c]) for c in sorted(groups)]
