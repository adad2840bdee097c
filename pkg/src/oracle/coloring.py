"""
Exact chromatic and acyclic chromatic numbers by backtracking.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from ..graph.coloring import Coloring, is_acyclic_coloring, two_coloring_of_forest
from ..graph.core import Graph, component_of, least
from ..logger import get_logger
from ..utils.budget import SearchBudget, resolve_budget
from ..utils.error_handler import BudgetExhausted, PreconditionError, VerificationError
from .cover import ExactResult, ForestCover, verify_cover
from .fk import exact_f_k

logger = get_logger(__name__)


def search_order(g: Graph) -> list[int]:
    """Vertices by decreasing degree; each later vertex prefers one adjacent to earlier ones."""
    remaining = set(range(g.n))
    order: list[int] = []
    placed = 0
    while remaining:
        v = max(remaining, key=lambda u: ((g.rows[u] & placed).bit_count(), g.degree(u), -u))
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def _closes_bicolored_cycle(g: Graph, v: int, classes: list[int], c: int) -> bool:
    for c2, other in enumerate(classes):
        if c2 == c:
            continue
        nbrs = g.rows[v] & other
        if nbrs.bit_count() < 2:
            continue
        union = classes[c] | other
        while nbrs:
            comp = component_of(g, least(nbrs), union)
            if (comp & g.rows[v]).bit_count() >= 2:
                return True
            nbrs &= ~comp
    return False


def color_with(
    g: Graph, q: int, acyclic: bool, budget: SearchBudget
) -> Optional[list[int]]:
    """A proper (optionally acyclic) coloring with colors 0..q-1, or None."""
    order = search_order(g)
    colors = [-1] * g.n
    classes = [0] * q

    def rec(i: int, used: int) -> bool:
        if i == len(order):
            return True
        budget.tick()
        v = order[i]
        for c in range(min(used + 1, q)):
            if g.rows[v] & classes[c]:
                continue
            if acyclic and _closes_bicolored_cycle(g, v, classes, c):
                continue
            colors[v] = c
            classes[c] |= 1 << v
            if rec(i + 1, max(used, c + 1)):
                return True
            classes[c] &= ~(1 << v)
            colors[v] = -1
        return False

    return colors if rec(0, 0) else None


def _exact_coloring(
    g: Graph, acyclic: bool, budget: Optional[SearchBudget], name: str
) -> ExactResult[Coloring]:
    budget = resolve_budget(budget, name)
    contract = "acyclic" if acyclic else "proper"
    if g.n == 0:
        return ExactResult(0, 0, 0, Coloring(g.graph_hash, (), contract), "exhausted")
    q = 1 if g.m == 0 else 2
    try:
        while True:
            colors = color_with(g, q, acyclic, budget)
            if colors is not None:
                return ExactResult(q, q, q, Coloring(g.graph_hash, tuple(colors), contract), "exhausted")
            q += 1
    except BudgetExhausted:
        logger.warning(f"{name} ran out of budget at {q} colors")
        trivial = Coloring(g.graph_hash, tuple(range(g.n)), contract)
        return ExactResult(None, q, g.n, trivial, "unknown")


def exact_chromatic(g: Graph, budget: Optional[SearchBudget] = None) -> ExactResult[Coloring]:
    return _exact_coloring(g, False, budget, "exact_chromatic")


def exact_acyclic_chromatic(g: Graph, budget: Optional[SearchBudget] = None) -> ExactResult[Coloring]:
    """
    Minimum number of colors of a proper coloring in which every two classes
    induce a forest, with an optimal coloring.
    """
    return _exact_coloring(g, True, budget, "exact_acyclic_chromatic")


def acyclic_coloring_from_cover(g: Graph, cover: ForestCover) -> Coloring:
    """
    Acyclic coloring with at most 3^|cover| colors from a cover of all edges
    by induced forests.

    A vertex's color records, per forest, whether it is absent or on which side
    of a proper 2-coloring of that forest it lies.

    Raises:
        PreconditionError: the cover is invalid at k=1 or misses an edge
    """
    verdict = verify_cover(g, cover)
    if not verdict.valid:
        raise PreconditionError(
            "an edge-covering induced forest cover is required",
            {"violation": verdict.first_violation},
        )
    missing = set(g.edges) - cover.edge_set(g)
    if missing:
        raise PreconditionError(
            "the forests must cover every edge", {"uncovered": sorted(missing)[:5]}
        )
    sides = [two_coloring_of_forest(g, mask) for mask in cover.masks()]
    vectors = [tuple(0 if v not in side else 1 + side[v] for side in sides) for v in range(g.n)]
    palette = {vec: i for i, vec in enumerate(sorted(set(vectors)))}
    colors = tuple(palette[vec] for vec in vectors)
    if not is_acyclic_coloring(g, colors):
        raise VerificationError("vector coloring from the forest cover is not acyclic")
    return Coloring(g.graph_hash, colors, "acyclic")


@dataclass(frozen=True)
class SandwichVerdict:
    """χ_acyc and f_1 of one graph and whether 3^f_1 ≥ χ_acyc and f_1 ≤ C(χ_acyc, 2)."""
    acyclic_chromatic: int
    f1: int
    holds: bool


def check_acyclic_sandwich(g: Graph, budget: Optional[SearchBudget] = None) -> SandwichVerdict:
    chi = exact_acyclic_chromatic(g, budget)
    f1 = exact_f_k(g, 1, budget)
    if not (chi.is_exact and f1.is_exact):
        raise BudgetExhausted("acyclic sandwich check needs both exact values")
    holds = 3 ** f1.value >= chi.value and f1.value <= comb(chi.value, 2)
    return SandwichVerdict(chi.value, f1.value, holds)
