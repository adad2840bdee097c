"""
Adjacent closed vertex-distinguishing labelings.

A labeling assigns each vertex a label in 1..ℓ; it distinguishes g when every
edge uv with N[u] ≠ N[v] has different label sums over N[u] and N[v]. dis[g]
is the least ℓ for which such a labeling exists.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Optional, Sequence

from ..graph.core import Graph, bits
from ..logger import get_logger
from ..utils.budget import SearchBudget, resolve_budget
from ..utils.error_handler import BudgetExhausted, PreconditionError
from .cover import ExactResult, ForestCover, verify_cover

logger = get_logger(__name__)


def _constrained_edges_by_last_vertex(g: Graph) -> list[list[tuple[int, int]]]:
    """Edges to check, grouped by the highest vertex of N[u] ∪ N[v]."""
    groups: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        if g.closed_row(u) == g.closed_row(v):
            continue
        last = (g.closed_row(u) | g.closed_row(v)).bit_length() - 1
        groups[last].append((u, v))
    return groups


def distinguishing_labeling(
    g: Graph, labels: int, budget: SearchBudget
) -> Optional[list[int]]:
    """A distinguishing labeling with labels 1..`labels`, or None."""
    groups = _constrained_edges_by_last_vertex(g)
    value = [0] * g.n

    def closed_sum(v: int) -> int:
        return sum(value[w] for w in bits(g.closed_row(v)))

    def rec(v: int) -> bool:
        if v == g.n:
            return True
        budget.tick()
        for label in range(1, labels + 1):
            value[v] = label
            if all(closed_sum(a) != closed_sum(b) for a, b in groups[v]) and rec(v + 1):
                return True
        value[v] = 0
        return False

    return list(value) if rec(0) else None


def exact_dis(
    g: Graph, label_cap: int = 20, budget: Optional[SearchBudget] = None
) -> ExactResult[tuple[int, ...]]:
    """
    dis[g] with a distinguishing labeling, trying ℓ = 1, 2, ... up to label_cap.

    When the cap (or budget) is reached first, the result is "unknown" with the
    proven lower bound.
    """
    budget = resolve_budget(budget, "exact_dis")
    if g.n == 0:
        return ExactResult(0, 0, 0, (), "exhausted")
    labels = 1
    try:
        while labels <= label_cap:
            found = distinguishing_labeling(g, labels, budget)
            if found is not None:
                return ExactResult(labels, labels, labels, tuple(found), "exhausted")
            labels += 1
    except BudgetExhausted:
        logger.warning(f"exact_dis ran out of budget at {labels} labels")
    return ExactResult(None, labels, None, None, "unknown")


@dataclass(frozen=True)
class DisBoundVerdict:
    holds: bool
    dis: Optional[int]
    bound: int


def check_dis_bound(
    g: Graph,
    cover: ForestCover,
    primes: Sequence[int],
    budget: Optional[SearchBudget] = None,
) -> DisBoundVerdict:
    """
    Check dis[g] ≤ p_1···p_m for a cover of all edges by m 2-strong forests and
    pairwise coprime p_i ≥ 4.

    Raises:
        PreconditionError: the cover is not a valid k=2 cover of every edge, or
            the numbers are not pairwise coprime integers ≥ 4 (one per forest)
    """
    if cover.k != 2:
        raise PreconditionError(f"a cover at k=2 is required, got k={cover.k}")
    missing = sorted(set(g.edges) - cover.edge_set(g))
    if missing:
        raise PreconditionError(
            "the forests must cover every edge of the graph", {"uncovered": missing[:5]}
        )
    verdict = verify_cover(g, cover)
    if not verdict.valid:
        raise PreconditionError("invalid 2-strong forest cover", {"violation": verdict.first_violation})
    if len(primes) != len(cover):
        raise PreconditionError(f"need one number per forest: {len(cover)} forests, {len(primes)} numbers")
    if any(p < 4 for p in primes):
        raise PreconditionError("every number must be at least 4")
    if any(gcd(a, b) != 1 for i, a in enumerate(primes) for b in primes[i + 1:]):
        raise PreconditionError("numbers must be pairwise coprime")

    bound = prod(primes)
    result = exact_dis(g, bound, budget)
    if result.is_exact:
        return DisBoundVerdict(result.value <= bound, result.value, bound)
    if result.lower > bound:
        return DisBoundVerdict(False, None, bound)
    raise BudgetExhausted("labeling search ran out of budget", lower=result.lower)
