"""
Exact tree-width via elimination orders, and t-tree colorings.

Eliminating v makes its remaining neighbors a clique; the width of an order is
the largest number of remaining neighbors met, and tw(G) is the least width
over all orders. The decision search walks eliminated-vertex sets S: v can go
next when the set Q(S, v) of outside vertices reachable from v through S has at
most t members. Failed sets are memoized.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from ..graph.core import Graph, VertexSet, bits, component_of, graph_from_rows
from ..logger import get_logger
from ..oracle.cover import ExactResult
from ..utils.budget import SearchBudget, resolve_budget
from ..utils.error_handler import BudgetExhausted, InputError

logger = get_logger(__name__)


# =========================================================================
# Orders and bounds
# =========================================================================

def fill_in(g: Graph, order: Sequence[int]) -> tuple[Graph, int]:
    """
    Chordal supergraph produced by eliminating in `order`, and the order's width.

    Raises:
        InputError: order is not a permutation of the vertices
    """
    if sorted(order) != list(range(g.n)):
        raise InputError("elimination order must list every vertex once", {"n": g.n})
    rows = list(g.rows)
    eliminated = 0
    width = 0
    for v in order:
        later = rows[v] & ~eliminated
        width = max(width, later.bit_count())
        for w in bits(later):
            rows[w] |= later & ~(1 << w)
        eliminated |= 1 << v
    return graph_from_rows(rows), width


def min_fill_order(g: Graph) -> tuple[int, list[int]]:
    """Min-fill heuristic: an upper bound on tw(g) and the order achieving it."""
    rows = list(g.rows)
    alive = g.vertex_mask
    order: list[int] = []
    width = 0

    def fill(v: int) -> int:
        nbrs = rows[v] & alive
        missing = 0
        for w in bits(nbrs):
            missing += (nbrs & ~rows[w] & ~(1 << w)).bit_count()
        return missing // 2

    while alive:
        v = min(bits(alive), key=lambda u: (fill(u), u))
        nbrs = rows[v] & alive
        width = max(width, nbrs.bit_count())
        for w in bits(nbrs):
            rows[w] |= nbrs & ~(1 << w)
        alive &= ~(1 << v)
        order.append(v)
    return width, order


def minor_min_width(g: Graph) -> int:
    """
    Lower bound on tw(g): contract a minimum-degree vertex into the neighbor
    sharing the fewest neighbors with it, recording the largest minimum degree.
    """
    rows = list(g.rows)
    alive = g.vertex_mask
    bound = 0
    while alive:
        u = min(bits(alive), key=lambda x: ((rows[x] & alive).bit_count(), x))
        nbrs = rows[u] & alive
        bound = max(bound, nbrs.bit_count())
        if nbrs:
            v = min(bits(nbrs), key=lambda x: ((rows[x] & nbrs).bit_count(), x))
            merged = (rows[u] | rows[v]) & ~(1 << u) & ~(1 << v)
            rows[v] = merged
            for w in bits(merged & alive):
                rows[w] = (rows[w] & ~(1 << u)) | (1 << v)
        alive &= ~(1 << u)
    return bound


# =========================================================================
# Exact search
# =========================================================================

def _outside_reach(g: Graph, eliminated: VertexSet, v: int) -> VertexSet:
    """Vertices outside eliminated ∪ {v} reachable from v through eliminated."""
    reach = component_of(g, v, eliminated | (1 << v))
    out = 0
    for w in bits(reach):
        out |= g.rows[w]
    return out & ~eliminated & ~(1 << v)


def treewidth_at_most(g: Graph, t: int, budget: Optional[SearchBudget] = None) -> Optional[list[int]]:
    """
    An elimination order of width ≤ t, or None when tw(g) > t.

    Raises:
        BudgetExhausted: the budget ran out before the question was settled
    """
    if t < 0:
        return None
    budget = resolve_budget(budget, "treewidth")
    full = g.vertex_mask
    failed: set[VertexSet] = set()
    order: list[int] = []

    def rec(eliminated: VertexSet) -> bool:
        rest = full & ~eliminated
        if rest.bit_count() <= t + 1:
            order.extend(bits(rest))
            return True
        if eliminated in failed:
            return False
        budget.tick()
        for v in bits(rest):
            if _outside_reach(g, eliminated, v).bit_count() <= t:
                order.append(v)
                if rec(eliminated | (1 << v)):
                    return True
                order.pop()
        failed.add(eliminated)
        return False

    return order if rec(0) else None


def exact_treewidth(g: Graph, budget: Optional[SearchBudget] = None) -> ExactResult[tuple[int, ...]]:
    """
    Exact tree-width with an elimination-order certificate.

    Tries widths from the minor-min-width bound up to the min-fill width. On
    budget exhaustion the result brackets the value and carries the min-fill
    order as the upper-bound certificate.
    """
    budget = resolve_budget(budget, "exact_treewidth")
    upper, heuristic = min_fill_order(g)
    lower = minor_min_width(g)
    if lower == upper:
        return ExactResult(upper, lower, upper, tuple(heuristic), "bound-met")

    t = lower
    try:
        for t in range(lower, upper):
            order = treewidth_at_most(g, t, budget)
            if order is not None:
                return ExactResult(t, t, t, tuple(order), "exhausted")
    except BudgetExhausted:
        logger.warning(f"exact_treewidth stopped at width {t}; bounds [{t}, {upper}]")
        return ExactResult(None, t, upper, tuple(heuristic), "unknown")
    return ExactResult(upper, upper, upper, tuple(heuristic), "exhausted")


# =========================================================================
# t-tree colorings
# =========================================================================

@dataclass(frozen=True)
class TTreeColoring:
    """
    Proper coloring of a chordal completion with clique number ≤ t + 1.

    Every vertex has at most t neighbors later in `order` within `filled`, and
    colors lie in 0..t, so any p + 1 color classes induce tree-width ≤ p.
    """
    graph_hash: str
    t: int
    order: tuple[int, ...]
    filled: Graph
    colors: tuple[int, ...]

    @property
    def palette(self) -> range:
        return range(self.t + 1)

    def class_mask(self, *colors: int) -> VertexSet:
        wanted = set(colors)
        mask = 0
        for v, c in enumerate(self.colors):
            if c in wanted:
                mask |= 1 << v
        return mask


def t_tree_coloring(g: Graph, t: int, budget: Optional[SearchBudget] = None) -> Optional[TTreeColoring]:
    """
    Color g through a width-t elimination order, or None when tw(g) > t.

    Vertices are colored in reverse order; each one's later neighbors form a
    clique of at most t vertices in the filled graph, so t + 1 colors suffice.

    Raises:
        InputError: t < 1
    """
    if t < 1:
        raise InputError("t must be at least 1", {"t": t})
    order = treewidth_at_most(g, t, budget)
    if order is None:
        return None
    filled, width = fill_in(g, order)
    colors = [-1] * g.n
    for v in reversed(order):
        taken = {colors[w] for w in filled.neighbors(v) if colors[w] >= 0}
        colors[v] = min(c for c in range(t + 1) if c not in taken)
    logger.debug(f"t-tree coloring of {g!r}: width {width}, {len(set(colors))} colors")
    return TTreeColoring(
        graph_hash=g.graph_hash,
        t=t,
        order=tuple(order),
        filled=filled,
        colors=tuple(colors),
    )
