"""
Candidate forests for the exact f_k set cover.

Every k-strong forest F extends to a vertex-maximal induced forest M ⊇ F.
Components only grow under vertex addition, so removing the components of M
with fewer than k edges keeps all of F's edges, and removing whole components
keeps the set induced. Hence the pruned maximal forests, reduced to the ones
whose edge sets are inclusion-maximal, dominate every k-strong forest.
"""
from __future__ import annotations

from typing import Optional

from ..graph.core import Graph, VertexSet, bits, component_of, least, members
from ..logger import get_logger
from ..utils.budget import SearchBudget, resolve_budget
from ..validity.witness import strip_small_components

logger = get_logger(__name__)


def joins_cycle(g: Graph, s: VertexSet, v: int) -> bool:
    """Whether adding v to the induced forest g[s] creates a cycle."""
    nbrs = g.rows[v] & s
    while nbrs:
        comp = component_of(g, least(nbrs), s)
        if (comp & g.rows[v]).bit_count() >= 2:
            return True
        nbrs &= ~comp
    return False


def maximal_induced_forests(g: Graph, budget: Optional[SearchBudget] = None) -> list[VertexSet]:
    """All vertex-maximal acyclic vertex sets of g."""
    budget = resolve_budget(budget, "maximal_induced_forests")
    n = g.n
    out: list[VertexSet] = []
    # suffix[i] = vertices i..n-1
    suffix = [((1 << n) - 1) & ~((1 << i) - 1) for i in range(n + 1)]

    def hopeless(s: VertexSet, excluded: VertexSet, i: int) -> bool:
        # an excluded vertex must end up closing a cycle; that needs two neighbors
        # among the vertices that are or may still become members
        possible = s | suffix[i]
        for v in bits(excluded):
            if (g.rows[v] & possible).bit_count() < 2:
                return True
        return False

    def rec(i: int, s: VertexSet, excluded: VertexSet) -> None:
        budget.tick()
        if i == n:
            if all(joins_cycle(g, s, v) for v in bits(excluded)):
                out.append(s)
            return
        if not joins_cycle(g, s, i):
            rec(i + 1, s | (1 << i), excluded)
        if not hopeless(s, excluded | (1 << i), i + 1):
            rec(i + 1, s, excluded | (1 << i))

    rec(0, 0, 0)
    return out


def enumerate_candidate_forests(
    g: Graph, k: int, budget: Optional[SearchBudget] = None
) -> list[VertexSet]:
    """
    k-strong forests whose edge sets dominate those of all k-strong forests.

    Deduplicated by edge set, inclusion-maximal, ordered by sorted member list.
    """
    edge_bit = {e: 1 << i for i, e in enumerate(g.edges)}
    by_edges: dict[int, VertexSet] = {}
    for forest in maximal_induced_forests(g, budget):
        pruned = strip_small_components(g, forest, k)
        if not pruned:
            continue
        key = 0
        for e in g.edges_within(pruned):
            key |= edge_bit[e]
        if key not in by_edges or members(pruned) < members(by_edges[key]):
            by_edges[key] = pruned

    keys = sorted(by_edges, key=lambda key: -key.bit_count())
    kept: list[int] = []
    for key in keys:
        if not any(key & other == key for other in kept):
            kept.append(key)
    result = sorted((by_edges[key] for key in kept), key=members)
    logger.debug(f"{len(result)} candidate {k}-strong forests for {g!r}")
    return result
