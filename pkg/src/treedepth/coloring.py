"""
p-tree-depth colorings and the color-subset compositions built on them.

A coloring is p-tree-depth when every set of p' ≤ p color classes induces
tree-depth at most p'. For p = k + 1 each witness tree of a k-valid edge uses
at most k + 1 colors, so covering every (k+1)-subset graph with cover_td covers
the whole graph.
"""
from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Optional

from ..graph.coloring import Coloring
from ..graph.core import Graph, VertexSet, component_of, induced_subgraph, lift_mask
from ..graph.elimination import EliminationTree
from ..logger import get_logger
from ..oracle.coloring import search_order
from ..oracle.cover import ExactResult, ForestCover, require_valid_cover
from ..oracle.treedepth import TreeDepthSolver, exact_tree_depth
from ..utils.budget import SearchBudget, resolve_budget
from ..utils.error_handler import BudgetExhausted, InputError, VerificationError
from .cover import check_cover_tree, cover_td, td_cover_bound
from .trees import local_tree

logger = get_logger(__name__)


def level_coloring(g: Graph, tree: EliminationTree) -> Coloring:
    """Color each vertex by its depth in the tree (0-based); a centered coloring with depth-many colors."""
    levels = tree.levels
    return Coloring(g.graph_hash, tuple(levels[v] - 1 for v in range(g.n)), "p-tree-depth")


def _p_coloring_with(g: Graph, q: int, p: int, solver: TreeDepthSolver, budget: SearchBudget) -> Optional[list[int]]:
    order = search_order(g)
    colors = [-1] * g.n
    classes = [0] * q

    def fits(v: int, c: int) -> bool:
        others = [i for i in range(q) if i != c and classes[i]]
        for size in range(0, p):
            for extra in combinations(others, size):
                union = classes[c] | (1 << v)
                for i in extra:
                    union |= classes[i]
                if solver.connected_depth(component_of(g, v, union)) > size + 1:
                    return False
        return True

    def rec(i: int, used: int) -> bool:
        if i == len(order):
            return True
        budget.tick()
        v = order[i]
        for c in range(min(used + 1, q)):
            if g.rows[v] & classes[c] or not fits(v, c):
                continue
            colors[v] = c
            classes[c] |= 1 << v
            if rec(i + 1, max(used, c + 1)):
                return True
            classes[c] &= ~(1 << v)
            colors[v] = -1
        return False

    return colors if rec(0, 0) else None


def p_tree_depth_coloring(g: Graph, p: int, budget: Optional[SearchBudget] = None) -> ExactResult[Coloring]:
    """
    A p-tree-depth coloring with the fewest colors (χ_p), by backtracking over
    q = 1, 2, ... colors up to tree-depth, where the level coloring of an
    optimal elimination forest always works.

    On budget exhaustion the level coloring is returned as the upper-bound
    certificate with proof "unknown".

    Raises:
        InputError: p < 1
    """
    if p < 1:
        raise InputError("p must be at least 1", {"p": p})
    budget = resolve_budget(budget, "p_tree_depth_coloring")
    if g.n == 0:
        return ExactResult(0, 0, 0, Coloring(g.graph_hash, (), "p-tree-depth", p), "exhausted")
    td = exact_tree_depth(g, budget)
    fallback = level_coloring(g, td.certificate)
    fallback = Coloring(g.graph_hash, fallback.colors, "p-tree-depth", p)
    upper = fallback.num_colors

    solver = TreeDepthSolver(g, budget)
    q = 1 if g.m == 0 else 2
    try:
        while q < upper:
            colors = _p_coloring_with(g, q, p, solver, budget)
            if colors is not None:
                return ExactResult(q, q, q, Coloring(g.graph_hash, tuple(colors), "p-tree-depth", p), "exhausted")
            q += 1
    except BudgetExhausted:
        logger.warning(f"χ_{p} search stopped at {q} colors; bounds [{q}, {upper}]")
        return ExactResult(None, q, upper, fallback, "unknown")
    if not td.is_exact:
        return ExactResult(None, q, upper, fallback, "unknown")
    return ExactResult(upper, upper, upper, fallback, "exhausted")


def _subset_covers(
    g: Graph, coloring: Coloring, size: int, k: int, budget: Optional[SearchBudget]
) -> list[VertexSet]:
    """cover_td on the graph of every `size`-subset of color classes, lifted back to g."""
    palette = coloring.palette
    subsets = list(combinations(palette, size)) if len(palette) > size else [palette]
    masks: list[VertexSet] = []
    for subset in subsets:
        part = coloring.class_mask(*subset)
        if g.edge_count_within(part) == 0:
            continue
        h, index = induced_subgraph(g, part)
        tree = exact_tree_depth(h, budget).certificate
        local = cover_td(h, tree, k, budget)
        masks.extend(lift_mask(f, index) for f in local.masks())
    return masks


def low_td_composition(
    g: Graph, k: int, budget: Optional[SearchBudget] = None
) -> tuple[ForestCover, int, int]:
    """
    Cover through a minimum (k+1)-tree-depth coloring with q colors, returned
    with q and the bound C(q, k+1)·(2k)^(k+1) it respects.

    Raises:
        BudgetExhausted: χ_(k+1) could not be settled within the budget
        VerificationError: the composed cover fails verification
    """
    if k < 1:
        raise InputError(f"k must be a positive integer, got {k}")
    result = p_tree_depth_coloring(g, k + 1, budget)
    if not result.is_exact:
        raise BudgetExhausted(
            f"χ_{k + 1} search ran out of budget",
            lower=result.lower,
            upper=result.upper,
        )
    coloring = result.certificate
    q = coloring.num_colors
    masks = _subset_covers(g, coloring, k + 1, k, budget)
    cover = ForestCover.from_masks(g, k, masks).deduplicated(g)
    bound = comb(q, k + 1) * td_cover_bound(k, k + 1) if q > k + 1 else td_cover_bound(k, q)
    if len(cover) > bound:
        raise VerificationError(f"{len(cover)} forests exceed the color-subset bound {bound}")
    logger.debug(f"cover via χ_{k + 1} = {q}: {len(cover)} forests")
    return require_valid_cover(g, cover, "cover_via_low_td_coloring"), q, bound


def cover_via_low_td_coloring(g: Graph, k: int, budget: Optional[SearchBudget] = None) -> ForestCover:
    """At most C(q, k+1)·(2k)^(k+1) k-strong forests for q = χ_(k+1)(g), duplicates removed."""
    cover, _, _ = low_td_composition(g, k, budget)
    return cover


def cover_td_by_levels(
    g: Graph, tree: EliminationTree, k: int, budget: Optional[SearchBudget] = None
) -> ForestCover:
    """
    Cover through the level coloring of an elimination tree of depth d: every
    (k+1)-subset of levels induces tree-depth ≤ k+1, so at most
    (2k)^(k+1)·C(d, k+1) forests when d > k + 1.
    """
    check_cover_tree(g, tree, k)
    d = tree.depth
    if d <= k + 1:
        return cover_td(g, tree, k, budget)
    levels = level_coloring(g, tree)
    masks: list[VertexSet] = []
    for subset in combinations(range(d), k + 1):
        part = levels.class_mask(*subset)
        if g.edge_count_within(part) == 0:
            continue
        h, index, sub_tree = local_tree(g, tree, part)
        local = cover_td(h, sub_tree, k, budget)
        masks.extend(lift_mask(f, index) for f in local.masks())
    cover = ForestCover.from_masks(g, k, masks).deduplicated(g)
    bound = td_cover_bound(k, k + 1) * comb(d, k + 1)
    if len(cover) > bound:
        raise VerificationError(f"{len(cover)} forests exceed the level bound {bound}")
    return require_valid_cover(g, cover, "cover_td_by_levels")
