"""
2-strong covers from acyclic colorings.

The pair forests of an acyclic coloring with x colors cover every 2-valid edge
outside the leftover matchings. Leftover edges are covered by contracting a
matching, acyclically coloring the contracted graph, and covering the
un-contracted two-color pieces:

    pair route    one matching per color pair; pieces have tree-width ≤ 2,
                  3 forests each
    vizing route  the leftover graph split into ≤ Δ+1 matchings; pieces have
                  tree-width ≤ 3, 12 forests each

Bounds are computed per instance from the acyclic chromatic numbers of G and
of each contracted graph.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Literal, Optional, Sequence

from ..graph.coloring import Coloring
from ..graph.contraction import contract_matching
from ..graph.core import Edge, Graph, VertexSet, lift_mask
from ..logger import get_logger
from ..oracle.cover import ForestCover, require_valid_cover
from ..treewidth.cover import cover_f2_tw
from ..tw2.cover import cover_2valid_tw2
from ..utils.budget import SearchBudget
from ..utils.error_handler import InputError, VerificationError
from ..validity.witness import k_valid_edges
from .matchings import decompose_into_matchings
from .split import optimal_acyclic_coloring, pair_split
from .uncontract import uncontract_forest_pair

logger = get_logger(__name__)

Route = Literal["pair", "vizing", "best"]
ROUTES = ("pair", "vizing", "best")


@dataclass
class RouteResult:
    """Cover produced by one route with its instance bound."""
    route: str
    cover: ForestCover
    x: int
    bound: int
    contracted_colors: list[int] = field(default_factory=list)


class _ColoringCache:
    """Exact acyclic colorings keyed by graph hash for one pipeline run."""

    def __init__(self, budget: Optional[SearchBudget]):
        self.budget = budget
        self.cache: dict[str, Coloring] = {}

    def get(self, g: Graph, stage: str) -> Coloring:
        hit = self.cache.get(g.graph_hash)
        if hit is None:
            hit = optimal_acyclic_coloring(g, self.budget, stage)
            self.cache[g.graph_hash] = hit
        return hit


def _cover_matching(
    g: Graph,
    matching: Sequence[Edge],
    colorings: _ColoringCache,
    piece_cover,
    stage: str,
) -> tuple[list[VertexSet], int]:
    """
    Cover the 2-valid edges of one matching through its contraction.

    Returns the lifted forests that cover some target edge, and χ_acyc of the
    contracted graph.
    """
    valid = set(k_valid_edges(g, 2))
    targets = [e for e in matching if e in valid]
    contracted, cmap = contract_matching(g, matching)
    coloring = colorings.get(contracted, stage)
    reached: set[Edge] = set()
    forests: list[VertexSet] = []
    for pair in combinations(coloring.palette, 2):
        piece = uncontract_forest_pair(g, cmap, coloring.class_mask(*pair))
        if piece.graph.m == 0:
            continue
        local_valid = set(k_valid_edges(piece.graph, 2))
        for u, v in targets:
            if piece.vertices >> u & 1 and piece.vertices >> v & 1:
                if tuple(sorted((piece.index[u], piece.index[v]))) in local_valid:
                    reached.add((u, v))
        for f in piece_cover(piece.graph).masks():
            lifted = lift_mask(f, piece.index)
            if any(lifted >> u & 1 and lifted >> v & 1 for u, v in targets):
                forests.append(lifted)
    missing = [e for e in targets if e not in reached]
    if missing:
        raise VerificationError(f"{stage}: matching edge {missing[0]} is 2-valid in no piece")
    return forests, coloring.num_colors


def _route(g: Graph, route: str, colorings: _ColoringCache) -> RouteResult:
    coloring = colorings.get(g, f"{route} route")
    split = pair_split(g, coloring)
    x = split.x
    masks = list(split.forests)

    if route == "pair":
        matchings = split.matchings
        piece_cover, per_pair = cover_2valid_tw2, 3
    else:
        matchings = decompose_into_matchings(split.leftover)
        piece_cover, per_pair = (lambda piece: cover_f2_tw(piece, 3)), 12

    bound = comb(x, 2)
    contracted_colors = []
    for i, matching in enumerate(matchings):
        forests, x_m = _cover_matching(g, matching, colorings, piece_cover, f"{route} route, matching {i}")
        masks.extend(forests)
        contracted_colors.append(x_m)
        bound += per_pair * comb(x_m, 2)

    cover = ForestCover.from_masks(g, 2, masks).deduplicated(g)
    cover = require_valid_cover(g, cover, f"cover_f2_acyclic ({route} route)")
    if len(cover) > bound:
        raise VerificationError(f"{route} route used {len(cover)} forests, bound {bound}")
    logger.debug(f"{route} route on {g!r}: {len(cover)} forests (bound {bound})")
    return RouteResult(route=route, cover=cover, x=x, bound=bound, contracted_colors=contracted_colors)


def run_acyclic_routes(
    g: Graph, route: Route = "best", budget: Optional[SearchBudget] = None
) -> list[RouteResult]:
    """Results of the requested route, or of both routes for "best"."""
    if route not in ROUTES:
        raise InputError(f"unknown route {route!r}", {"routes": list(ROUTES)})
    colorings = _ColoringCache(budget)
    names = ["pair", "vizing"] if route == "best" else [route]
    return [_route(g, name, colorings) for name in names]


def cover_f2_acyclic(g: Graph, route: Route = "best", budget: Optional[SearchBudget] = None) -> ForestCover:
    """
    A verified 2-strong cover through the acyclic-coloring pipeline.

    "best" runs both routes and keeps the smaller cover (the pair route on ties).

    Raises:
        BudgetExhausted: an acyclic coloring search ran out of budget
        VerificationError: a piece or the final cover fails its check
    """
    results = run_acyclic_routes(g, route, budget)
    best = min(results, key=lambda r: len(r.cover))
    return best.cover
