"""
Splitting an acyclic coloring into pair forests and induced matchings.

Under an acyclic coloring every two color classes induce a forest. Its
components with at least two edges form the 2-strong forest F_ij; its
single-edge components form the matching M_ij. Each edge lies in the forest
of exactly one color pair, namely the pair of its end colors.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from ..graph.coloring import Coloring, is_acyclic_coloring
from ..graph.contraction import is_induced_matching
from ..graph.core import Edge, Graph, VertexSet, is_induced_forest
from ..logger import get_logger
from ..oracle.coloring import exact_acyclic_chromatic
from ..oracle.cover import ForestCover, require_valid_cover
from ..utils.budget import SearchBudget
from ..utils.error_handler import BudgetExhausted, GraphMismatchError, PreconditionError, VerificationError
from ..validity.witness import strip_small_components

logger = get_logger(__name__)


@dataclass(frozen=True)
class PairPart:
    """Forest (components with ≥ 2 edges) and matching (single edges) of one color pair."""
    colors: tuple[int, int]
    forest: VertexSet
    matching: tuple[Edge, ...]


@dataclass(frozen=True)
class PairSplit:
    coloring: Coloring
    parts: tuple[PairPart, ...]

    @property
    def x(self) -> int:
        return self.coloring.num_colors

    @property
    def leftover(self) -> tuple[Edge, ...]:
        """Edges in no pair forest: exactly the matching edges."""
        return tuple(sorted(e for part in self.parts for e in part.matching))

    @property
    def forests(self) -> list[VertexSet]:
        return [part.forest for part in self.parts if part.forest]

    @property
    def matchings(self) -> list[tuple[Edge, ...]]:
        return [part.matching for part in self.parts if part.matching]


def pair_split(g: Graph, coloring: Coloring) -> PairSplit:
    """
    Split g along every color pair of an acyclic coloring.

    Raises:
        GraphMismatchError: coloring belongs to another graph
        PreconditionError: coloring is not acyclic
        VerificationError: a matching is not induced, or edges are lost
    """
    if coloring.graph_hash != g.graph_hash:
        raise GraphMismatchError("coloring refers to a different graph")
    if not is_acyclic_coloring(g, coloring.colors):
        raise PreconditionError("pair_split needs an acyclic coloring")

    parts = []
    counted = 0
    for pair in combinations(coloring.palette, 2):
        check = is_induced_forest(g, coloring.class_mask(*pair))
        forest = 0
        matching: list[Edge] = []
        for info in check.components:
            if info.edge_count >= 2:
                forest |= info.vertices
            elif info.edge_count == 1:
                matching.extend(g.edges_within(info.vertices))
            counted += info.edge_count
        if not is_induced_matching(g, matching):
            raise VerificationError(f"matching of colors {pair} is not induced")
        parts.append(PairPart(colors=pair, forest=forest, matching=tuple(matching)))

    if counted != g.m:
        raise VerificationError("color pairs do not partition the edges", {"counted": counted, "m": g.m})
    split = PairSplit(coloring=coloring, parts=tuple(parts))
    logger.debug(f"pair split of {g!r}: x={split.x}, {len(split.leftover)} leftover edges")
    return split


def optimal_acyclic_coloring(g: Graph, budget: Optional[SearchBudget], stage: str) -> Coloring:
    """Exact minimum acyclic coloring, or BudgetExhausted naming the stage."""
    result = exact_acyclic_chromatic(g, budget)
    if not result.is_exact:
        raise BudgetExhausted(
            f"{stage}: acyclic coloring search ran out of budget",
            lower=result.lower,
            upper=result.upper,
            details={"stage": stage},
        )
    return result.certificate


def cover_f1_acyclic(
    g: Graph, budget: Optional[SearchBudget] = None, coloring: Optional[Coloring] = None
) -> ForestCover:
    """
    At most C(x, 2) induced forests covering every edge exactly once: each
    color pair's forest minus its isolated vertices, for an acyclic coloring
    with x colors (an optimal one unless `coloring` is given).
    """
    if coloring is None:
        coloring = optimal_acyclic_coloring(g, budget, "cover_f1_acyclic")
    elif not is_acyclic_coloring(g, coloring.colors):
        raise PreconditionError("cover_f1_acyclic needs an acyclic coloring")
    masks = []
    for pair in combinations(coloring.palette, 2):
        forest = strip_small_components(g, coloring.class_mask(*pair), 1)
        if forest:
            masks.append(forest)
    return require_valid_cover(g, ForestCover.from_masks(g, 1, masks), "cover_f1_acyclic")
