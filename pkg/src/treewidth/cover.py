"""
k-strong covers for graphs of bounded tree-width, built on t-tree colorings.

Any two color classes of a t-tree coloring induce a forest, so the C(t+1, 2)
color pairs give a 1-strong cover. Any three classes induce tree-width ≤ 2, so
running the tree-width-2 cover on each of the C(t+1, 3) triples gives a 2-strong
cover with at most 3·C(t+1, 3) forests.
"""
from __future__ import annotations

from itertools import combinations
from typing import Optional

from ..graph.core import Graph, VertexSet, induced_subgraph, lift_mask
from ..logger import get_logger
from ..oracle.cover import ForestCover, require_valid_cover
from ..tw2.cover import cover_2valid_tw2
from ..utils.budget import SearchBudget
from ..utils.error_handler import PreconditionError
from ..validity.witness import strip_small_components
from .elimination import TTreeColoring, t_tree_coloring

logger = get_logger(__name__)


def _coloring_or_raise(g: Graph, t: int, budget: Optional[SearchBudget]) -> TTreeColoring:
    coloring = t_tree_coloring(g, t, budget)
    if coloring is None:
        raise PreconditionError(f"graph has tree-width greater than {t}", {"graph": g.graph_hash, "t": t})
    return coloring


def cover_f1_tw(g: Graph, t: int, budget: Optional[SearchBudget] = None) -> ForestCover:
    """
    At most C(t+1, 2) induced forests covering every edge exactly once.

    Raises:
        PreconditionError: tw(g) > t
    """
    coloring = _coloring_or_raise(g, t, budget)
    masks: list[VertexSet] = []
    for pair in combinations(coloring.palette, 2):
        forest = strip_small_components(g, coloring.class_mask(*pair), 1)
        if forest:
            masks.append(forest)
    logger.debug(f"cover_f1_tw(t={t}) on {g!r}: {len(masks)} forests")
    return require_valid_cover(g, ForestCover.from_masks(g, 1, masks), "cover_f1_tw")


def cover_f2_tw(g: Graph, t: int, budget: Optional[SearchBudget] = None) -> ForestCover:
    """
    At most 3·C(t+1, 3) 2-strong induced forests covering every 2-valid edge.

    Each witness path on three vertices uses at most three colors, so it
    survives in the graph of some color triple.

    Raises:
        PreconditionError: t < 2 or tw(g) > t
    """
    if t < 2:
        raise PreconditionError("the triple construction needs t ≥ 2", {"t": t})
    coloring = _coloring_or_raise(g, t, budget)
    masks: list[VertexSet] = []
    for triple in combinations(coloring.palette, 3):
        part = coloring.class_mask(*triple)
        if g.edge_count_within(part) == 0:
            continue
        h, index = induced_subgraph(g, part)
        local = cover_2valid_tw2(h)
        masks.extend(lift_mask(f, index) for f in local.masks())
    logger.debug(f"cover_f2_tw(t={t}) on {g!r}: {len(masks)} forests")
    return require_valid_cover(g, ForestCover.from_masks(g, 2, masks), "cover_f2_tw")
