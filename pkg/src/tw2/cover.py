"""
2-strong induced forest covers of tree-width-2 graphs with at most 3 forests.
"""
from __future__ import annotations

from ..graph.core import (
    Graph,
    VertexSet,
    components,
    cycle_order,
    induced_subgraph,
    is_cycle_graph,
    lift_mask,
)
from ..logger import get_logger
from ..oracle.cover import ForestCover, merge_index_wise, require_valid_cover
from ..utils.error_handler import PreconditionError
from ..validity.witness import strip_small_components
from .coloring import good_coloring
from .completion import degree_two_elimination

logger = get_logger(__name__)


def _component_forests(h: Graph) -> list[VertexSet]:
    """Forests of one connected piece, in local indices."""
    if is_cycle_graph(h, 4):
        w0, w1, w2, w3 = cycle_order(h)
        return [(1 << w0) | (1 << w1) | (1 << w2), (1 << w2) | (1 << w3) | (1 << w0)]
    coloring = good_coloring(h)
    return [strip_small_components(h, f, 2) for f in coloring.forests]


def cover_2valid_tw2(g: Graph) -> ForestCover:
    """
    Cover every 2-valid edge of g with at most three 2-strong induced forests.

    Components are handled separately and their i-th forests united. C4
    components use two 3-vertex paths; all others use the forests of a good
    coloring with their single-vertex and single-edge components removed.

    Raises:
        PreconditionError: tw(g) > 2
        VerificationError: the resulting cover fails verification
    """
    if degree_two_elimination(g) is None:
        raise PreconditionError("graph has tree-width greater than 2", {"graph": g.graph_hash})

    parts: list[list[VertexSet]] = []
    for comp in components(g):
        if g.edge_count_within(comp) == 0:
            continue
        h, index = induced_subgraph(g, comp)
        parts.append([lift_mask(f, index) for f in _component_forests(h)])

    masks = [m for m in merge_index_wise(parts) if m]
    cover = ForestCover.from_masks(g, 2, masks)
    logger.debug(f"tw2 cover of {g!r} uses {len(masks)} forests")
    return require_valid_cover(g, cover, "cover_2valid_tw2")
