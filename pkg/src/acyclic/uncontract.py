"""
Un-contracting forests of a matching-contracted graph.

If contracting a matching M turns F into a forest, F has tree-width ≤ 3, and
≤ 2 when M is induced. Applied to the subgraph of G_M spanned by two colors of
an acyclic coloring, this yields small-tree-width induced subgraphs of G in
which every 2-valid edge of M stays 2-valid.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..graph.contraction import ContractionMap, contract_matching, is_induced_matching
from ..graph.core import Edge, Graph, VertexSet, induced_subgraph, is_induced_forest
from ..logger import get_logger
from ..treewidth.elimination import treewidth_at_most
from ..utils.error_handler import PreconditionError, VerificationError

logger = get_logger(__name__)


@dataclass(frozen=True)
class Uncontraction:
    """g[vertices] for the expansion of a contracted forest, with its old -> new index."""
    graph: Graph
    index: dict[int, int]
    vertices: VertexSet
    matching: tuple[Edge, ...]
    induced: bool

    @property
    def treewidth_limit(self) -> int:
        return 2 if self.induced else 3


def uncontract_forest_pair(
    g: Graph, cmap: ContractionMap, h_ab: VertexSet, check_treewidth: bool = True
) -> Uncontraction:
    """
    Expand the contracted vertex set h_ab back into an induced subgraph of g.

    Args:
        g: The graph the matching was contracted in
        cmap: Contraction record of that matching
        h_ab: Vertex set of the contracted graph inducing a forest there
        check_treewidth: Assert tw ≤ 2 (induced matching inside) or ≤ 3

    Raises:
        GraphMismatchError: cmap was built for another graph
        PreconditionError: h_ab does not induce a forest in the contracted graph
        VerificationError: the tree-width guarantee fails
    """
    cmap.check_source(g)
    contracted, _ = contract_matching(g, cmap.matching)
    if not is_induced_forest(contracted, h_ab):
        raise PreconditionError("the contracted vertex set does not induce a forest")

    vertices = cmap.expand(h_ab)
    piece, index = induced_subgraph(g, vertices)
    inside = tuple(e for e in cmap.matching if vertices >> e[0] & 1 and vertices >> e[1] & 1)
    result = Uncontraction(
        graph=piece,
        index=index,
        vertices=vertices,
        matching=inside,
        induced=is_induced_matching(g, inside),
    )
    if check_treewidth and treewidth_at_most(piece, result.treewidth_limit) is None:
        raise VerificationError(
            f"un-contracted piece exceeds tree-width {result.treewidth_limit}",
            {"vertices": piece.n, "matching": list(inside)},
        )
    return result
