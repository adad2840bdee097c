"""
Almost k-valid edges and their counting bounds.

With respect to the root r of an underlying tree, an edge is almost k-valid
when it is not k-valid but lies on an induced path through r. Any such path can
be cut at r, so the edge also lies on an induced path that starts at r; both
readings give the same edge set, and both are computed.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..graph.core import Edge, Graph
from ..graph.elimination import EliminationTree
from ..validity.paths import root_path_edges
from ..validity.witness import k_valid_edges


def almost_valid_bound(k: int, d: int) -> int:
    """Most almost k-valid edges a graph with an underlying tree of depth d can have."""
    if d < 2:
        return 0
    return (2 * k) ** (d - 1) - 1


def star_almost_valid_bound(k: int, d: int) -> int:
    """The same bound when the root has a single child."""
    if d < 2:
        return 0
    return 2 * (2 * k) ** (d - 2) - 1


@dataclass(frozen=True)
class AlmostValidReport:
    """
    Almost k-valid edges of g[tree.vertices] relative to the tree's root.

    `edges` uses paths with the root anywhere on them; `endpoint_edges` only
    paths that start at the root. `branch_counts` maps each child of the root
    to the number of edges inside its branch.
    """
    root: int
    k: int
    depth: int
    star_rooted: bool
    edges: tuple[Edge, ...]
    endpoint_edges: tuple[Edge, ...]
    branch_counts: dict[int, int]

    @property
    def bound(self) -> int:
        return almost_valid_bound(self.k, self.depth)

    @property
    def star_bound(self) -> int:
        return star_almost_valid_bound(self.k, self.depth)

    @property
    def within_bounds(self) -> bool:
        if len(self.edges) > self.bound:
            return False
        return not self.star_rooted or len(self.edges) <= self.star_bound


def almost_k_valid_edges(g: Graph, tree: EliminationTree, k: int) -> AlmostValidReport:
    """
    Collect the almost k-valid edges of the graph certified by `tree`.

    Raises:
        PreconditionError: tree does not certify g or has several roots
    """
    tree.validate(g)
    r = tree.root
    mask = tree.vertices
    valid = set(k_valid_edges(g, k, mask))
    general = root_path_edges(g, r, mask) - valid
    strict = root_path_edges(g, r, mask, endpoint_only=True) - valid
    counts = {}
    for x in tree.children(r):
        branch = tree.subtree(x) | (1 << r)
        counts[x] = sum(1 for u, v in general if branch >> u & 1 and branch >> v & 1)
    return AlmostValidReport(
        root=r,
        k=k,
        depth=tree.depth,
        star_rooted=tree.is_star_rooted,
        edges=tuple(sorted(general)),
        endpoint_edges=tuple(sorted(strict)),
        branch_counts=counts,
    )
