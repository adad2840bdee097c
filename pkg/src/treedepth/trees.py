"""
Underlying trees and their branch decompositions.

An underlying tree of G is a single rooted tree on V(G) whose ancestor relation
contains every edge. A branch at a child x of the root r is the subtree of x
plus r; such a tree has a root of degree 1, and deleting either r or x leaves a
tree of one level less.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..graph.core import Graph, VertexSet, bits, induced_subgraph
from ..graph.elimination import EliminationTree
from ..logger import get_logger
from ..oracle.treedepth import TreeDepthSolver
from ..utils.budget import SearchBudget
from ..utils.error_handler import InputError, PreconditionError

logger = get_logger(__name__)


def underlying_tree(g: Graph, d: int, budget: Optional[SearchBudget] = None) -> Optional[EliminationTree]:
    """
    A single rooted tree of depth ≤ d certifying g, or None if there is none.

    Disconnected graphs get one tree whose root is a vertex of some component.

    Raises:
        InputError: d < 1
        PreconditionError: g has no vertices
    """
    if d < 1:
        raise InputError("depth must be at least 1", {"d": d})
    if g.n == 0:
        raise PreconditionError("the empty graph has no underlying tree")
    solver = TreeDepthSolver(g, budget)
    depth, _ = solver.single_tree_depth(g.vertex_mask)
    if depth > d:
        logger.debug(f"{g!r} needs depth {depth} > {d}")
        return None
    return solver.build_single_tree(g.vertex_mask)


def split_branch(tree: EliminationTree, x: int) -> EliminationTree:
    """The root together with the subtree of its child x."""
    r = tree.root
    if tree.parent.get(x) != r:
        raise PreconditionError(f"{x} is not a child of the root {r}")
    parent = {r: None}
    for v in bits(tree.subtree(x)):
        parent[v] = tree.parent[v]
    return EliminationTree(parent)


@dataclass(frozen=True)
class BranchTrees:
    """Trees of G - r (rooted at x) and G - x (x's children moved up to r)."""
    minus_root: EliminationTree
    minus_child: EliminationTree


def derive_branch(tree: EliminationTree) -> BranchTrees:
    """
    Depth-(d-1) trees for G - r and G - x from a tree whose root r has the single child x.

    Raises:
        PreconditionError: the root does not have exactly one child
    """
    if not tree.is_star_rooted:
        raise PreconditionError("derive_branch needs a single root with exactly one child")
    x = tree.children(tree.root)[0]
    return BranchTrees(minus_root=tree.without_root(), minus_child=tree.without_vertex(x))


def induced_tree(tree: EliminationTree, mask: VertexSet) -> EliminationTree:
    """Forest on mask ∩ vertices where each vertex hangs from its nearest kept ancestor."""
    keep = mask & tree.vertices
    parent: dict[int, Optional[int]] = {}
    for v in bits(keep):
        p = tree.parent[v]
        while p is not None and not keep >> p & 1:
            p = tree.parent[p]
        parent[v] = p
    return EliminationTree(parent)


def relabel_tree(tree: EliminationTree, index: dict[int, int]) -> EliminationTree:
    """Rename vertices through an old -> new map (as returned by induced_subgraph)."""
    return EliminationTree(
        {index[v]: (None if p is None else index[p]) for v, p in tree.parent.items()}
    )


def local_tree(g: Graph, tree: EliminationTree, mask: VertexSet) -> tuple[Graph, dict[int, int], EliminationTree]:
    """g[mask] with the induced forest of `tree`, both renumbered densely."""
    h, index = induced_subgraph(g, mask)
    return h, index, relabel_tree(induced_tree(tree, mask), index)
