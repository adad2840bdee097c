"""
k-strong covers from underlying trees, at most (2k)^d forests for depth d.

For a tree with root r and children x_1..x_t, branch i is r plus the subtree of
x_i. The k-valid edges split into five parts, handled in turn:

    S1  valid edges r-x_i                    one star, or a witness tree each
    S2  valid in some branch minus r         recursion, united across branches
    S3  valid in some branch minus x_i       recursion, united across branches
    S4  valid in some branch                 one witness tree per edge and branch
    S5  the rest (almost valid in a branch)  witness trees, or unions of root paths

Forests from different branches may be united when none of them contains r
(S2) or all of them do (S3, S4, S5): branches only meet at r.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..graph.core import Edge, Graph, VertexSet, least
from ..graph.elimination import EliminationTree
from ..logger import get_logger
from ..oracle.cover import ForestCover, merge_index_wise, require_valid_cover
from ..treewidth.cover import cover_f1_tw
from ..utils.budget import SearchBudget
from ..utils.error_handler import InputError, PreconditionError, VerificationError
from ..validity.paths import find_root_path
from ..validity.witness import find_witness_tree, is_k_strong_forest, k_valid_edges, strip_small_components
from .almost import star_almost_valid_bound
from .trees import derive_branch, split_branch

logger = get_logger(__name__)

PARTS = ("S1", "S2", "S3", "S4", "S5")


def td_cover_bound(k: int, d: int) -> int:
    return (2 * k) ** d


@dataclass(frozen=True)
class CoverLedger:
    """Edge counts and forest counts per part for one rooted tree, with their bounds."""
    root: int
    depth: int
    k: int
    edge_counts: tuple[int, ...]
    forest_counts: tuple[int, ...]

    @property
    def part_bounds(self) -> tuple[int, ...]:
        k, d = self.k, self.depth
        recursive = td_cover_bound(k, d - 1)
        return (
            k - 1,
            recursive,
            recursive,
            2 * ((2 * k) ** (d - 2) - 1),
            (k - 1) * star_almost_valid_bound(k, d),
        )

    @property
    def total(self) -> int:
        return sum(self.forest_counts)

    def violations(self) -> list[str]:
        out = [
            f"{name} used {count} forests, bound {bound}"
            for name, count, bound in zip(PARTS, self.forest_counts, self.part_bounds)
            if count > bound
        ]
        if self.total > td_cover_bound(self.k, self.depth):
            out.append(f"{self.total} forests exceed (2k)^d = {td_cover_bound(self.k, self.depth)}")
        return out


class _RootedCover:
    """Builds the cover for one rooted tree; collects ledgers of every level visited."""

    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self.ledgers: list[CoverLedger] = []

    def witness(self, e: Edge, within: VertexSet) -> VertexSet:
        tree = find_witness_tree(self.g, e, self.k, within, least=True)
        if tree is None:
            raise VerificationError(f"edge {e} lost its witness tree", {"edge": e})
        return tree.vertices

    def united(self, parts: list[list[VertexSet]], need_root: Optional[int]) -> list[VertexSet]:
        """Index-wise union of per-branch forests, checking each result is k-strong."""
        for part in parts:
            for forest in part:
                if need_root is not None and not forest >> need_root & 1:
                    raise VerificationError("branch forest misses the root it must share")
        merged = merge_index_wise(parts)
        for forest in merged:
            if not is_k_strong_forest(self.g, forest, self.k):
                raise VerificationError("united branch forests are not a k-strong forest")
        return merged

    def cover(self, tree: EliminationTree) -> list[VertexSet]:
        g, k = self.g, self.k
        mask = tree.vertices
        valid = k_valid_edges(g, k, mask)
        if not valid:
            return []
        d = tree.depth
        if d <= 2:
            return [strip_small_components(g, mask, k)]

        r = tree.root
        branches = []
        for x in tree.children(r):
            sub = split_branch(tree, x)
            branches.append((x, sub.vertices, derive_branch(sub)))

        def inside(e: Edge, vertices: VertexSet) -> bool:
            return bool(vertices >> e[0] & 1 and vertices >> e[1] & 1)

        remaining = set(valid)
        parts: list[set[Edge]] = []

        s1 = {e for e in remaining if r in e and any(x in e for x, _, _ in branches)}
        remaining -= s1
        parts.append(s1)

        minus_root_valid = [set(k_valid_edges(g, k, b & ~(1 << r))) for _, b, _ in branches]
        s2 = {e for e in remaining if any(e in vs for vs in minus_root_valid)}
        remaining -= s2
        parts.append(s2)

        minus_child_valid = [set(k_valid_edges(g, k, b & ~(1 << x))) for x, b, _ in branches]
        s3 = {e for e in remaining if any(e in vs for vs in minus_child_valid)}
        remaining -= s3
        parts.append(s3)

        branch_valid = [set(k_valid_edges(g, k, b)) for _, b, _ in branches]
        s4 = {e for e in remaining if any(e in vs for vs in branch_valid)}
        remaining -= s4
        parts.append(s4)
        parts.append(remaining)

        # S1
        if len(s1) >= k:
            star = 1 << r
            for e in s1:
                star |= (1 << e[0]) | (1 << e[1])
            f1 = [star]
        else:
            f1 = [self.witness(e, mask) for e in sorted(s1)]

        # S2, S3
        f2_parts, f3_parts = [], []
        for (x, b, trees) in branches:
            if any(inside(e, b & ~(1 << r)) for e in s2):
                local = self.cover(trees.minus_root)
                f2_parts.append([f for f in local if any(inside(e, f) for e in s2)])
            if any(inside(e, b & ~(1 << x)) for e in s3):
                local = self.cover(trees.minus_child)
                f3_parts.append([f for f in local if any(inside(e, f) for e in s3)])
        f2 = self.united(f2_parts, None)
        f3 = self.united(f3_parts, r)

        # S4
        f4_parts = []
        for _, b, _ in branches:
            chosen: list[VertexSet] = []
            for e in sorted(s4):
                if not inside(e, b) or any(inside(e, f) for f in chosen):
                    continue
                chosen.append(self.witness(e, b))
            f4_parts.append(chosen)
        f4 = self.united(f4_parts, r)

        # S5
        s5 = parts[4]
        with_root_edge = [(x, b) for x, b, _ in branches if g.rows[r] & b]
        if not s5:
            f5 = []
        elif len(with_root_edge) <= k - 1:
            f5 = []
            for e in sorted(s5):
                if not any(inside(e, f) for f in f5):
                    f5.append(self.witness(e, mask))
        else:
            paths = [self._root_paths(r, b, s5) for _, b in with_root_edge]
            defaults = [(1 << r) | (1 << least(g.rows[r] & b)) for _, b in with_root_edge]
            f5 = self.united(_pad_root_paths(paths, defaults), r)

        forests = f1 + f2 + f3 + f4 + f5
        ledger = CoverLedger(
            root=r,
            depth=d,
            k=k,
            edge_counts=tuple(len(p) for p in parts),
            forest_counts=(len(f1), len(f2), len(f3), len(f4), len(f5)),
        )
        problems = ledger.violations()
        if problems:
            raise VerificationError(f"tree-depth cover ledger failed: {problems[0]}", {"ledger": problems})
        self.ledgers.append(ledger)
        logger.debug(f"root {r}, depth {d}: parts {ledger.edge_counts}, forests {ledger.forest_counts}")
        return forests

    def _root_paths(self, r: int, branch: VertexSet, s5: set[Edge]) -> list[VertexSet]:
        """Induced paths from r inside one branch covering the S5 edges there."""
        g = self.g
        paths: list[VertexSet] = []
        for e in sorted(s5):
            if not (branch >> e[0] & 1 and branch >> e[1] & 1):
                continue
            if any(p >> e[0] & 1 and p >> e[1] & 1 for p in paths):
                continue
            path = find_root_path(g, r, e, branch, endpoint_only=True)
            if path is None:
                path = find_root_path(g, r, e, branch)
            if path is None:
                raise VerificationError(f"edge {e} is on no induced path from the root", {"edge": e})
            paths.append(path)
        return paths


def _pad_root_paths(parts: list[list[VertexSet]], defaults: list[VertexSet]) -> list[list[VertexSet]]:
    """Repeat each branch's default root edge until all branches have equally many paths."""
    width = max((len(p) for p in parts), default=0)
    return [p + [dflt] * (width - len(p)) for p, dflt in zip(parts, defaults)]


def check_cover_tree(g: Graph, tree: EliminationTree, k: int) -> None:
    if k < 1:
        raise InputError(f"k must be a positive integer, got {k}")
    tree.validate(g)
    if tree.vertices != g.vertex_mask:
        raise PreconditionError("the tree must contain every vertex of the graph")


def cover_td_with_ledger(
    g: Graph, tree: EliminationTree, k: int, budget: Optional[SearchBudget] = None
) -> tuple[ForestCover, list[CoverLedger]]:
    """
    cover_td plus the per-level ledgers of the five-part construction.

    Raises:
        PreconditionError: tree does not certify g or misses vertices
        VerificationError: a ledger bound or the final cover check fails
    """
    check_cover_tree(g, tree, k)
    d = tree.depth
    if k == 1:
        return cover_f1_tw(g, max(d - 1, 1), budget), []

    builder = _RootedCover(g, k)
    parts = []
    for r in tree.roots:
        parts.append([f for f in builder.cover(tree.restrict(r)) if f])
    masks = [m for m in merge_index_wise(parts) if m]
    if len(masks) > td_cover_bound(k, d):
        raise VerificationError(f"{len(masks)} forests exceed (2k)^d = {td_cover_bound(k, d)}")
    cover = require_valid_cover(g, ForestCover.from_masks(g, k, masks), "cover_td")
    return cover, builder.ledgers


def cover_td(g: Graph, tree: EliminationTree, k: int, budget: Optional[SearchBudget] = None) -> ForestCover:
    """
    At most (2k)^d k-strong forests covering every k-valid edge of g, where d
    is the depth of `tree` (an elimination forest on all of V(g)).

    k = 1 goes through the tree-width route with t = d - 1.
    """
    cover, _ = cover_td_with_ledger(g, tree, k, budget)
    return cover
