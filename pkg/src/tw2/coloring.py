"""
Good 3-colorings of connected tree-width-2 graphs.

A coloring c: V -> {1, 2, 3} is good when, for every i, the vertices not
colored i induce a forest F_i with no single-vertex component and whose
single-edge components are all twin edges. Every connected graph with
tree-width at most 2 and at least one edge has one, except C4.

The construction splits off leaf blocks at cut vertices, contracts an outer
edge lying in no triangle, or 3-colors the 2-tree completion directly. It is
driven by an explicit work stack so deep inputs do not hit the recursion limit.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from ..graph.blocks import blocks, is_biconnected
from ..graph.contraction import ContractionMap, contract_matching
from ..graph.core import (
    Graph,
    VertexSet,
    cycle_order,
    induced_subgraph,
    is_connected,
    is_cycle_graph,
    is_induced_forest,
    least,
    twin_edges,
)
from ..logger import get_logger
from ..utils.error_handler import PreconditionError, VerificationError
from .completion import TwoTreeCompletion, complete_to_2tree, degree_two_elimination, find_contractible_edge

logger = get_logger(__name__)

COLORS = (1, 2, 3)


@dataclass(frozen=True)
class GoodColoring:
    """A verified good coloring; colors[v] ∈ {1, 2, 3}."""
    graph_hash: str
    colors: tuple[int, ...]

    def forest(self, i: int) -> VertexSet:
        """Vertex set of F_i, the vertices not colored i."""
        mask = 0
        for v, c in enumerate(self.colors):
            if c != i:
                mask |= 1 << v
        return mask

    @property
    def forests(self) -> tuple[VertexSet, VertexSet, VertexSet]:
        return tuple(self.forest(i) for i in COLORS)


def check_good_coloring(g: Graph, colors: Sequence[int]) -> list[str]:
    """Violations of the three good-coloring conditions; empty when c is good."""
    if len(colors) != g.n or any(c not in COLORS for c in colors):
        return ["coloring must assign a color in {1, 2, 3} to every vertex"]
    out = []
    for i in COLORS:
        mask = sum(1 << v for v, c in enumerate(colors) if c != i)
        check = is_induced_forest(g, mask)
        if not check:
            out.append(f"F_{i} contains a cycle")
        for info in check.components:
            if info.size == 1:
                out.append(f"F_{i} has an isolated vertex {least(info.vertices)}")
            elif info.size == 2:
                u = least(info.vertices)
                w = least(info.vertices & ~(1 << u))
                if g.closed_row(u) != g.closed_row(w):
                    out.append(f"F_{i} has a single-edge component ({u}, {w}) that is not a twin edge")
    return out


# =========================================================================
# Work-stack frames
# =========================================================================

@dataclass(frozen=True)
class _Solve:
    graph: Graph
    anchor: Optional[int] = None  # cut vertex, when the graph is one side of a split


@dataclass(frozen=True)
class _Merge:
    n: int
    leaf_index: dict[int, int]
    rest_index: dict[int, int]
    cut: int


@dataclass(frozen=True)
class _Lift:
    cmap: ContractionMap


_Frame = Union[_Solve, _Merge, _Lift]


def _anchor_to_one(colors: list[int], v: int) -> list[int]:
    """Swap colors 1 and c(v)."""
    c = colors[v]
    swap = {1: c, c: 1}
    return [swap.get(x, x) for x in colors]


def _c4_template(g: Graph, anchor: int) -> list[int]:
    """1, 2, 3, 3 around the cycle from the anchor; its one K2 component meets the anchor."""
    order = cycle_order(g)
    start = order.index(anchor)
    walk = order[start:] + order[:start]
    colors = [0] * 4
    for v, c in zip(walk, (1, 2, 3, 3)):
        colors[v] = c
    return colors


def _two_tree_coloring(comp: TwoTreeCompletion) -> list[int]:
    """Proper 3-coloring of the 2-tree completion along its construction sequence."""
    colors = [0] * comp.h.n
    for v, c in zip(comp.base, COLORS):
        colors[v] = c
    for v, (a, b) in comp.sequence:
        colors[v] = 6 - colors[a] - colors[b]
    return colors


def _twin_after_contraction(
    g: Graph, cmap: ContractionMap, edge: tuple[int, int], twin: tuple[int, int]
) -> list[int]:
    """Direct coloring when G / uw is a fan of triangles on the twin edge xy."""
    u, w = edge
    vm = cmap.merged_vertex(edge)

    def orig(z: int) -> int:
        return cmap.members(z)[0]

    x, y = twin
    colors = [3] * g.n
    if vm in twin:
        if vm == x:
            x, y = y, x
        colors[orig(x)] = 1
        colors[u] = colors[w] = 2
    else:
        ox, oy = orig(x), orig(y)
        if not g.has_edge(u, ox):
            u, w = w, u
        colors[ox] = colors[u] = 1
        colors[oy] = 2
    return colors


def _plan(frame: _Solve) -> Union[list[int], list[_Frame]]:
    """Either a finished coloring or the frames to push, in push order."""
    g = frame.graph
    if g.n == 2:
        return [1, 1]
    if frame.anchor is not None and is_cycle_graph(g, 4):
        return _c4_template(g, frame.anchor)

    if not is_biconnected(g):
        decomposition = blocks(g)
        leaf = min(decomposition.leaf_blocks(), key=least)
        cut = decomposition.cut_vertex_of(leaf)
        rest = g.vertex_mask & ~(leaf & ~(1 << cut))
        g_leaf, leaf_index = induced_subgraph(g, leaf)
        g_rest, rest_index = induced_subgraph(g, rest)
        logger.debug(f"splitting {g!r} at cut vertex {cut}")
        return [
            _Merge(g.n, leaf_index, rest_index, cut),
            _Solve(g_leaf, leaf_index[cut]),
            _Solve(g_rest, rest_index[cut]),
        ]

    comp = complete_to_2tree(g)
    if comp is None:
        raise VerificationError("2-connected piece lost its tree-width bound", {"graph": g.graph_hash})
    edge = find_contractible_edge(g, comp)
    if edge is None:
        return _two_tree_coloring(comp)

    contracted, cmap = contract_matching(g, [edge])
    if is_cycle_graph(contracted, 4):
        colors = [0] * g.n
        for v, c in zip(cycle_order(g), (1, 1, 2, 2, 3)):
            colors[v] = c
        return colors
    twins = twin_edges(contracted)
    if twins:
        return _twin_after_contraction(g, cmap, edge, twins[0])
    return [_Lift(cmap), _Solve(contracted)]


def good_coloring(g: Graph) -> GoodColoring:
    """
    Compute and verify a good coloring.

    Args:
        g: connected graph with at least one edge and tree-width at most 2, not C4

    Returns:
        GoodColoring whose forests satisfy the three conditions

    Raises:
        PreconditionError: g violates the input conditions
        VerificationError: the construction produced a bad coloring
    """
    if g.m == 0 or not is_connected(g):
        raise PreconditionError("good coloring needs a connected graph with an edge")
    if degree_two_elimination(g) is None:
        raise PreconditionError("good coloring needs tree-width at most 2", {"graph": g.graph_hash})
    if is_cycle_graph(g, 4):
        raise PreconditionError("C4 has no good coloring")

    results: list[list[int]] = []
    stack: list[_Frame] = [_Solve(g)]
    while stack:
        frame = stack.pop()
        if isinstance(frame, _Solve):
            step = _plan(frame)
            if step and isinstance(step[0], int):
                results.append(step)
            else:
                stack.extend(step)
        elif isinstance(frame, _Merge):
            leaf_colors = _anchor_to_one(results.pop(), frame.leaf_index[frame.cut])
            rest_colors = _anchor_to_one(results.pop(), frame.rest_index[frame.cut])
            merged = [0] * frame.n
            for old, new in frame.rest_index.items():
                merged[old] = rest_colors[new]
            for old, new in frame.leaf_index.items():
                merged[old] = leaf_colors[new]
            results.append(merged)
        else:
            inner = results.pop()
            results.append([inner[c] for c in frame.cmap.class_of])

    colors = results.pop()
    violations = check_good_coloring(g, colors)
    if violations:
        raise VerificationError(
            f"good coloring check failed: {violations[0]}",
            {"graph": g.graph_hash, "violations": violations},
        )
    return GoodColoring(graph_hash=g.graph_hash, colors=tuple(colors))
