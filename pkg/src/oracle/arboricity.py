"""
Edge arboricity: the Nash-Williams density formula and a direct
forest-partition search to check it against.
"""
from __future__ import annotations

from typing import Optional

from ..graph.core import Graph, is_connected
from ..logger import get_logger
from ..utils.budget import SearchBudget, resolve_budget

logger = get_logger(__name__)


def nash_williams_arboricity(g: Graph) -> int:
    """
    max ⌈|E(H)| / (|V(H)| - 1)⌉ over connected vertex subsets with at least two
    vertices (the induced subgraph is the edge-maximal H on that set); 0 when
    g has no edges.
    """
    if g.m == 0:
        return 0
    best = 1
    for mask in range(1, 1 << g.n):
        size = mask.bit_count()
        if size < 2:
            continue
        edges = g.edge_count_within(mask)
        value = -(-edges // (size - 1))
        if value > best and is_connected(g, mask):
            best = value
    return best


def min_forest_partition(g: Graph, budget: Optional[SearchBudget] = None) -> int:
    """
    Fewest forests (not necessarily induced) partitioning E(g), by backtracking
    edge-to-forest assignments with one union-find per forest.
    """
    budget = resolve_budget(budget, "min_forest_partition")
    if g.m == 0:
        return 0
    edges = list(g.edges)

    def feasible(count: int) -> bool:
        parent = [list(range(g.n)) for _ in range(count)]

        def find(f: int, v: int) -> int:
            while parent[f][v] != v:
                v = parent[f][v]
            return v

        def rec(i: int, used: int) -> bool:
            if i == len(edges):
                return True
            budget.tick()
            u, v = edges[i]
            for f in range(min(used + 1, count)):
                ru, rv = find(f, u), find(f, v)
                if ru == rv:
                    continue
                parent[f][ru] = rv
                if rec(i + 1, max(used, f + 1)):
                    return True
                parent[f][ru] = ru
            return False

        return rec(0, 0)

    count = 1
    while not feasible(count):
        count += 1
    return count
