"""
Immutable simple undirected graphs over vertices 0..n-1.

Vertex sets are plain ints used as bitsets (bit v set <=> v is a member); each
graph keeps one adjacency bitset per vertex so neighborhood and induced-subgraph
questions reduce to word operations.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import networkx as nx

from ..utils.error_handler import InputError

Edge = tuple[int, int]
VertexSet = int

DEFAULT_MAX_VERTICES = 64


# =========================================================================
# Bitset helpers
# =========================================================================

def bits(mask: VertexSet) -> Iterator[int]:
    """Members of `mask` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: VertexSet) -> list[int]:
    return list(bits(mask))


def mask_of(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def as_mask(s: VertexSet | Iterable[int]) -> VertexSet:
    """Accept either a bitset or an iterable of vertices."""
    if isinstance(s, int):
        return s
    return mask_of(s)


def least(mask: VertexSet) -> int:
    return (mask & -mask).bit_length() - 1


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# =========================================================================
# Graph
# =========================================================================

@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph.

    Equality and hashing use (n, edges); `rows[v]` is the neighborhood bitset
    of v. Build instances with build_graph() rather than directly.
    """
    n: int
    edges: tuple[Edge, ...]
    rows: tuple[int, ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertex_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    @cached_property
    def graph_hash(self) -> str:
        """Canonical hash of the edge-list form; identifies the graph in certificates."""
        text = f"{self.n} {self.m}\n" + "".join(f"{u} {v}\n" for u, v in self.edges)
        return hashlib.sha256(text.encode("ascii")).hexdigest()[:16]

    def neighbors(self, v: int) -> list[int]:
        return members(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def closed_row(self, v: int) -> VertexSet:
        """N[v] as a bitset."""
        return self.rows[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.rows), default=0)

    def edges_within(self, mask: VertexSet) -> list[Edge]:
        """Edges of g[mask], lexicographic."""
        out = []
        for u in bits(mask):
            for v in bits(self.rows[u] & mask & ~((2 << u) - 1)):
                out.append((u, v))
        return out

    def edge_count_within(self, mask: VertexSet) -> int:
        return sum((self.rows[u] & mask).bit_count() for u in bits(mask)) // 2

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges)
        return h

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, hash={self.graph_hash})"


def build_graph(
    n: int,
    pairs: Iterable[Sequence[int]],
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> Graph:
    """
    Build a canonical graph.

    Duplicate and reversed pairs collapse to one edge.

    Raises:
        InputError: negative n, n above the cap, a self-loop or an index out of range
    """
    if n < 0:
        raise InputError(f"vertex count must be nonnegative, got {n}")
    if n > max_vertices:
        raise InputError(
            f"graph has {n} vertices, above the cap of {max_vertices}",
            {"n": n, "max_vertices": max_vertices},
        )
    rows = [0] * n
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) has an index outside 0..{n - 1}", {"edge": (u, v)})
        if u == v:
            raise InputError(f"self-loop at vertex {u}", {"edge": (u, v)})
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return graph_from_rows(rows)


def graph_from_rows(rows: Sequence[int]) -> Graph:
    """Graph from symmetric, loop-free adjacency bitsets."""
    rows = tuple(rows)
    edges = []
    for u, row in enumerate(rows):
        for v in bits(row >> (u + 1)):
            edges.append((u, u + 1 + v))
    return Graph(n=len(rows), edges=tuple(edges), rows=rows)


def empty_graph(n: int) -> Graph:
    return graph_from_rows([0] * n)


# =========================================================================
# Derived structures
# =========================================================================

def induced_subgraph(g: Graph, s: VertexSet | Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """
    g[s] with vertices renumbered densely in increasing order.

    Returns:
        (subgraph, index map old -> new)
    """
    mask = as_mask(s)
    if mask >> g.n:
        raise InputError("vertex set contains indices outside the graph", {"n": g.n})
    old = members(mask)
    index = {v: i for i, v in enumerate(old)}
    rows = []
    for v in old:
        row = 0
        for w in bits(g.rows[v] & mask):
            row |= 1 << index[w]
        rows.append(row)
    return graph_from_rows(rows), index


def lift_mask(local: VertexSet, index: dict[int, int]) -> VertexSet:
    """Map a vertex set of an induced subgraph back through its old -> new index."""
    old_of = {new: old for old, new in index.items()}
    out = 0
    for v in bits(local):
        out |= 1 << old_of[v]
    return out


def component_of(g: Graph, v: int, within: VertexSet | None = None) -> VertexSet:
    """Vertex set of the component of g[within] containing v."""
    allowed = g.vertex_mask if within is None else within
    seen = 1 << v
    frontier = seen
    while frontier:
        reach = 0
        for u in bits(frontier):
            reach |= g.rows[u]
        frontier = reach & allowed & ~seen
        seen |= frontier
    return seen


def components(g: Graph, within: VertexSet | None = None) -> list[VertexSet]:
    """Connected components of g[within], ordered by least member."""
    remaining = g.vertex_mask if within is None else within
    out = []
    while remaining:
        comp = component_of(g, least(remaining), remaining)
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(g: Graph, within: VertexSet | None = None) -> bool:
    mask = g.vertex_mask if within is None else within
    if mask == 0:
        return True
    return component_of(g, least(mask), mask) == mask


@dataclass(frozen=True)
class ComponentInfo:
    vertices: VertexSet
    edge_count: int

    @property
    def size(self) -> int:
        return self.vertices.bit_count()

    @property
    def is_tree(self) -> bool:
        return self.edge_count == self.size - 1


@dataclass(frozen=True)
class ForestCheck:
    """Outcome of is_induced_forest: acyclicity plus the component decomposition."""
    is_forest: bool
    components: tuple[ComponentInfo, ...]

    def __bool__(self) -> bool:
        return self.is_forest


def is_induced_forest(g: Graph, s: VertexSet | Iterable[int]) -> ForestCheck:
    """Whether g[s] is acyclic, with per-component edge counts."""
    mask = as_mask(s)
    infos = tuple(
        ComponentInfo(comp, g.edge_count_within(comp)) for comp in components(g, mask)
    )
    return ForestCheck(all(info.is_tree for info in infos), infos)


def twin_edges(g: Graph) -> list[Edge]:
    """Edges uv with N[u] = N[v]; exactly the edges in no induced 2-edge path."""
    return [(u, v) for u, v in g.edges if g.closed_row(u) == g.closed_row(v)]


def is_cycle_graph(g: Graph, length: int) -> bool:
    """Whether g is the cycle C_length (connected, 2-regular)."""
    return (
        g.n == length
        and g.m == length
        and all(row.bit_count() == 2 for row in g.rows)
        and is_connected(g)
    )


def cycle_order(g: Graph) -> list[int]:
    """Vertices of a cycle graph in walking order from vertex 0 towards its smaller neighbor."""
    order = [0]
    prev, cur = -1, 0
    while True:
        nxt = next(w for w in g.neighbors(cur) if w != prev)
        if nxt == 0:
            return order
        order.append(nxt)
        prev, cur = cur, nxt
