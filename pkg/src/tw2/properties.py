"""
Structural checks on 2-connected tree-width-2 graphs and their 2-tree completions.

Each check returns a list of human-readable violations; an empty list means
the property holds. The coloring construction relies on all of them, and the
test-suite runs them over random partial 2-trees.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..graph.blocks import is_biconnected
from ..graph.contraction import contract_matching
from ..graph.core import Edge, Graph, components, graph_from_rows, is_connected, twin_edges
from ..utils.error_handler import PreconditionError
from .completion import TwoTreeCompletion


def identify(g: Graph, u: int, w: int) -> Graph:
    """Merge w into u (vertices above w shift down by one), dropping loops."""
    def relabel(x: int) -> int:
        if x == w:
            x = u
        return x - 1 if x > w else x

    rows = [0] * (g.n - 1)
    for a, b in g.edges:
        ra, rb = relabel(a), relabel(b)
        if ra != rb:
            rows[ra] |= 1 << rb
            rows[rb] |= 1 << ra
    return graph_from_rows(rows)


def check_outer_pair_degree(comp: TwoTreeCompletion) -> list[str]:
    """A vertex meeting two outer edges of the same triangle has degree 2 in H."""
    h = comp.h
    outer = set(comp.outer)
    out = []
    for tri in comp.triangles:
        for v in tri:
            a, b = (x for x in tri if x != v)
            if tuple(sorted((v, a))) in outer and tuple(sorted((v, b))) in outer and h.degree(v) != 2:
                out.append(f"vertex {v} has two outer edges in triangle {tri} but degree {h.degree(v)}")
    return out


def check_inner_edge_separates(comp: TwoTreeCompletion) -> list[str]:
    """Deleting both ends of an inner edge disconnects H."""
    h = comp.h
    out = []
    for u, w in comp.inner:
        rest = h.vertex_mask & ~(1 << u) & ~(1 << w)
        if is_connected(h, rest):
            out.append(f"inner edge ({u}, {w}) does not separate H")
    return out


def check_component_attachment(f: Graph) -> list[str]:
    """In a 2-connected graph, each component of F - {u, w} sees both u and w."""
    out = []
    for u, w in combinations(range(f.n), 2):
        rest = f.vertex_mask & ~(1 << u) & ~(1 << w)
        for comp in components(f, rest):
            if not f.rows[u] & comp or not f.rows[w] & comp:
                out.append(f"a component of F - {{{u}, {w}}} misses one of them")
    return out


def check_identification(f: Graph) -> list[str]:
    """F - {u, w} is connected exactly when identifying u and w keeps F 2-connected."""
    out = []
    for u, w in combinations(range(f.n), 2):
        rest = f.vertex_mask & ~(1 << u) & ~(1 << w)
        if is_connected(f, rest) != is_biconnected(identify(f, u, w)):
            out.append(f"identifying {u} and {w} disagrees with connectivity of F - {{{u}, {w}}}")
    return out


def check_outer_edges_present(comp: TwoTreeCompletion) -> list[str]:
    """Every outer edge of H is an edge of G."""
    g = comp.source
    return [f"outer edge {e} is a fill edge" for e in comp.outer if not g.has_edge(*e)]


def check_outer_contractions(comp: TwoTreeCompletion) -> list[str]:
    """Contracting any outer edge leaves G 2-connected."""
    g = comp.source
    out = []
    for e in comp.outer:
        if not g.has_edge(*e):
            continue
        contracted, _ = contract_matching(g, [e])
        if not is_biconnected(contracted):
            out.append(f"G / {e} is not 2-connected")
    return out


def check_twin_edge_structure(g: Graph, twin: Edge) -> list[str]:
    """A twin edge xy forces G to be triangles sharing xy."""
    x, y = twin
    base = (1 << x) | (1 << y)
    return [
        f"vertex {z} is not attached to exactly {{{x}, {y}}}"
        for z in range(g.n)
        if z not in twin and g.rows[z] != base
    ]


@dataclass
class PropertyReport:
    """Violations found per checked property."""
    violations: dict[str, list[str]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())


def check_completion_properties(comp: TwoTreeCompletion) -> PropertyReport:
    """
    Run every applicable check on a completion of a 2-connected graph.

    Raises:
        PreconditionError: the source graph is not 2-connected
    """
    g = comp.source
    if not is_biconnected(g):
        raise PreconditionError("structural checks need a 2-connected graph")
    report = PropertyReport()
    report.violations["outer_pair_degree"] = check_outer_pair_degree(comp)
    report.violations["inner_edge_separates"] = check_inner_edge_separates(comp)
    report.violations["outer_edges_present"] = check_outer_edges_present(comp)
    if g.n >= 4:
        report.violations["component_attachment"] = check_component_attachment(g)
        report.violations["identification"] = check_identification(g)
        report.violations["outer_contractions"] = check_outer_contractions(comp)
    twins = twin_edges(g)
    report.violations["twin_edge_structure"] = [
        msg for twin in twins for msg in check_twin_edge_structure(g, twin)
    ]
    return report
