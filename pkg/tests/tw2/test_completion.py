"""
Tests for 2-tree completions and their structural properties
"""

import pytest
from hypothesis import assume, given, settings

from src.graph.core import build_graph, empty_graph
from src.tw2.completion import complete_to_2tree, find_contractible_edge, has_treewidth_at_most_two
from src.tw2.properties import check_completion_properties, identify
from src.utils.error_handler import PreconditionError
from tests.strategies import biconnected_partial_2trees, complete_graph, cycle_graph, partial_2trees, path_graph


class TestCompletion:
    """Test 2-tree completion"""

    def test_c5_gets_two_chords(self):
        """Should triangulate C5 with two fill edges"""
        g = cycle_graph(5)
        comp = complete_to_2tree(g)
        assert comp.h.m - g.m == 2
        assert set(g.edges) <= set(comp.h.edges)
        assert set(comp.outer) == set(g.edges)
        assert len(comp.inner) == 2

    def test_k4_has_no_completion(self):
        """Should return None for tree-width 3"""
        assert complete_to_2tree(complete_graph(4)) is None
        assert not has_treewidth_at_most_two(complete_graph(4))

    def test_precondition(self):
        """Should reject disconnected or tiny graphs"""
        with pytest.raises(PreconditionError):
            complete_to_2tree(path_graph(2))
        with pytest.raises(PreconditionError):
            complete_to_2tree(build_graph(4, [(0, 1), (2, 3)]))

    def test_triangles_cover_every_edge(self):
        """Should list n-2 triangles of a 2-tree"""
        comp = complete_to_2tree(path_graph(5))
        assert len(comp.triangles) == 3
        assert comp.h.m == 2 * 5 - 3
        assert all(count >= 1 for count in comp.triangle_count.values())

    def test_contractible_edge_in_c5(self):
        """Should find an outer edge of C5 lying in no triangle"""
        g = cycle_graph(5)
        comp = complete_to_2tree(g)
        edge = find_contractible_edge(g, comp)
        assert edge in comp.outer
        assert g.has_edge(*edge)

    def test_no_contractible_edge_in_triangle(self):
        """Should find nothing when every edge lies in a triangle"""
        g = complete_graph(3)
        assert find_contractible_edge(g, complete_to_2tree(g)) is None

    @given(partial_2trees(max_n=12))
    @settings(max_examples=50, deadline=None)
    def test_completion_is_2tree(self, g):
        """Should add edges only, up to 2n-3 in total"""
        assume(g.n >= 3)
        comp = complete_to_2tree(g)
        assert comp is not None
        assert set(g.edges) <= set(comp.h.edges)
        assert comp.h.m == 2 * g.n - 3
        assert len(comp.triangles) == g.n - 2


class TestProperties:
    """Test structural checks on 2-connected inputs"""

    def test_identify(self):
        """Should merge two vertices and drop the loop"""
        merged = identify(cycle_graph(4), 0, 2)
        assert merged.n == 3
        assert merged.edges == ((0, 1), (0, 2))

    def test_c5_passes(self):
        """Should find no violations on C5"""
        assert check_completion_properties(complete_to_2tree(cycle_graph(5))).ok

    def test_needs_biconnected(self):
        """Should reject graphs with a cut vertex"""
        with pytest.raises(PreconditionError):
            check_completion_properties(complete_to_2tree(path_graph(4)))

    def test_twin_edge_structure(self):
        """Should accept triangles sharing a twin edge"""
        g = build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
        report = check_completion_properties(complete_to_2tree(g))
        assert report.ok
        assert report.violations["twin_edge_structure"] == []

    @given(biconnected_partial_2trees(min_n=4, max_n=11))
    @settings(max_examples=60, deadline=None)
    def test_random_biconnected(self, g):
        """Should hold on every 2-connected partial 2-tree"""
        comp = complete_to_2tree(g)
        assert comp is not None
        report = check_completion_properties(comp)
        assert report.ok, report.violations

    def test_empty_graph_has_treewidth_zero(self):
        """Should accept graphs with no edges"""
        assert has_treewidth_at_most_two(empty_graph(4))
