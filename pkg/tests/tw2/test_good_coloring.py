"""
Tests for good 3-colorings and the tree-width-2 cover
"""

import pytest
from hypothesis import assume, given, settings

from src.families.generators import saw_graph, triangle_with_pendants
from src.graph.core import build_graph, is_cycle_graph
from src.oracle.cover import verify_cover
from src.oracle.fk import exact_f_k
from src.tw2.coloring import check_good_coloring, good_coloring
from src.tw2.cover import cover_2valid_tw2
from src.utils.error_handler import PreconditionError
from tests.strategies import complete_graph, cycle_graph, partial_2trees, path_graph, star_graph


class TestCheckGoodColoring:
    """Test the good-coloring conditions"""

    def test_triangle_rainbow(self):
        """Should accept a rainbow triangle since every pair is a twin edge"""
        assert check_good_coloring(complete_graph(3), [1, 2, 3]) == []

    def test_non_twin_single_edge(self):
        """Should reject a single-edge component that is not a twin edge"""
        violations = check_good_coloring(path_graph(3), [1, 2, 3])
        assert any("not a twin edge" in v for v in violations)

    def test_isolated_vertex(self):
        """Should reject single-vertex components"""
        violations = check_good_coloring(path_graph(3), [1, 1, 2])
        assert any("isolated vertex" in v for v in violations)

    def test_cycle(self):
        """Should reject a forest containing a cycle"""
        assert any("cycle" in v for v in check_good_coloring(cycle_graph(5), [1, 1, 1, 1, 1]))

    def test_bad_palette(self):
        """Should reject colors outside 1..3"""
        assert check_good_coloring(path_graph(2), [0, 1])


class TestGoodColoring:
    """Test the good-coloring construction"""

    @pytest.mark.parametrize("g", [
        path_graph(2),
        path_graph(3),
        path_graph(6),
        star_graph(4),
        complete_graph(3),
        cycle_graph(3),
        cycle_graph(5),
        cycle_graph(6),
        build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]),
        triangle_with_pendants(),
        saw_graph(3),
    ])
    def test_known_graphs(self, g):
        """Should produce a coloring passing every condition"""
        coloring = good_coloring(g)
        assert check_good_coloring(g, coloring.colors) == []
        assert len(coloring.forests) == 3

    def test_c4_rejected(self):
        """Should reject C4, which has no good coloring"""
        with pytest.raises(PreconditionError):
            good_coloring(cycle_graph(4))

    def test_treewidth_three_rejected(self):
        """Should reject K4"""
        with pytest.raises(PreconditionError):
            good_coloring(complete_graph(4))

    def test_disconnected_rejected(self):
        """Should reject disconnected and edgeless graphs"""
        with pytest.raises(PreconditionError):
            good_coloring(build_graph(4, [(0, 1), (2, 3)]))
        with pytest.raises(PreconditionError):
            good_coloring(build_graph(1, []))

    @given(partial_2trees(min_n=2, max_n=14))
    @settings(max_examples=80, deadline=None)
    def test_random_partial_2trees(self, g):
        """Should color every connected partial 2-tree except C4"""
        assume(not is_cycle_graph(g, 4))
        coloring = good_coloring(g)
        assert check_good_coloring(g, coloring.colors) == []


class TestTw2Cover:
    """Test 2-strong covers with at most three forests"""

    def test_c4_uses_two_paths(self):
        """Should cover C4 with two 3-vertex paths"""
        g = cycle_graph(4)
        cover = cover_2valid_tw2(g)
        assert cover.size == 2
        assert exact_f_k(g, 2).value == 2

    def test_triangle_with_pendants_needs_three(self):
        """Should meet the optimum of three"""
        cover = cover_2valid_tw2(triangle_with_pendants())
        assert cover.size == 3

    def test_treewidth_three_rejected(self):
        """Should reject K4"""
        with pytest.raises(PreconditionError):
            cover_2valid_tw2(complete_graph(4))

    def test_disconnected(self):
        """Should merge covers of C4 and P3 components index-wise"""
        g = build_graph(7, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6)])
        cover = cover_2valid_tw2(g)
        assert cover.size <= 3
        assert verify_cover(g, cover).valid

    def test_no_valid_edges(self):
        """Should return an empty cover when nothing is 2-valid"""
        assert cover_2valid_tw2(complete_graph(3)).size == 0

    @given(partial_2trees(min_n=2, max_n=14))
    @settings(max_examples=60, deadline=None)
    def test_random_covers(self, g):
        """Should stay within three forests and verify"""
        cover = cover_2valid_tw2(g)
        assert cover.size <= 3
        assert verify_cover(g, cover).valid
