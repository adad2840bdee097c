"""
Tests for tree-depth covers, p-tree-depth colorings and their compositions
"""

from math import comb

import pytest
from hypothesis import given, settings

from src.families.generators import td3_extremal, td3_extremal_cover, wheel
from src.graph.elimination import EliminationTree
from src.oracle.cover import ForestCover, verify_cover
from src.oracle.fk import exact_f_k
from src.oracle.treedepth import exact_tree_depth
from src.treedepth.coloring import (
    cover_td_by_levels,
    cover_via_low_td_coloring,
    level_coloring,
    low_td_composition,
    p_tree_depth_coloring,
)
from src.treedepth.cover import CoverLedger, cover_td, cover_td_with_ledger, td_cover_bound
from src.utils.budget import SearchBudget
from src.utils.error_handler import BudgetExhausted, InputError, PreconditionError
from tests.strategies import complete_graph, cycle_graph, path_graph, star_graph, td_graphs


class TestCoverLedger:
    """Test per-part bookkeeping"""

    def test_part_bounds(self):
        """Should bound the five parts for k=2, d=3"""
        ledger = CoverLedger(root=0, depth=3, k=2, edge_counts=(0,) * 5, forest_counts=(1, 2, 0, 0, 0))
        assert ledger.part_bounds == (1, 16, 16, 6, 7)
        assert ledger.violations() == []
        assert ledger.total == 3

    def test_over_bound(self):
        """Should report a part above its bound"""
        ledger = CoverLedger(root=0, depth=3, k=2, edge_counts=(0,) * 5, forest_counts=(2, 0, 0, 0, 0))
        assert ledger.violations() == ["S1 used 2 forests, bound 1"]


class TestCoverTd:
    """Test the recursive tree-depth cover"""

    def test_extremal_family(self):
        """Should cover td3_extremal within (2k)^3 and match its reference size"""
        for k in (2, 3, 4):
            g = td3_extremal(k)
            tree = exact_tree_depth(g).certificate
            assert tree.depth == 3
            cover = cover_td(g, tree, k)
            assert verify_cover(g, cover).valid
            assert cover.size <= td_cover_bound(k, 3)
            reference = ForestCover.from_masks(g, k, td3_extremal_cover(k))
            assert verify_cover(g, reference).valid
            assert reference.size == k - 1

    def test_extremal_optimum(self):
        """Should need exactly k-1 forests"""
        assert exact_f_k(td3_extremal(2), 2).value == 1
        assert exact_f_k(td3_extremal(3), 3).value == 2

    def test_k1_uses_treewidth_route(self):
        """Should cover a clique edge by edge at k=1"""
        g = complete_graph(4)
        cover = cover_td(g, exact_tree_depth(g).certificate, 1)
        assert cover.size == comb(4, 2)

    def test_shallow_tree(self):
        """Should use one forest when the tree has depth 2"""
        g = star_graph(4)
        tree = EliminationTree({0: None, 1: 0, 2: 0, 3: 0, 4: 0})
        cover = cover_td(g, tree, 2)
        assert cover.size == 1

    def test_tree_must_span(self):
        """Should reject trees missing vertices"""
        with pytest.raises(PreconditionError):
            cover_td(path_graph(3), EliminationTree({0: None, 1: 0}), 2)

    def test_bad_k(self):
        """Should reject k < 1"""
        with pytest.raises(InputError):
            cover_td(path_graph(3), EliminationTree({1: None, 0: 1, 2: 1}), 0)

    def test_ledgers_recorded(self, w7):
        """Should record a ledger for each rooted level it visits"""
        tree = exact_tree_depth(w7).certificate
        cover, ledgers = cover_td_with_ledger(w7, tree, 3)
        assert verify_cover(w7, cover).valid
        assert ledgers
        assert all(not ledger.violations() for ledger in ledgers)

    @given(td_graphs(max_n=9, max_d=4))
    @settings(max_examples=40, deadline=None)
    def test_random_depth_bounded(self, pair):
        """Should stay within (2k)^d forests on random bounded-depth graphs"""
        g, tree = pair
        for k in (2, 3):
            cover = cover_td(g, tree, k)
            assert cover.size <= td_cover_bound(k, tree.depth)
            assert verify_cover(g, cover).valid


class TestPTreeDepthColoring:
    """Test colorings whose small color sets have low tree-depth"""

    def test_level_coloring(self):
        """Should color by depth in the tree"""
        tree = EliminationTree({1: None, 0: 1, 2: 1})
        assert level_coloring(path_graph(3), tree).colors == (1, 0, 1)

    @pytest.mark.parametrize("g, p, expected", [
        (path_graph(4), 1, 2),
        (path_graph(4), 2, 3),
        (cycle_graph(4), 2, 3),
        (star_graph(4), 2, 2),
        (complete_graph(3), 2, 3),
    ])
    def test_known_values(self, g, p, expected):
        """Should find the least number of colors"""
        assert p_tree_depth_coloring(g, p).value == expected

    def test_bad_p(self):
        """Should reject p < 1"""
        with pytest.raises(InputError):
            p_tree_depth_coloring(path_graph(3), 0)


class TestCompositions:
    """Test covers composed over color subsets"""

    def test_low_td_composition(self, c4):
        """Should return a verified cover with its color count and bound"""
        cover, q, bound = low_td_composition(c4, 2)
        assert verify_cover(c4, cover).valid
        assert cover.size <= bound
        assert q >= 3

    def test_wrapper_matches(self, w7):
        """Should return the composition's cover"""
        cover = cover_via_low_td_coloring(w7, 1)
        assert verify_cover(w7, cover).valid

    def test_budget(self, w7):
        """Should raise when the coloring search cannot finish"""
        with pytest.raises(BudgetExhausted):
            low_td_composition(w7, 2, SearchBudget(max_nodes=1))

    def test_by_levels(self):
        """Should compose over level subsets of a deep path tree"""
        g = path_graph(8)
        tree = exact_tree_depth(g).certificate
        cover = cover_td_by_levels(g, tree, 1)
        assert verify_cover(g, cover).valid
        assert cover.size <= td_cover_bound(1, 2) * comb(tree.depth, 2)

    def test_by_levels_shallow(self):
        """Should fall back to cover_td when the tree is shallow"""
        g = star_graph(3)
        tree = EliminationTree({0: None, 1: 0, 2: 0, 3: 0})
        assert cover_td_by_levels(g, tree, 2).size == 1

    def test_wheel_levels_k2(self):
        """Should cover W7 at k=2 through its level subsets"""
        g = wheel(7)
        tree = exact_tree_depth(g).certificate
        cover = cover_td_by_levels(g, tree, 2)
        assert verify_cover(g, cover).valid
