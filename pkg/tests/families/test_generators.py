"""
Tests for the deterministic family constructions and seeded random graphs
"""

import random
from collections import Counter
from itertools import combinations
from math import comb

import networkx as nx
import pytest

from src.families.generators import (
    balanced_orientation,
    clique_plus_tail,
    pendant_double_subdivided_complete,
    pendant_double_subdivided_cover,
    saw_graph,
    subdivided_biclique,
    subdivided_complete,
    subdivided_complete_split,
    td3_extremal,
    td3_extremal_cover,
    triangle_with_pendants,
    wheel,
    wheel_cover,
)
from src.families.random_graphs import random_gnp, random_partial_2tree, random_planar_graph, random_td_graph
from src.graph.core import is_connected
from src.oracle.cover import ForestCover, verify_cover
from src.oracle.treedepth import exact_tree_depth
from src.tw2.completion import has_treewidth_at_most_two
from src.utils.error_handler import InputError, PreconditionError
from src.validity.witness import k_valid_edges


class TestWheel:
    """Test wheels and their reference cover"""

    def test_shape(self):
        """Should have a center joined to every rim vertex"""
        g = wheel(7)
        assert (g.n, g.m) == (8, 14)
        assert g.degree(0) == 7
        assert all(g.degree(v) == 3 for v in range(1, 8))

    def test_too_small(self):
        """Should reject rims shorter than 3"""
        with pytest.raises(InputError):
            wheel(2)
        with pytest.raises(InputError):
            wheel_cover(5)

    @pytest.mark.parametrize("c", [6, 7, 8, 9, 10, 11])
    def test_reference_cover(self, c):
        """Should verify at k=3 with four forests for even rims and five for odd"""
        g = wheel(c)
        cover = ForestCover.from_masks(g, 3, wheel_cover(c))
        assert verify_cover(g, cover).valid
        assert cover.size == (5 if c % 2 else 4)


class TestSubdivisions:
    """Test subdivided complete graphs"""

    def test_subdivided_complete(self):
        """Should place one vertex on each pair"""
        g = subdivided_complete(4)
        assert (g.n, g.m) == (10, 12)
        assert all(g.degree(v) == 3 for v in range(4))
        assert all(g.degree(v) == 2 for v in range(4, 10))

    def test_split_partitions_edges(self):
        """Should split the edges into two star forests"""
        g = subdivided_complete(5)
        low, high = subdivided_complete_split(5)
        assert sorted(low + high) == sorted(g.edges)
        assert nx.is_forest(nx.Graph(low))
        assert nx.is_forest(nx.Graph(high))

    def test_pendant_shape(self):
        """Should count t + C(t,2)(k+1) vertices and C(t,2)(k+2) edges"""
        g = pendant_double_subdivided_complete(6, 2)
        assert g.n == 6 + comb(6, 2) * 3
        assert g.m == comb(6, 2) * 4

    def test_pendant_every_edge_strongly_valid(self):
        """Should make every edge k- and (k+1)-valid"""
        g = pendant_double_subdivided_complete(6, 2)
        assert len(k_valid_edges(g, 2)) == g.m
        assert len(k_valid_edges(g, 3)) == g.m

    def test_pendant_cover(self):
        """Should cover with three forests when t >= 2k+2"""
        g = pendant_double_subdivided_complete(6, 2)
        cover = ForestCover.from_masks(g, 2, pendant_double_subdivided_cover(6, 2))
        assert verify_cover(g, cover).valid
        assert cover.size == 3

    def test_pendant_cover_precondition(self):
        """Should reject t < 2k+2"""
        with pytest.raises(PreconditionError):
            pendant_double_subdivided_cover(5, 2)

    @pytest.mark.parametrize("t", [3, 4, 5, 6, 7, 8])
    def test_balanced_orientation(self, t):
        """Should orient every pair once with in- and out-degree at least (t-2)//2"""
        arcs = balanced_orientation(t)
        assert sorted(tuple(sorted(a)) for a in arcs) == list(combinations(range(t), 2))
        out = Counter(u for u, _ in arcs)
        into = Counter(v for _, v in arcs)
        for v in range(t):
            assert out[v] >= (t - 2) // 2
            assert into[v] >= (t - 2) // 2


class TestSmallFamilies:
    """Test the small extremal constructions"""

    def test_clique_plus_tail(self):
        """Should attach a k-1 edge path to the clique"""
        g = clique_plus_tail(3, 2)
        assert (g.n, g.m) == (5, comb(4, 2) + 1)
        assert k_valid_edges(g, 3) == []

    def test_saw(self):
        """Should build 4k-1 vertices and 3(2k-1) edges"""
        g = saw_graph(2)
        assert (g.n, g.m) == (7, 9)
        assert has_treewidth_at_most_two(g)

    def test_subdivided_biclique(self):
        """Should cover with two induced trees at k = n^2 + n"""
        g, t1, t2 = subdivided_biclique(2)
        assert (g.n, g.m) == (8, 8)
        k = 2 * 2 + 2
        cover = ForestCover.from_masks(g, k, [t1, t2])
        assert verify_cover(g, cover).valid
        assert k_valid_edges(g, k + 1) == []

    def test_subdivided_biclique_strength_limit(self):
        """Should stop being a cover one step past the trees' edge count"""
        g, t1, t2 = subdivided_biclique(3)
        assert (g.n, g.m) == (15, 18)
        assert verify_cover(g, ForestCover.from_masks(g, 12, [t1, t2])).valid
        assert not verify_cover(g, ForestCover.from_masks(g, 13, [t1, t2])).valid

    def test_triangle_with_pendants(self):
        """Should have six vertices and six edges, all 2-valid"""
        g = triangle_with_pendants()
        assert (g.n, g.m) == (6, 6)
        assert len(k_valid_edges(g, 2)) == 6

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_td3_extremal(self, k):
        """Should have tree-depth 3 and a cover with k-1 forests"""
        g = td3_extremal(k)
        assert exact_tree_depth(g).value == 3
        cover = ForestCover.from_masks(g, k, td3_extremal_cover(k))
        assert verify_cover(g, cover).valid
        assert cover.size == k - 1


class TestRandomGraphs:
    """Test seeded random instances"""

    def test_partial_2tree(self, rng):
        """Should give connected graphs of tree-width at most 2"""
        for n in range(2, 20):
            g = random_partial_2tree(n, rng)
            assert g.n == n
            assert is_connected(g)
            assert has_treewidth_at_most_two(g)

    def test_partial_2tree_reproducible(self):
        """Should repeat for equal seeds"""
        assert random_partial_2tree(12, random.Random(5)) == random_partial_2tree(12, random.Random(5))

    def test_td_graph(self, rng):
        """Should return a connected graph certified by a tree of depth at most d"""
        for _ in range(30):
            d = rng.randint(2, 5)
            n = rng.randint(d, 14)
            g, tree = random_td_graph(n, d, rng)
            assert tree.is_valid_for(g)
            assert tree.depth <= d
            assert is_connected(g)

    def test_td_graph_star_rooted(self, rng):
        """Should give the root a single child on request"""
        g, tree = random_td_graph(10, 4, rng, star_rooted=True)
        assert tree.is_star_rooted
        assert tree.is_valid_for(g)

    @pytest.mark.parametrize("n, d, star", [(0, 2, False), (3, 1, False), (4, 2, True)])
    def test_td_graph_bad_arguments(self, rng, n, d, star):
        """Should reject impossible size and depth combinations"""
        with pytest.raises(InputError):
            random_td_graph(n, d, rng, star_rooted=star)

    def test_planar(self, rng):
        """Should stay planar"""
        for n in (1, 5, 12, 20):
            g = random_planar_graph(n, rng)
            assert g.n == n
            assert g.m <= max(3 * n - 6, n - 1)
            assert nx.check_planarity(g.to_networkx())[0]

    def test_gnp(self, rng):
        """Should keep every vertex"""
        g = random_gnp(9, 0.4, rng)
        assert g.n == 9
        assert random_gnp(6, 1.0, rng).m == comb(6, 2)
