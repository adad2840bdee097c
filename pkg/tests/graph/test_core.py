"""
Tests for bitset graphs and their derived structures
"""

import pytest
from hypothesis import given, settings

from src.graph.blocks import blocks, is_biconnected
from src.graph.coloring import is_acyclic_coloring, is_proper, two_coloring_of_forest
from src.graph.contraction import contract_matching, is_induced_matching
from src.graph.core import (
    build_graph,
    components,
    cycle_order,
    induced_subgraph,
    is_connected,
    is_cycle_graph,
    is_induced_forest,
    lift_mask,
    mask_of,
    members,
    twin_edges,
)
from src.graph.elimination import EliminationTree, dfs_elimination_forest
from src.utils.error_handler import GraphMismatchError, InputError, PreconditionError
from tests.strategies import complete_graph, cycle_graph, graphs, path_graph, star_graph


class TestBuildGraph:
    """Test canonical graph construction"""

    def test_duplicates_and_reversals_collapse(self):
        """Should store each edge once with the smaller end first"""
        g = build_graph(3, [(1, 0), (0, 1), (2, 1)])
        assert g.edges == ((0, 1), (1, 2))
        assert g.m == 2

    def test_equal_graphs_share_hash(self):
        """Should give the same hash regardless of input order"""
        a = build_graph(4, [(0, 1), (2, 3)])
        b = build_graph(4, [(3, 2), (1, 0)])
        assert a == b
        assert a.graph_hash == b.graph_hash

    def test_different_graphs_differ_in_hash(self):
        """Should distinguish graphs with different edges"""
        assert path_graph(4).graph_hash != cycle_graph(4).graph_hash

    def test_self_loop_rejected(self):
        """Should reject self-loops"""
        with pytest.raises(InputError):
            build_graph(2, [(1, 1)])

    def test_out_of_range_rejected(self):
        """Should reject an endpoint outside 0..n-1"""
        with pytest.raises(InputError):
            build_graph(2, [(0, 2)])

    def test_vertex_cap(self):
        """Should reject graphs above the vertex cap"""
        with pytest.raises(InputError):
            build_graph(5, [], max_vertices=4)

    def test_degrees_and_neighbors(self):
        """Should expose neighborhoods as sorted lists"""
        g = star_graph(3)
        assert g.neighbors(0) == [1, 2, 3]
        assert g.degree(0) == 3
        assert g.max_degree() == 3
        assert g.has_edge(2, 0)
        assert not g.has_edge(1, 2)

    def test_networkx_export(self):
        """Should export the same vertices and edges to networkx"""
        h = cycle_graph(5).to_networkx()
        assert h.number_of_nodes() == 5
        assert h.number_of_edges() == 5


class TestSubgraphs:
    """Test induced subgraphs and components"""

    def test_induced_subgraph_renumbers(self):
        """Should renumber kept vertices densely and keep induced edges only"""
        g = cycle_graph(5)
        sub, index = induced_subgraph(g, [1, 2, 4])
        assert index == {1: 0, 2: 1, 4: 2}
        assert sub.edges == ((0, 1),)

    def test_lift_mask_inverts_index(self):
        """Should map local vertex sets back to original indices"""
        g = cycle_graph(6)
        _, index = induced_subgraph(g, [0, 3, 5])
        assert members(lift_mask(0b110, index)) == [3, 5]

    def test_components_ordered_by_least_vertex(self):
        """Should list components by least member"""
        g = build_graph(5, [(3, 4), (0, 2)])
        assert components(g) == [mask_of([0, 2]), mask_of([1]), mask_of([3, 4])]
        assert not is_connected(g)
        assert is_connected(g, mask_of([3, 4]))

    def test_empty_set_is_connected(self):
        """Should treat the empty vertex set as connected"""
        assert is_connected(path_graph(3), 0)


class TestForests:
    """Test induced forest recognition"""

    def test_cycle_is_not_forest(self):
        """Should reject a set inducing a cycle"""
        g = cycle_graph(4)
        assert not is_induced_forest(g, g.vertex_mask)
        assert is_induced_forest(g, [0, 1, 2])

    def test_component_report(self):
        """Should report each component with its edge count"""
        check = is_induced_forest(path_graph(5), [0, 1, 3, 4])
        assert check.is_forest
        assert [c.size for c in check.components] == [2, 2]
        assert all(c.is_tree for c in check.components)

    @given(graphs(max_n=7))
    @settings(max_examples=60, deadline=None)
    def test_single_edges_are_forests(self, g):
        """Should accept every edge as an induced forest"""
        for u, v in g.edges:
            assert is_induced_forest(g, [u, v])


class TestTwinEdges:
    """Test twin-edge detection"""

    def test_complete_graph_all_twins(self):
        """Should mark every edge of a clique"""
        g = complete_graph(4)
        assert twin_edges(g) == list(g.edges)

    def test_path_has_no_twins_beyond_k2(self):
        """Should find no twin edge on P3 and one on K2"""
        assert twin_edges(path_graph(3)) == []
        assert twin_edges(path_graph(2)) == [(0, 1)]

    def test_two_triangles_on_an_edge(self):
        """Should find the shared edge of two triangles as the only twin"""
        g = build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
        assert twin_edges(g) == [(0, 1)]


class TestCycles:
    """Test cycle recognition and walking order"""

    def test_cycle_graph(self):
        """Should recognize C_n and reject P_n"""
        assert is_cycle_graph(cycle_graph(5), 5)
        assert not is_cycle_graph(path_graph(5), 5)
        assert not is_cycle_graph(cycle_graph(5), 4)

    def test_cycle_order(self):
        """Should walk from 0 towards its smaller neighbor"""
        g = build_graph(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
        assert cycle_order(g) == [0, 2, 1, 3]


class TestBlocks:
    """Test block decomposition"""

    def test_bowtie(self):
        """Should split two triangles at their shared cut vertex"""
        g = build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
        dec = blocks(g)
        assert dec.blocks == (mask_of([0, 1, 2]), mask_of([2, 3, 4]))
        assert dec.cut_vertices == (2,)
        assert len(dec.leaf_blocks()) == 2
        assert dec.cut_vertex_of(dec.blocks[0]) == 2

    def test_isolated_vertices_are_blocks(self):
        """Should report isolated vertices as single-vertex blocks"""
        dec = blocks(build_graph(3, [(0, 1)]))
        assert dec.blocks == (mask_of([0, 1]), mask_of([2]))

    def test_biconnected(self):
        """Should accept cycles and reject paths and K2"""
        assert is_biconnected(cycle_graph(4))
        assert not is_biconnected(path_graph(4))
        assert not is_biconnected(path_graph(2))


class TestContraction:
    """Test matching contraction"""

    def test_contract_c4_edge(self):
        """Should turn C4 into a triangle"""
        g, cmap = contract_matching(cycle_graph(4), [(1, 0)])
        assert g == complete_graph(3)
        assert cmap.class_of == (0, 0, 1, 2)
        assert cmap.members(0) == (0, 1)
        assert cmap.merged_vertex((0, 1)) == 0
        assert cmap.expand(0b001) == 0b0011

    def test_non_edge_rejected(self):
        """Should reject pairs that are not edges"""
        with pytest.raises(PreconditionError):
            contract_matching(cycle_graph(4), [(0, 2)])

    def test_overlapping_edges_rejected(self):
        """Should reject edges sharing an endpoint"""
        with pytest.raises(PreconditionError):
            contract_matching(path_graph(3), [(0, 1), (1, 2)])

    def test_map_checks_source(self):
        """Should refuse to apply a map to another graph"""
        _, cmap = contract_matching(cycle_graph(4), [(0, 1)])
        cmap.check_source(cycle_graph(4))
        with pytest.raises(GraphMismatchError):
            cmap.check_source(path_graph(4))

    def test_induced_matching(self):
        """Should require no edge between matching edges"""
        assert not is_induced_matching(path_graph(4), [(0, 1), (2, 3)])
        assert is_induced_matching(path_graph(5), [(0, 1), (3, 4)])
        assert not is_induced_matching(path_graph(3), [(0, 1), (1, 2)])


class TestColorings:
    """Test coloring predicates"""

    def test_acyclic_needs_bichromatic_forests(self):
        """Should reject a proper 2-coloring of C4 as acyclic"""
        g = cycle_graph(4)
        assert is_proper(g, [0, 1, 0, 1])
        assert not is_acyclic_coloring(g, [0, 1, 0, 1])
        assert is_acyclic_coloring(g, [0, 1, 0, 2])

    def test_improper_is_not_acyclic(self):
        """Should reject improper colorings"""
        assert not is_acyclic_coloring(path_graph(2), [0, 0])

    def test_two_coloring_of_path(self):
        """Should alternate sides along a path"""
        assert two_coloring_of_forest(path_graph(4), 0b1111) == {0: 0, 1: 1, 2: 0, 3: 1}


class TestEliminationTree:
    """Test rooted certificate forests"""

    def test_levels_and_depth(self):
        """Should count depth in vertices"""
        tree = EliminationTree({1: None, 0: 1, 2: 1})
        assert tree.root == 1
        assert tree.levels == {1: 1, 0: 2, 2: 2}
        assert tree.depth == 2
        assert not tree.is_star_rooted
        assert tree.is_valid_for(path_graph(3))

    def test_rejects_cross_edges(self):
        """Should flag edges between different root paths"""
        tree = EliminationTree({0: None, 1: 0, 2: 0})
        assert tree.problems(path_graph(3))
        with pytest.raises(PreconditionError):
            tree.validate(path_graph(3))

    def test_surgery(self):
        """Should delete roots and inner vertices consistently"""
        tree = EliminationTree({0: None, 1: 0, 2: 1, 3: 1})
        assert tree.is_star_rooted
        assert tree.without_root().roots == (1,)
        assert tree.without_vertex(1).parent == {0: None, 2: 0, 3: 0}
        assert tree.restrict(1).parent == {1: None, 2: 1, 3: 1}
        assert tree.ancestors(3) == mask_of([0, 1])
        assert tree.subtree(1) == mask_of([1, 2, 3])

    @given(graphs(max_n=9))
    @settings(max_examples=60, deadline=None)
    def test_dfs_forest_certifies(self, g):
        """Should always produce a valid certificate"""
        tree = dfs_elimination_forest(g)
        assert tree.is_valid_for(g)
        assert len(tree.roots) == len(components(g))
