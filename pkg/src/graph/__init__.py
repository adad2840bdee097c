"""
Graph core: immutable bitset graphs, induced subgraphs, contractions, blocks
"""
from .blocks import BlockDecomposition, blocks, is_biconnected
from .coloring import Coloring, color_class_masks, is_acyclic_coloring, is_proper
from .contraction import ContractionMap, check_matching, contract_matching, is_induced_matching
from .elimination import EliminationTree, dfs_elimination_forest
from .core import (
    DEFAULT_MAX_VERTICES,
    ComponentInfo,
    Edge,
    ForestCheck,
    Graph,
    VertexSet,
    as_mask,
    bits,
    build_graph,
    component_of,
    components,
    cycle_order,
    empty_graph,
    graph_from_rows,
    induced_subgraph,
    is_connected,
    is_cycle_graph,
    is_induced_forest,
    least,
    lift_mask,
    mask_of,
    members,
    normalize_edge,
    twin_edges,
)
from .io import format_edge_list, parse_edge_list, read_edge_list, to_dot, write_edge_list

__all__ = [
    'DEFAULT_MAX_VERTICES',
    'BlockDecomposition',
    'Coloring',
    'ComponentInfo',
    'ContractionMap',
    'Edge',
    'EliminationTree',
    'ForestCheck',
    'Graph',
    'VertexSet',
    'as_mask',
    'bits',
    'blocks',
    'build_graph',
    'check_matching',
    'color_class_masks',
    'component_of',
    'components',
    'contract_matching',
    'cycle_order',
    'dfs_elimination_forest',
    'empty_graph',
    'format_edge_list',
    'graph_from_rows',
    'induced_subgraph',
    'is_acyclic_coloring',
    'is_biconnected',
    'is_connected',
    'is_cycle_graph',
    'is_induced_forest',
    'is_induced_matching',
    'is_proper',
    'least',
    'lift_mask',
    'mask_of',
    'members',
    'normalize_edge',
    'parse_edge_list',
    'read_edge_list',
    'to_dot',
    'twin_edges',
    'write_edge_list',
]
