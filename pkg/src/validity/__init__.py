"""
k-validity: witness trees, k-valid edges, k-strong forests, induced root paths
"""
from .paths import find_root_path, iter_root_paths, root_path_edges
from .witness import (
    WitnessTree,
    find_witness_tree,
    is_k_strong_forest,
    is_k_valid,
    iter_witness_sets,
    k_valid_edges,
    strip_small_components,
    tree_extensions,
)

__all__ = [
    'WitnessTree',
    'find_root_path',
    'find_witness_tree',
    'is_k_strong_forest',
    'is_k_valid',
    'iter_root_paths',
    'iter_witness_sets',
    'k_valid_edges',
    'root_path_edges',
    'strip_small_components',
    'tree_extensions',
]
