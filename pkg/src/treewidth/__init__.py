"""
General tree-width: exact elimination search, t-tree colorings, color-class covers
"""
from .cover import cover_f1_tw, cover_f2_tw
from .elimination import (
    TTreeColoring,
    exact_treewidth,
    fill_in,
    min_fill_order,
    minor_min_width,
    t_tree_coloring,
    treewidth_at_most,
)

__all__ = [
    'TTreeColoring',
    'cover_f1_tw',
    'cover_f2_tw',
    'exact_treewidth',
    'fill_in',
    'min_fill_order',
    'minor_min_width',
    't_tree_coloring',
    'treewidth_at_most',
]
