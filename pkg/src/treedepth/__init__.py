"""
Tree-depth: underlying trees, almost k-valid edges, the (2k)^d cover and color-subset compositions
"""
from .almost import AlmostValidReport, almost_k_valid_edges, almost_valid_bound, star_almost_valid_bound
from .coloring import (
    cover_td_by_levels,
    cover_via_low_td_coloring,
    level_coloring,
    low_td_composition,
    p_tree_depth_coloring,
)
from .cover import CoverLedger, check_cover_tree, cover_td, cover_td_with_ledger, td_cover_bound
from .trees import (
    BranchTrees,
    derive_branch,
    induced_tree,
    local_tree,
    relabel_tree,
    split_branch,
    underlying_tree,
)

__all__ = [
    'AlmostValidReport',
    'BranchTrees',
    'CoverLedger',
    'almost_k_valid_edges',
    'almost_valid_bound',
    'check_cover_tree',
    'cover_td',
    'cover_td_by_levels',
    'cover_td_with_ledger',
    'cover_via_low_td_coloring',
    'derive_branch',
    'induced_tree',
    'level_coloring',
    'local_tree',
    'low_td_composition',
    'p_tree_depth_coloring',
    'relabel_tree',
    'split_branch',
    'star_almost_valid_bound',
    'td_cover_bound',
    'underlying_tree',
]
