"""
Exact oracles: f_k, tree-depth, (acyclic) chromatic number, arboricity,
distinguishing labelings, and cover verification
"""
from .arboricity import min_forest_partition, nash_williams_arboricity
from .candidates import enumerate_candidate_forests, maximal_induced_forests
from .coloring import (
    SandwichVerdict,
    acyclic_coloring_from_cover,
    check_acyclic_sandwich,
    exact_acyclic_chromatic,
    exact_chromatic,
)
from .cover import (
    CoverVerdict,
    ExactResult,
    ForestCover,
    merge_index_wise,
    require_valid_cover,
    verify_cover,
)
from .distinguishing import DisBoundVerdict, check_dis_bound, exact_dis
from .fk import bound_f_k, exact_f_k
from .treedepth import TreeDepthSolver, exact_tree_depth

__all__ = [
    'CoverVerdict',
    'DisBoundVerdict',
    'ExactResult',
    'ForestCover',
    'SandwichVerdict',
    'TreeDepthSolver',
    'acyclic_coloring_from_cover',
    'bound_f_k',
    'check_acyclic_sandwich',
    'check_dis_bound',
    'enumerate_candidate_forests',
    'exact_acyclic_chromatic',
    'exact_chromatic',
    'exact_dis',
    'exact_f_k',
    'exact_tree_depth',
    'maximal_induced_forests',
    'merge_index_wise',
    'min_forest_partition',
    'nash_williams_arboricity',
    'require_valid_cover',
    'verify_cover',
]
