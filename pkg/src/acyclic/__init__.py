"""
Acyclic-coloring pipeline: pair forests, matching contraction, un-contraction, both f_2 routes
"""
from .matchings import decompose_into_matchings, edge_coloring_with, greedy_edge_coloring
from .pipeline import ROUTES, RouteResult, cover_f2_acyclic, run_acyclic_routes
from .split import PairPart, PairSplit, cover_f1_acyclic, optimal_acyclic_coloring, pair_split
from .uncontract import Uncontraction, uncontract_forest_pair

__all__ = [
    'PairPart',
    'PairSplit',
    'ROUTES',
    'RouteResult',
    'Uncontraction',
    'cover_f1_acyclic',
    'cover_f2_acyclic',
    'decompose_into_matchings',
    'edge_coloring_with',
    'greedy_edge_coloring',
    'optimal_acyclic_coloring',
    'pair_split',
    'run_acyclic_routes',
    'uncontract_forest_pair',
]
