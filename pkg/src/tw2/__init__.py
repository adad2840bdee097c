"""
Tree-width 2: 2-tree completions, structural checks, good colorings, 2-strong covers
"""
from .coloring import GoodColoring, check_good_coloring, good_coloring
from .completion import (
    TwoTreeCompletion,
    complete_to_2tree,
    degree_two_elimination,
    find_contractible_edge,
    has_treewidth_at_most_two,
)
from .cover import cover_2valid_tw2
from .properties import PropertyReport, check_completion_properties, identify

__all__ = [
    'GoodColoring',
    'PropertyReport',
    'TwoTreeCompletion',
    'check_completion_properties',
    'check_good_coloring',
    'complete_to_2tree',
    'cover_2valid_tw2',
    'degree_two_elimination',
    'find_contractible_edge',
    'good_coloring',
    'has_treewidth_at_most_two',
    'identify',
]
