"""
Graph families: extremal constructions, their claim ledgers, and seeded random instances
"""
from .generators import (
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
from .random_graphs import random_gnp, random_partial_2tree, random_planar_graph, random_td_graph
from .registry import (
    FAMILIES,
    Claim,
    ClaimResult,
    FamilySpec,
    build_family,
    check_claims,
    family_names,
    parse_family_spec,
)

__all__ = [
    'FAMILIES',
    'Claim',
    'ClaimResult',
    'FamilySpec',
    'balanced_orientation',
    'build_family',
    'check_claims',
    'clique_plus_tail',
    'family_names',
    'parse_family_spec',
    'pendant_double_subdivided_complete',
    'pendant_double_subdivided_cover',
    'random_gnp',
    'random_partial_2tree',
    'random_planar_graph',
    'random_td_graph',
    'saw_graph',
    'subdivided_biclique',
    'subdivided_complete',
    'subdivided_complete_split',
    'td3_extremal',
    'td3_extremal_cover',
    'triangle_with_pendants',
    'wheel',
    'wheel_cover',
]
