"""
Command report types.

Every CLI command builds one of these dictionaries and hands it to the
renderer; with --json it is printed as-is, so the keys are the public
machine-readable format.
"""

from typing import List, Optional, TypedDict


class GraphInfo(TypedDict):
    source: str
    graph_hash: str
    n: int
    m: int


class BoundedValue(TypedDict, total=False):
    """An exact value, or bounds when the search stopped early."""
    value: Optional[int]
    lower: Optional[int]
    upper: Optional[int]
    proof: str  # 'exhausted', 'bound-met', 'unknown', 'skipped'
    note: str


class FkReport(TypedDict, total=False):
    command: str
    graph: GraphInfo
    k: int
    mode: str  # 'exact' or 'bound-only'
    valid_edges: int
    result: BoundedValue
    cover: Optional[dict]
    duration_ms: float


class CoverReport(TypedDict, total=False):
    command: str
    graph: GraphInfo
    k: int
    method: str
    parameters: dict  # t, d, route, q, x: whatever the method used
    size: int
    bound: Optional[int]
    within_bound: bool
    optimum: Optional[BoundedValue]
    cover: dict
    duration_ms: float


class StatsReport(TypedDict, total=False):
    command: str
    graph: GraphInfo
    treewidth: BoundedValue
    tree_depth: BoundedValue
    acyclic_chromatic: BoundedValue
    arboricity: BoundedValue
    twin_edges: List[List[int]]
    valid_edge_counts: dict  # k -> count
    duration_ms: float


class ClaimLine(TypedDict):
    claim: str
    mode: str
    observed: Optional[int]
    holds: Optional[bool]


class GenReport(TypedDict, total=False):
    command: str
    family: str
    graph: GraphInfo
    output: Optional[str]
    claims: List[ClaimLine]


class VerifyReport(TypedDict, total=False):
    command: str
    graph: GraphInfo
    k: int
    forests: int
    valid: bool
    violations: List[str]
    uncovered: List[List[int]]

