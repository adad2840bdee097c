"""
Named graph families, their expected properties, and oracle re-checks.

A family spec string is `name:p1,p2,...` (for example `wheel:7` or
`clique-tail:3,2`). Every family carries a ledger of claims about its
instances; check_claims() re-establishes them with the exact solvers so an
instance is trusted only after its claims hold.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable, Literal, Optional

from ..graph.core import Graph, VertexSet
from ..logger import get_logger
from ..oracle.arboricity import nash_williams_arboricity
from ..oracle.cover import ForestCover, verify_cover
from ..oracle.fk import exact_f_k
from ..oracle.treedepth import exact_tree_depth
from ..treewidth.elimination import exact_treewidth
from ..utils.budget import SearchBudget
from ..utils.error_handler import InputError
from ..validity.witness import k_valid_edges
from . import generators as gen

logger = get_logger(__name__)

ClaimKind = Literal[
    "vertices", "edges", "f_k", "treewidth", "tree_depth", "arboricity", "valid_edges", "reference_cover"
]
Relation = Literal["==", ">=", "<="]
CheckMode = Literal["arithmetic", "oracle", "construction"]


@dataclass(frozen=True)
class Claim:
    """One expected property of a generated instance."""
    kind: ClaimKind
    expected: int
    relation: Relation = "=="
    k: Optional[int] = None
    mode: CheckMode = "oracle"

    def holds_for(self, observed: int) -> bool:
        if self.relation == ">=":
            return observed >= self.expected
        if self.relation == "<=":
            return observed <= self.expected
        return observed == self.expected

    def describe(self) -> str:
        name = f"{self.kind}(k={self.k})" if self.k is not None else self.kind
        return f"{name} {self.relation} {self.expected}"


@dataclass(frozen=True)
class ClaimResult:
    claim: Claim
    observed: Optional[int]

    @property
    def holds(self) -> Optional[bool]:
        """None when the solver ran out of budget."""
        return None if self.observed is None else self.claim.holds_for(self.observed)


@dataclass(frozen=True)
class _Family:
    builder: Callable[..., Graph]
    arity: int
    claims: Callable[..., list[Claim]]
    reference: Optional[Callable[..., Optional[tuple[int, list[VertexSet]]]]] = None
    usage: str = ""


@dataclass(frozen=True)
class FamilySpec:
    """A family name with integer parameters."""
    name: str
    params: tuple[int, ...] = field(default=())

    def __str__(self) -> str:
        return f"{self.name}:{','.join(map(str, self.params))}" if self.params else self.name

    @property
    def family(self) -> _Family:
        return FAMILIES[self.name]

    def build(self) -> Graph:
        return self.family.builder(*self.params)

    @property
    def claims(self) -> list[Claim]:
        return self.family.claims(*self.params)

    def reference_cover(self) -> Optional[ForestCover]:
        """The construction's own cover of this instance, when it has one."""
        if self.family.reference is None:
            return None
        found = self.family.reference(*self.params)
        if found is None:
            return None
        k, masks = found
        return ForestCover.from_masks(self.build(), k, masks)


# =========================================================================
# Claim ledgers
# =========================================================================

def _arith(kind: ClaimKind, expected: int) -> Claim:
    return Claim(kind, expected, mode="arithmetic")


def _wheel_claims(c: int) -> list[Claim]:
    claims = [_arith("vertices", c + 1), _arith("edges", 2 * c), Claim("treewidth", 3)]
    if c == 7:
        claims += [Claim("f_k", 5, k=k) for k in (1, 2, 3)]
        claims += [Claim("f_k", 2, k=k) for k in (4, 5)]
        claims += [Claim("valid_edges", 14, k=3), Claim("valid_edges", 7, k=4), Claim("valid_edges", 7, k=5)]
        claims.append(Claim("valid_edges", 0, k=6))
    if c >= 6:
        claims.append(Claim("reference_cover", 5 if c % 2 else 4, k=3, mode="construction"))
    return claims


def _wheel_reference(c: int) -> Optional[tuple[int, list[VertexSet]]]:
    return (3, gen.wheel_cover(c)) if c >= 6 else None


def _subdivided_complete_claims(t: int) -> list[Claim]:
    pairs = comb(t, 2)
    claims = [_arith("vertices", t + pairs), _arith("edges", 2 * pairs)]
    if t >= 3:
        claims.append(Claim("arboricity", 2))
    return claims


def _pendant_claims(t: int, k: int) -> list[Claim]:
    pairs = comb(t, 2)
    m = pairs * (k + 2)
    claims = [
        _arith("vertices", t + pairs * (k + 1)),
        _arith("edges", m),
        Claim("valid_edges", m, k=k),
        Claim("valid_edges", m, k=k + 1),
    ]
    if t >= 2 * k + 2:
        claims.append(Claim("reference_cover", 3, k=k, mode="construction"))
    return claims


def _pendant_reference(t: int, k: int) -> Optional[tuple[int, list[VertexSet]]]:
    if t < 2 * k + 2:
        return None
    return k, gen.pendant_double_subdivided_cover(t, k)


def _clique_tail_claims(n: int, k: int) -> list[Claim]:
    return [
        _arith("vertices", n + k),
        _arith("edges", comb(n + 1, 2) + k - 1),
        Claim("f_k", n, ">=", k=k),
        Claim("f_k", 0, k=k + 1),
        Claim("valid_edges", 0, k=k + 1),
    ]


def _saw_claims(k: int) -> list[Claim]:
    return [
        _arith("vertices", 4 * k - 1),
        _arith("edges", 3 * (2 * k - 1)),
        Claim("treewidth", 2),
        Claim("f_k", k, ">=", k=k),
    ]


def _biclique_claims(n: int) -> list[Claim]:
    """The two trees certify k = n² + n, their edge count; one more and nothing is k-valid."""
    claims = [_arith("vertices", 2 * n + n * n), _arith("edges", 2 * n * n)]
    strongest = n * n + n
    claims.append(Claim("reference_cover", 1 if n == 1 else 2, k=strongest, mode="construction"))
    claims.append(Claim("valid_edges", 0, k=strongest + 1))
    return claims


def _biclique_graph(n: int) -> Graph:
    return gen.subdivided_biclique(n)[0]


def _biclique_reference(n: int) -> tuple[int, list[VertexSet]]:
    _, t1, t2 = gen.subdivided_biclique(n)
    return n * n + n, [t1] if t1 == t2 else [t1, t2]


def _triangle_claims() -> list[Claim]:
    return [_arith("vertices", 6), _arith("edges", 6), Claim("valid_edges", 6, k=2), Claim("f_k", 3, k=2)]


def _td3_claims(k: int) -> list[Claim]:
    return [
        Claim("tree_depth", 3),
        Claim("f_k", k - 1, k=k),
        Claim("reference_cover", k - 1, k=k, mode="construction"),
    ]


def _td3_reference(k: int) -> tuple[int, list[VertexSet]]:
    return k, gen.td3_extremal_cover(k)


FAMILIES: dict[str, _Family] = {
    "wheel": _Family(gen.wheel, 1, _wheel_claims, _wheel_reference, "wheel:C (rim length, C >= 3)"),
    "subdivided-complete": _Family(
        gen.subdivided_complete, 1, _subdivided_complete_claims, usage="subdivided-complete:T (T >= 2)"
    ),
    "pendant-double-subdivided": _Family(
        gen.pendant_double_subdivided_complete, 2, _pendant_claims, _pendant_reference,
        "pendant-double-subdivided:T,K (T >= 3, K >= 1)",
    ),
    "clique-tail": _Family(gen.clique_plus_tail, 2, _clique_tail_claims, usage="clique-tail:N,K (N, K >= 1)"),
    "saw": _Family(gen.saw_graph, 1, _saw_claims, usage="saw:K (K >= 2)"),
    "biclique-sub": _Family(_biclique_graph, 1, _biclique_claims, _biclique_reference, "biclique-sub:N (N >= 1)"),
    "triangle-pendants": _Family(
        gen.triangle_with_pendants, 0, _triangle_claims, usage="triangle-pendants"
    ),
    "td3-extremal": _Family(gen.td3_extremal, 1, _td3_claims, _td3_reference, "td3-extremal:K (K >= 2)"),
}


def family_names() -> list[str]:
    return sorted(FAMILIES)


def parse_family_spec(text: str) -> FamilySpec:
    """
    Parse `name:p1,p2` (a leading '@' is ignored).

    Raises:
        InputError: unknown family, non-integer parameter or wrong parameter count
    """
    body = text[1:] if text.startswith("@") else text
    name, _, raw = body.partition(":")
    name = name.strip()
    if name not in FAMILIES:
        raise InputError(f"unknown family '{name}'", {"known": family_names()})
    try:
        params = tuple(int(p) for p in raw.split(",") if p.strip()) if raw else ()
    except ValueError:
        raise InputError(f"family parameters must be integers, got '{raw}'") from None
    family = FAMILIES[name]
    if len(params) != family.arity:
        raise InputError(
            f"family '{name}' takes {family.arity} parameter(s), got {len(params)}",
            {"usage": family.usage},
        )
    return FamilySpec(name, params)


def build_family(text: str) -> Graph:
    return parse_family_spec(text).build()


# =========================================================================
# Claim checking
# =========================================================================

def _observe(spec: FamilySpec, g: Graph, claim: Claim, budget: Optional[SearchBudget]) -> Optional[int]:
    if claim.kind == "vertices":
        return g.n
    if claim.kind == "edges":
        return g.m
    if claim.kind == "valid_edges":
        return len(k_valid_edges(g, claim.k))
    if claim.kind == "arboricity":
        return nash_williams_arboricity(g)
    if claim.kind == "f_k":
        return exact_f_k(g, claim.k, budget).value
    if claim.kind == "treewidth":
        return exact_treewidth(g, budget).value
    if claim.kind == "tree_depth":
        return exact_tree_depth(g, budget).value
    cover = spec.reference_cover()
    if cover is None or not verify_cover(g, cover).valid:
        logger.warning(f"{spec}: reference cover missing or invalid")
        return None
    return len(cover)


def check_claims(
    spec: FamilySpec,
    budget: Optional[SearchBudget] = None,
    modes: tuple[CheckMode, ...] = ("arithmetic", "oracle", "construction"),
) -> list[ClaimResult]:
    """Evaluate every claim of the instance whose mode is selected."""
    g = spec.build()
    results = []
    for claim in spec.claims:
        if claim.mode not in modes:
            continue
        result = ClaimResult(claim, _observe(spec, g, claim, budget))
        if result.holds is False:
            logger.error(f"{spec}: claim {claim.describe()} fails (observed {result.observed})")
        else:
            logger.debug(f"{spec}: {claim.describe()} -> {result.observed}")
        results.append(result)
    return results
