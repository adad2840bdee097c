"""
Forest covers, their verification, and exact-result records.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Generic, Iterable, Literal, Optional, Sequence, TypeVar

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from ..graph.core import Edge, Graph, VertexSet, bits, is_induced_forest, mask_of
from ..logger import get_logger
from ..utils.error_handler import GraphMismatchError, ParseError, VerificationError
from ..validity.witness import k_valid_edges

logger = get_logger(__name__)

T = TypeVar("T")
ProofMode = Literal["exhausted", "bound-met", "unknown"]


class ForestCover(BaseModel):
    """
    A list of induced forests (vertex sets) declared k-strong for one graph.

    Serialized as {"k": int, "graph_hash": hex, "forests": [[v, ...], ...]}.
    """
    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=1)
    graph_hash: str
    forests: tuple[tuple[int, ...], ...] = ()

    @field_validator('forests')
    @classmethod
    def sort_forests(cls, v):
        out = []
        for forest in v:
            if any(x < 0 for x in forest):
                raise ValueError("vertex indices must be nonnegative")
            out.append(tuple(sorted(set(forest))))
        return tuple(out)

    @classmethod
    def from_masks(cls, g: Graph, k: int, masks: Iterable[VertexSet]) -> "ForestCover":
        return cls(k=k, graph_hash=g.graph_hash, forests=tuple(tuple(bits(m)) for m in masks))

    @classmethod
    def from_json(cls, text: str) -> "ForestCover":
        try:
            return cls.model_validate_json(text)
        except ValidationError as e:
            raise ParseError(f"invalid cover JSON: {e.errors()[0]['msg']}") from None

    def to_json(self) -> str:
        return self.model_dump_json()

    def masks(self) -> list[VertexSet]:
        return [mask_of(f) for f in self.forests]

    def __len__(self) -> int:
        return len(self.forests)

    @property
    def size(self) -> int:
        return len(self.forests)

    def edge_set(self, g: Graph) -> set[Edge]:
        out: set[Edge] = set()
        for mask in self.masks():
            out.update(g.edges_within(mask))
        return out

    def deduplicated(self, g: Graph) -> "ForestCover":
        """Drop forests whose edge set repeats an earlier one, and edgeless forests."""
        seen: set[tuple[Edge, ...]] = set()
        kept = []
        for forest, mask in zip(self.forests, self.masks()):
            key = tuple(g.edges_within(mask))
            if not key or key in seen:
                continue
            seen.add(key)
            kept.append(forest)
        return self.model_copy(update={"forests": tuple(kept)})


@dataclass(frozen=True)
class CoverVerdict:
    """Outcome of verify_cover; `violations` lists every problem found, in order."""
    valid: bool
    violations: tuple[str, ...]
    uncovered: tuple[Edge, ...]

    @property
    def first_violation(self) -> Optional[str]:
        return self.violations[0] if self.violations else None


@dataclass(frozen=True)
class ExactResult(Generic[T]):
    """
    Exact value with certificate, or bounds when the search budget ran out.

    proof is "exhausted" (search completed), "bound-met" (lower bound equals a
    certified upper bound) or "unknown" (value is None; lower/upper bracket it).
    """
    value: Optional[int]
    lower: int
    upper: Optional[int]
    certificate: Optional[T]
    proof: ProofMode

    @property
    def is_exact(self) -> bool:
        return self.proof != "unknown"

    def describe(self) -> str:
        if self.is_exact:
            return f"{self.value} ({self.proof})"
        upper = "?" if self.upper is None else self.upper
        return f"unknown, bounds [{self.lower}, {upper}]"


def verify_cover(g: Graph, cover: ForestCover) -> CoverVerdict:
    """
    Check that every forest is an induced forest with components of at least
    k edges, and that the forests cover every k-valid edge.

    Raises:
        GraphMismatchError: the cover was made for another graph
    """
    if cover.graph_hash != g.graph_hash:
        raise GraphMismatchError(
            "cover refers to a different graph",
            {"expected": g.graph_hash, "got": cover.graph_hash},
        )
    k = cover.k
    violations: list[str] = []
    covered: set[Edge] = set()
    for i, forest in enumerate(cover.forests, start=1):
        if any(v >= g.n for v in forest):
            violations.append(f"forest {i} has vertices outside 0..{g.n - 1}")
            continue
        mask = mask_of(forest)
        check = is_induced_forest(g, mask)
        if not check.is_forest:
            violations.append(f"forest {i} is not an induced forest (its vertex set spans a cycle)")
        for info in check.components:
            if info.is_tree and info.edge_count < k:
                violations.append(
                    f"forest {i} has a component {list(bits(info.vertices))} "
                    f"with {info.edge_count} edges (< k={k})"
                )
        covered.update(g.edges_within(mask))

    uncovered = tuple(e for e in k_valid_edges(g, k) if e not in covered)
    for e in uncovered:
        violations.append(f"k-valid edge {e} is not covered")
    return CoverVerdict(not violations, tuple(violations), uncovered)


def require_valid_cover(g: Graph, cover: ForestCover, stage: str) -> ForestCover:
    """Return the cover, or raise VerificationError naming the stage that produced it."""
    verdict = verify_cover(g, cover)
    if not verdict.valid:
        logger.error(f"[{stage}] produced an invalid cover: {verdict.first_violation}")
        raise VerificationError(
            f"{stage} produced an invalid cover: {verdict.first_violation}",
            {"violations": list(verdict.violations[:5])},
        )
    return cover


def merge_index_wise(parts: Sequence[Sequence[VertexSet]]) -> list[VertexSet]:
    """
    Union the i-th forests of every part.

    Parts must be pairwise non-adjacent (different components or branches that
    only meet in a shared vertex every forest of that index contains).
    """
    width = max((len(p) for p in parts), default=0)
    merged = [0] * width
    for part in parts:
        for i, mask in enumerate(part):
            merged[i] |= mask
    return merged
