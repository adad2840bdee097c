"""
Search budgets for exhaustive solvers.

Replaces signal-based timeouts: searches call `tick()` at every node, and the
budget raises BudgetExhausted once its deadline or node limit is reached. This
works in any thread and leaves the caller free to turn the exhaustion into a
bounded result.
"""
import time
from dataclasses import dataclass, field
from typing import Optional

from ..logger import get_logger
from .error_handler import BudgetExhausted

logger = get_logger(__name__)

# Deadline is checked once per this many ticks.
_CLOCK_STRIDE = 256


@dataclass
class SearchBudget:
    """
    Time and node budget shared by one solver invocation.

    Args:
        time_ms: Wall-clock limit in milliseconds (None = unlimited)
        max_nodes: Search-node limit (None = unlimited)
        operation_name: Name for log and error messages
    """
    time_ms: Optional[int] = None
    max_nodes: Optional[int] = None
    operation_name: str = "search"
    nodes: int = field(default=0, init=False)
    _deadline: Optional[float] = field(default=None, init=False, repr=False)
    _started: float = field(default=0.0, init=False, repr=False)

    def __post_init__(self):
        self._started = time.monotonic()
        if self.time_ms is not None:
            if self.time_ms <= 0:
                raise ValueError("time_ms must be positive")
            self._deadline = self._started + self.time_ms / 1000.0
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")

    @classmethod
    def unlimited(cls, operation_name: str = "search") -> "SearchBudget":
        return cls(operation_name=operation_name)

    @property
    def is_limited(self) -> bool:
        return self.time_ms is not None or self.max_nodes is not None

    def tick(self, count: int = 1) -> None:
        """Account for `count` search nodes; raise BudgetExhausted when over."""
        self.nodes += count
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            self._exhaust(f"{self.operation_name} exceeded {self.max_nodes} search nodes")
        if self._deadline is not None and self.nodes % _CLOCK_STRIDE == 0:
            if time.monotonic() > self._deadline:
                self._exhaust(f"{self.operation_name} exceeded {self.time_ms} ms")

    def elapsed_ms(self) -> float:
        return (time.monotonic() - self._started) * 1000.0

    def _exhaust(self, message: str) -> None:
        logger.warning(f"⏱️ BUDGET: {message}")
        raise BudgetExhausted(message, details={"nodes": self.nodes})


def resolve_budget(budget: Optional[SearchBudget], operation_name: str) -> SearchBudget:
    """Return `budget` or a fresh unlimited one named after the operation."""
    if budget is None:
        return SearchBudget.unlimited(operation_name)
    return budget
