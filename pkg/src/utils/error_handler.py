"""
Error hierarchy and CLI error handling.

Provides:
- One exception family for every failure a solver or command can report
- Stable process exit codes per failure class (0 ok, 2 input, 3 precondition,
  4 budget, 5 internal verification)
- A decorator that turns exceptions into exit codes for CLI commands
"""
import functools
import sys
from typing import Callable, Optional

from ..logger import get_logger

logger = get_logger(__name__)


# =========================================================================
# Error Classes
# =========================================================================

class ArborError(Exception):
    """Base class for all library errors."""
    exit_code: int = 1

    def __init__(self, message: str, details: Optional[dict] = None):
        super().__init__(message)
        self.details = details or {}


class InputError(ArborError):
    """
    Malformed input (exit code 2).

    Examples: self-loops, vertex index out of range, unknown family name.
    """
    exit_code = 2


class ParseError(InputError):
    """Edge-list or cover-JSON text that cannot be parsed; details carry the line."""

    def __init__(self, message: str, line: Optional[int] = None, details: Optional[dict] = None):
        details = dict(details or {})
        if line is not None:
            details["line"] = line
            message = f"line {line}: {message}"
        super().__init__(message, details)
        self.line = line


class PreconditionError(ArborError):
    """
    A hypothesis of the requested construction does not hold (exit code 3).

    Examples: tree-width too large for the tw2 cover, C4 passed to good_coloring,
    a matching that is not a matching.
    """
    exit_code = 3


class GraphMismatchError(PreconditionError):
    """A derived structure (cover, contraction map) refers to another graph."""


class BudgetExhausted(ArborError):
    """
    An exhaustive search ran out of time or nodes (exit code 4).

    `lower` / `upper` carry the best bounds known when the search stopped.
    """
    exit_code = 4

    def __init__(
        self,
        message: str,
        lower: Optional[int] = None,
        upper: Optional[int] = None,
        details: Optional[dict] = None,
    ):
        super().__init__(message, details)
        self.lower = lower
        self.upper = upper


class VerificationError(ArborError):
    """
    A produced certificate failed its own check (exit code 5).

    Never expected; raised instead of emitting an invalid cover or coloring.
    """
    exit_code = 5


# =========================================================================
# Decorator
# =========================================================================

def with_error_handling(command_name: Optional[str] = None, stream=None):
    """
    Error handling decorator for CLI commands.

    The wrapped function returns an exit code (usually 0). Library errors are
    logged and printed, and their class decides the exit code; anything else
    is treated as an internal failure.

    Args:
        command_name: Name used in log lines (defaults to the function name)
        stream: Where diagnostics are printed (defaults to sys.stderr)

    Usage:
        @with_error_handling("fk")
        def cmd_fk(args) -> int:
            ...
            return 0
    """
    def decorator(func: Callable[..., int]) -> Callable[..., int]:
        @functools.wraps(func)
        def wrapper(*args, **kwargs) -> int:
            name = command_name or func.__name__
            out = stream or sys.stderr
            try:
                return func(*args, **kwargs)

            except ArborError as e:
                log = logger.warning if isinstance(e, BudgetExhausted) else logger.error
                log(f"[{name}] {type(e).__name__}: {e}")
                print(f"error: {e}", file=out)
                for key, value in e.details.items():
                    print(f"  {key}: {value}", file=out)
                return e.exit_code

            except Exception as e:
                logger.exception(f"[{name}] Unexpected error: {type(e).__name__}: {e}")
                print(f"internal error: {type(e).__name__}: {e}", file=out)
                return VerificationError.exit_code

        return wrapper
    return decorator
