"""
Shared utilities: error hierarchy and search budgets
"""
from .budget import SearchBudget, resolve_budget
from .error_handler import (
    ArborError,
    BudgetExhausted,
    GraphMismatchError,
    InputError,
    ParseError,
    PreconditionError,
    VerificationError,
    with_error_handling,
)

__all__ = [
    'SearchBudget',
    'resolve_budget',
    'ArborError',
    'BudgetExhausted',
    'GraphMismatchError',
    'InputError',
    'ParseError',
    'PreconditionError',
    'VerificationError',
    'with_error_handling',
]
