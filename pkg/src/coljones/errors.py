"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "ColJonesError",
    "NonDivisible",
    "NonIntegral",
    "VariableMismatch",
    "IndexOutOfRange",
    "NotAKnot",
    "SolveFailed",
    "NotInSpan",
    "BudgetExceeded",
]


class ColJonesError(Exception):
    """Base class for all errors raised by this package."""


class NonDivisible(ColJonesError, ArithmeticError):
    """An exact division had a non-zero remainder."""


class NonIntegral(ColJonesError, ArithmeticError):
    """A value expected to be a Laurent polynomial kept a denominator."""


class VariableMismatch(ColJonesError, ValueError):
    """A ring element involves variables the operation does not accept."""


class IndexOutOfRange(ColJonesError, ValueError):
    """A generator index, factor index or basis index is invalid."""


class NotAKnot(ColJonesError, ValueError):
    """The closure of a braid has more than one component."""


class SolveFailed(ColJonesError, ArithmeticError):
    """A braid image left the span of the highest weight basis."""


class NotInSpan(ColJonesError, ValueError):
    """A vector is not a combination of highest weight basis vectors."""


class BudgetExceeded(ColJonesError, RuntimeError):
    """A homological computation would exceed the dimension budget."""

    def __init__(self, dimension: int, budget: int):
        super().__init__(f"weight space dimension {dimension} exceeds budget {budget}")
        self.dimension = dimension
        self.budget = budget
