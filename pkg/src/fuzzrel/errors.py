"""Exception types shared across the package."""


class DomainError(ValueError):
    """A value lies outside the unit interval (beyond clamping tolerance)."""


class DimensionMismatch(ValueError):
    """Operand shapes are incompatible."""


class EnumerationBudgetExceeded(RuntimeError):
    """A covering enumeration would generate more candidates than allowed.

    Raised before any candidate is built; partial extremal sets are never
    returned.
    """


class SubsetCapExceeded(RuntimeError):
    """The subset characterization was asked for more columns than its cap."""


class BudgetExceeded(RuntimeError):
    """A brute-force oracle scan would exceed its grid/sample budget."""
