"""
Exceptions raised by the algebra layer.

Every error is a ValueError so callers that only care about "bad input"
can catch one type; the CLI maps all of them to exit code 2.
"""


class AlgebraError(ValueError):
    """Base class for algebra failures."""
    pass


class RationalDivisionError(AlgebraError, ZeroDivisionError):
    """Raised when a rational is divided by zero."""
    pass


class VariableCountError(AlgebraError):
    """Raised on mismatched variable counts or out-of-range variable indices."""
    pass


class NonSymmetricError(AlgebraError):
    """Raised when a symmetric polynomial is required but not supplied."""
    pass


class StableRangeError(AlgebraError):
    """Raised when a computation would leave the stable range m >= degree (+1 for T)."""
    pass
