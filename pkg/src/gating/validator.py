"""
Validation of user-supplied n and exponent vectors.

Everything that reaches h0 or the oracle passes through here first, so
the library never evaluates a dimension at an invalid point.
"""
from typing import List, Sequence


class ValidationError(ValueError):
    """Raised when an input fails validation."""
    pass


class OracleRangeError(ValidationError):
    """Raised when the oracle would leave the stable range (m <= k)."""
    pass


class InputValidator:
    """
    Validates and parses inputs for γ_n and h⁰ computations.

    All methods are static; failures raise ValidationError with a message
    suitable for a CLI diagnostic.
    """

    MIN_N = 3

    @staticmethod
    def validate_n(n: int) -> int:
        """
        Validate the number of marked points.

        Raises:
            ValidationError: If n is not an integer >= 3
        """
        if isinstance(n, bool) or not isinstance(n, int):
            raise ValidationError(f"n must be an integer, got {n!r}")
        if n < InputValidator.MIN_N:
            raise ValidationError(f"n must be >= {InputValidator.MIN_N}, got {n}")
        return n

    @staticmethod
    def validate_exponents(x: Sequence[int], length: int = None) -> List[int]:
        """
        Validate an exponent vector.

        Args:
            x: Candidate exponents
            length: Required length, if any

        Returns:
            The exponents as a list of ints

        Raises:
            ValidationError: On wrong length, non-integer or negative entries
        """
        values = list(x)
        if length is not None and len(values) != length:
            raise ValidationError(
                f"Expected {length} exponents, got {len(values)}"
            )
        for value in values:
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValidationError(f"Exponent must be an integer, got {value!r}")
            if value < 0:
                raise ValidationError(f"Exponents must be non-negative, got {value}")
        return values

    @staticmethod
    def parse_exponents(text: str, length: int = None) -> List[int]:
        """
        Parse a comma-separated exponent list such as "1,2,3,4".

        Raises:
            ValidationError: If an entry is not an integer, or validation fails
        """
        parts = [part.strip() for part in text.split(",")]
        if not text.strip() or any(not part for part in parts):
            raise ValidationError(f"Malformed exponent list: {text!r}")
        try:
            values = [int(part) for part in parts]
        except ValueError:
            raise ValidationError(f"Malformed exponent list: {text!r}")
        return InputValidator.validate_exponents(values, length)
