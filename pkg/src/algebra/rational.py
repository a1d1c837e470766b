"""
Exact rational coefficients.

Coefficients are fractions.Fraction values: arbitrary-precision, always
reduced, denominator positive, zero stored as 0/1.
"""
from enum import Enum
from fractions import Fraction
from typing import Union

from src.algebra.errors import RationalDivisionError

RationalLike = Union[Fraction, int]


class RationalOp(str, Enum):
    """Binary operations supported by rational_arith."""
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


def to_rational(value: Union[RationalLike, str]) -> Fraction:
    """
    Coerce an int, Fraction or "num/den" string to a Fraction.

    Floats are rejected: there is no floating-point mode.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"Cannot use {type(value).__name__} as an exact coefficient")
    return Fraction(value)


def rational_arith(a: RationalLike, b: RationalLike, op: Union[RationalOp, str]) -> Fraction:
    """
    Apply one exact arithmetic operation.

    Args:
        a: Left operand
        b: Right operand
        op: One of add, sub, mul, div

    Returns:
        Reduced Fraction

    Raises:
        RationalDivisionError: If op is div and b is zero
    """
    left, right = to_rational(a), to_rational(b)
    op = RationalOp(op)
    if op is RationalOp.ADD:
        return left + right
    if op is RationalOp.SUB:
        return left - right
    if op is RationalOp.MUL:
        return left * right
    if right == 0:
        raise RationalDivisionError(f"Division of {left} by zero")
    return left / right


def format_rational(value: Fraction) -> str:
    """Render as "num/den", always with an explicit denominator."""
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """
    Parse "num/den" or an integer string.

    Raises:
        ValueError: If the text is not an exact fraction
    """
    text = text.strip()
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"Not an exact fraction: {text!r}") from e
    if "." in text or "e" in text.lower():
        raise ValueError(f"Not an exact fraction: {text!r}")
    return value
