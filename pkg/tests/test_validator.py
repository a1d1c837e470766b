"""
Unit tests for InputValidator.

Tests ensure:
- n below 3 and non-integers are rejected
- Exponent vectors are checked for length, type and sign
- Comma-separated input is parsed strictly
"""
import pytest

from src.gating.validator import InputValidator, OracleRangeError, ValidationError


class TestValidateN:
    """Test cases for validate_n."""

    def test_valid(self):
        """Test n >= 3 passes through."""
        assert InputValidator.validate_n(3) == 3
        assert InputValidator.validate_n(12) == 12

    @pytest.mark.parametrize("n", [2, 0, -5])
    def test_too_small(self, n):
        """Test n < 3 is rejected."""
        with pytest.raises(ValidationError, match="n must be >= 3"):
            InputValidator.validate_n(n)

    @pytest.mark.parametrize("n", [4.0, "4", True, None])
    def test_not_integer(self, n):
        """Test non-integers, including bool, are rejected."""
        with pytest.raises(ValidationError, match="must be an integer"):
            InputValidator.validate_n(n)


class TestValidateExponents:
    """Test cases for validate_exponents."""

    def test_valid(self):
        """Test a valid tuple comes back as a list."""
        assert InputValidator.validate_exponents((0, 1, 2)) == [0, 1, 2]

    def test_length(self):
        """Test a wrong length is reported."""
        with pytest.raises(ValidationError, match="Expected 4 exponents, got 3"):
            InputValidator.validate_exponents([1, 2, 3], length=4)

    def test_negative(self):
        """Test negative entries are rejected."""
        with pytest.raises(ValidationError, match="non-negative"):
            InputValidator.validate_exponents([1, -1])

    def test_float(self):
        """Test float entries are rejected."""
        with pytest.raises(ValidationError, match="must be an integer"):
            InputValidator.validate_exponents([1, 2.0])

    def test_empty_allowed_without_length(self):
        """Test the empty vector is accepted when no length is required."""
        assert InputValidator.validate_exponents([]) == []


class TestParseExponents:
    """Test cases for parse_exponents."""

    def test_parse(self):
        """Test whitespace around entries is tolerated."""
        assert InputValidator.parse_exponents(" 1, 2 ,3,4 ", length=4) == [1, 2, 3, 4]

    @pytest.mark.parametrize("text", ["", "1,,2", "1,2,", "a,b", "1.5,2"])
    def test_malformed(self, text):
        """Test malformed lists raise ValidationError."""
        with pytest.raises(ValidationError, match="Malformed exponent list"):
            InputValidator.parse_exponents(text)

    def test_negative(self):
        """Test a negative entry fails after parsing."""
        with pytest.raises(ValidationError, match="non-negative"):
            InputValidator.parse_exponents("1,-2")


class TestErrorHierarchy:
    """Test cases for the exception types."""

    def test_value_error(self):
        """Test ValidationError is a ValueError."""
        assert issubclass(ValidationError, ValueError)

    def test_oracle_range(self):
        """Test OracleRangeError is a ValidationError."""
        assert issubclass(OracleRangeError, ValidationError)
