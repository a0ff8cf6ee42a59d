"""
Tests for the text grammar of polynomials, field elements and vectors.
"""

from fractions import Fraction

import pytest

from src.cli.expressions import (
    ELEMENT,
    VECTOR,
    Mode,
    ParseMode,
    parse_element,
    parse_field_polynomial,
    parse_homogeneous,
    parse_poly,
    parse_rows,
    parse_univariate,
    parse_vector,
)
from src.core.errors import (
    DegreeBoundError,
    ExpressionSyntaxError,
    HomogeneityError,
    ZeroVectorError,
)
from src.exact.polynomials import IntPolynomial
from src.fields.number_field import NumberField
from src.functionals import HomogeneousPoly
from src.heights import ProjectiveVector


@pytest.fixture
def golden():
    return NumberField(IntPolynomial((-1, -1, 1)))


class TestUnivariate:
    """Tests for polynomials in x."""

    def test_lehmer(self):
        """Test Lehmer's polynomial, lowest coefficient first."""
        poly = parse_univariate("x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1")

        assert poly.coeffs == (1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1)

    def test_rational_coefficients(self):
        """Test ** and division by integers."""
        assert parse_univariate("2*x**2 - x/3").coeffs == (0, Fraction(-1, 3), 2)

    def test_unknown_name(self):
        """Test the position of an unknown variable."""
        with pytest.raises(ExpressionSyntaxError, match="unknown name 'y'") as exc_info:
            parse_univariate("x + y")

        assert exc_info.value.position == 4

    def test_unbalanced_parentheses(self):
        """Test an unclosed and an unopened bracket."""
        with pytest.raises(ExpressionSyntaxError) as unclosed:
            parse_univariate("(x + 1")
        with pytest.raises(ExpressionSyntaxError) as unopened:
            parse_univariate("x + 1)")

        assert unclosed.value.position == 6
        assert unopened.value.position == 5

    def test_bad_character(self):
        """Test a character outside the grammar."""
        with pytest.raises(ExpressionSyntaxError, match="unexpected character") as exc_info:
            parse_univariate("x $ 1")

        assert exc_info.value.position == 2

    def test_empty(self):
        """Test that blank input is rejected."""
        with pytest.raises(ExpressionSyntaxError, match="empty"):
            parse_univariate("   ")


class TestFieldElements:
    """Tests for elements written in the generator t."""

    def test_element(self, golden):
        """Test (3t + 2)/4 in the golden field."""
        t = golden.generator

        assert parse_element("(3*t + 2)/4", golden) == (3 * t + 2) / 4

    def test_degree_bound(self, golden):
        """Test that t^2 is not a reduced element of a quadratic field."""
        with pytest.raises(DegreeBoundError, match="degree 2"):
            parse_element("t^2", golden)

    def test_generator_over_rationals(self):
        """Test that the generator is unavailable over Q."""
        with pytest.raises(DegreeBoundError):
            parse_poly("t", ELEMENT)

    def test_field_polynomial(self):
        """Test defining polynomials in t or x."""
        assert parse_field_polynomial("t^2 - t - 1").coeffs == (-1, -1, 1)
        assert parse_field_polynomial("x^2 + 1").coeffs == (1, 0, 1)

    def test_field_polynomial_needs_integers(self):
        """Test that rational coefficients are rejected."""
        with pytest.raises(ExpressionSyntaxError, match="integer coefficients"):
            parse_field_polynomial("t^2/2 + 1")


class TestHomogeneous:
    """Tests for forms in x1 .. xN."""

    def test_monomial(self):
        """Test x1*x2 as a form of degree 2."""
        assert parse_homogeneous("x1*x2", 2, 2) == HomogeneousPoly.monomial((1, 1))

    def test_aliases(self):
        """Test x, y, z as x1, x2, x3."""
        poly = parse_homogeneous("x*y + z^2", 3)

        assert poly == HomogeneousPoly.from_dict(3, 2, {(1, 1, 0): 1, (0, 0, 2): 1})

    def test_not_homogeneous(self):
        """Test mixed degrees and a wrong declared degree."""
        with pytest.raises(HomogeneityError, match="mixes"):
            parse_homogeneous("x1^2 + x2", 2)
        with pytest.raises(HomogeneityError, match="expected 3"):
            parse_homogeneous("x1*x2", 2, 3)

    def test_variable_out_of_range(self):
        """Test x4 in a form of three variables."""
        with pytest.raises(ExpressionSyntaxError, match="unknown name 'x4'"):
            parse_homogeneous("x1*x4", 3)

    def test_field_coefficients(self, golden):
        """Test a coefficient involving the generator."""
        poly = parse_homogeneous("t*x1 + 2*x2", 2, field=golden)

        assert poly.coefficient((1, 0)) == golden.generator
        assert poly.coefficient((0, 1)) == golden.from_rational(2)

    def test_mode_dispatch(self):
        """Test parse_poly in homogeneous and vector mode."""
        form = parse_poly("x1^3 - x2^3", Mode.homogeneous(2))
        vector = parse_poly("[1, 2]", VECTOR)

        assert form.degree == 3
        assert vector == ProjectiveVector.of(NumberField.rationals(), [1, 2])

    def test_mode_needs_variable_count(self):
        """Test homogeneous mode without N."""
        with pytest.raises(ValueError, match="number of variables"):
            parse_poly("x1", Mode(ParseMode.HOMOGENEOUS))


class TestVectors:
    """Tests for bracketed lists."""

    def test_vector(self, golden):
        """Test a vector with a generator entry."""
        vector = parse_vector("[1, t + 1]", golden)

        assert vector.coords == (golden.one, golden.generator + 1)

    def test_rows(self):
        """Test several rows separated by semicolons."""
        rows = parse_rows("[1, 2, 3]; [0, 1, 1]", NumberField.rationals())

        assert [[c.as_rational() for c in row] for row in rows] == [[1, 2, 3], [0, 1, 1]]

    def test_error_position_in_later_row(self):
        """Test that positions count from the start of the whole input."""
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            parse_rows("[1, 2]; [1, q]", NumberField.rationals())

        assert exc_info.value.position == 12

    def test_missing_brackets(self):
        """Test a list without brackets."""
        with pytest.raises(ExpressionSyntaxError, match="bracketed"):
            parse_vector("1, 2", NumberField.rationals())

    def test_zero_vector(self):
        """Test that the zero vector is not a projective point."""
        with pytest.raises(ZeroVectorError):
            parse_vector("[0, 0]", NumberField.rationals())
