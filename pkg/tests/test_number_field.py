"""
Tests for number fields, element arithmetic and field certificates.
"""

import random
from fractions import Fraction
from itertools import permutations

import pytest

from src.core.errors import (
    DimensionMismatchError,
    FieldMismatchError,
    InvalidFieldError,
    IrreducibilityNotCertifiedError,
)
from src.corpus import get_corpus_registry
from src.exact.polynomials import IntPolynomial
from src.fields import (
    NumberField,
    certify_irreducible,
    determinant,
    maximal_minors,
    minimal_polynomial,
    norm,
    p_maximality_test,
)


@pytest.fixture
def golden():
    return NumberField(IntPolynomial((-1, -1, 1)), name="golden")


@pytest.fixture
def gaussian():
    return NumberField(IntPolynomial((1, 0, 1)), name="Qi")


class TestNumberField:
    """Tests for field construction."""

    def test_rationals(self):
        """Test the degree-one field Q."""
        q = NumberField.rationals()

        assert q.degree == 1
        assert q.name == "Q"
        assert q.discriminant == 1

    def test_non_monic_rejected(self):
        """Test that a non-monic defining polynomial is rejected."""
        with pytest.raises(InvalidFieldError, match="not monic"):
            NumberField(IntPolynomial((1, 0, 2)))

    def test_reducible_rejected(self):
        """Test that x^2 - 1 cannot be certified irreducible."""
        with pytest.raises(IrreducibilityNotCertifiedError):
            NumberField(IntPolynomial((-1, 0, 1)))

    def test_lehmer_certified(self):
        """Test that Lehmer's polynomial is certified irreducible."""
        certify_irreducible(IntPolynomial((1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1)))

    def test_equality_by_polynomial(self, golden):
        """Test that fields compare by defining polynomial."""
        assert golden == NumberField(IntPolynomial((-1, -1, 1)))
        assert golden != NumberField.rationals()


class TestFieldElement:
    """Tests for element arithmetic."""

    def test_reduction_modulo_defining_polynomial(self, golden):
        """Test that t^2 reduces to t + 1 in the golden field."""
        t = golden.generator

        assert t * t == t + 1

    def test_inverse(self, golden):
        """Test that 1/t = t - 1 in the golden field."""
        t = golden.generator

        assert t.inverse() == t - 1
        assert (t / t) == golden.one

    def test_inverse_of_zero(self, golden):
        """Test that zero has no inverse."""
        with pytest.raises(ZeroDivisionError):
            golden.zero.inverse()

    def test_rational_coefficients(self, gaussian):
        """Test elements with denominators are normalized."""
        a = gaussian.element([Fraction(1, 2), Fraction(3, 4)])

        assert a.denominator == 4
        assert a.coefficients == (Fraction(1, 2), Fraction(3, 4))
        assert str(a) == "(3*t + 2)/4"

    def test_field_mismatch(self, golden, gaussian):
        """Test that elements of different fields do not mix."""
        with pytest.raises(FieldMismatchError):
            golden.generator + gaussian.generator

    def test_powers(self, gaussian):
        """Test integer powers including negative ones."""
        i = gaussian.generator

        assert i**4 == gaussian.one
        assert i**-1 == -i


class TestNormsAndMinimalPolynomials:
    """Tests for norms and minimal polynomials."""

    def test_norms(self, golden, gaussian):
        """Test exact signed norms."""
        assert norm(golden.generator) == -1
        assert norm(gaussian.generator + 1) == 2
        assert norm(gaussian.element([Fraction(1, 2)])) == Fraction(1, 4)

    def test_minimal_polynomial(self, gaussian):
        """Test minimal polynomials of a generator and a rational element."""
        i = gaussian.generator

        assert minimal_polynomial(i) == IntPolynomial((1, 0, 1))
        assert minimal_polynomial(i * i) == IntPolynomial((1, 1))
        assert minimal_polynomial((i + 1) / 2) == IntPolynomial((1, -2, 2))


class TestMaximality:
    """Tests for Dedekind's criterion."""

    def test_gaussian_integers_maximal_at_two(self, gaussian):
        """Test that Z[i] is 2-maximal."""
        assert p_maximality_test(gaussian, 2) is True

    def test_sqrt5_not_maximal_at_two(self):
        """Test that Z[sqrt 5] is not 2-maximal."""
        field = NumberField(IntPolynomial((-5, 0, 1)))

        assert p_maximality_test(field, 2) is False

    def test_unramified_prime(self, golden):
        """Test that primes with p^2 not dividing disc are maximal."""
        assert p_maximality_test(golden, 3) is True


class TestLinearAlgebra:
    """Tests for determinants and maximal minors."""

    def test_determinant(self, golden):
        """Test a 2x2 determinant over the golden field."""
        t = golden.generator
        det = determinant([[t, golden.one], [golden.one, t]], golden)

        assert det == t

    def test_determinant_matches_leibniz_formula(self):
        """Test random 3x3 and 4x4 determinants over a cubic field against the permutation sum."""
        cubic = NumberField(IntPolynomial((-1, -1, 0, 1)))
        rng = random.Random(61)
        for n in (1, 2, 3, 3, 4):
            matrix = [[random_element(cubic, rng) for _ in range(n)] for _ in range(n)]
            expected = cubic.zero
            for perm in permutations(range(n)):
                term = cubic.from_rational(permutation_sign(perm))
                for i, j in enumerate(perm):
                    term = term * matrix[i][j]
                expected = expected + term

            assert determinant(matrix, cubic) == expected

    def test_empty_determinant(self, golden):
        """Test the 0x0 determinant is 1."""
        assert determinant([], golden) == golden.one

    def test_maximal_minors(self):
        """Test the lexicographic minors of a 2 x 3 rational matrix."""
        q = NumberField.rationals()
        rows = [[q.coerce(c) for c in (1, 2, 3)], [q.coerce(c) for c in (0, 1, 1)]]

        minors = maximal_minors(rows, q)

        assert [cols for cols, _ in minors] == [(0, 1), (0, 2), (1, 2)]
        assert [m.as_rational() for _, m in minors] == [1, 1, -1]

    def test_too_many_rows(self):
        """Test that more rows than columns is rejected."""
        q = NumberField.rationals()
        with pytest.raises(DimensionMismatchError):
            maximal_minors([[q.one], [q.one]], q)


def random_element(field: NumberField, rng: random.Random, bound: int = 7, max_den: int = 5):
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in range(field.degree)]
        beta = field.element(coeffs, rng.randint(1, max_den))
        if not beta.is_zero:
            return beta


def permutation_sign(perm: tuple[int, ...]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i) if perm[j] > perm[i])
    return -1 if inversions % 2 else 1


class TestNormProperties:
    """Tests for norms and minimal polynomials of random elements."""

    def test_norm_multiplicative(self):
        """Test N(beta * gamma) = N(beta) * N(gamma) across corpus fields."""
        rng = random.Random(62)
        registry = get_corpus_registry()
        for config in registry.list_fields():
            field = registry.get_field(config.id)
            for _ in range(8):
                beta, gamma = random_element(field, rng), random_element(field, rng)

                assert norm(beta * gamma) == norm(beta) * norm(gamma)

    def test_norm_of_rational(self):
        """Test N(q) = q^[K:Q] for rational q."""
        registry = get_corpus_registry()
        for config in registry.list_fields():
            field = registry.get_field(config.id)

            assert norm(field.from_rational(Fraction(-2, 3))) == Fraction(-2, 3) ** field.degree

    def test_minimal_polynomial_vanishes(self):
        """Test minpoly(beta)(beta) = 0 with deg minpoly dividing [K:Q]."""
        rng = random.Random(63)
        registry = get_corpus_registry()
        for config in registry.list_fields():
            field = registry.get_field(config.id)
            for _ in range(6):
                beta = random_element(field, rng)
                minpoly = minimal_polynomial(beta)
                value = field.zero
                for c in reversed(minpoly.coeffs):
                    value = value * beta + c

                assert value.is_zero, str(beta)
                assert field.degree % minpoly.degree == 0
                assert minpoly.leading > 0
