"""
Tests for congruence-based height lower bounds.
"""

import random
from fractions import Fraction

import pytest

from src.bounds import CongruencePair, check_congruence, height_lower_bound, l1_infty, verify_point
from src.core.errors import (
    BoundInapplicableError,
    CongruenceError,
    DimensionMismatchError,
    PointNotOnVarietyError,
    ZeroPolynomialError,
)
from src.exact.polynomials import IntPolynomial
from src.fields.number_field import NumberField
from src.functionals import HomogeneousPoly
from src.heights import ProjectiveVector


def form(mapping: dict) -> HomogeneousPoly:
    first = next(iter(mapping))
    return HomogeneousPoly.from_dict(len(first), sum(first), mapping)


# x^2 + 3xy + 3y^2 and its reduction x^2 mod 3
F_QUADRATIC = form({(2, 0): 1, (1, 1): 3, (0, 2): 3})
T_SQUARE = form({(2, 0): 1})


@pytest.fixture
def eisenstein_field():
    return NumberField(IntPolynomial((3, 3, 1)))


class TestCheckCongruence:
    """Tests for coefficientwise congruence."""

    def test_reduction_mod_m(self):
        """Test that dropping multiples of m keeps the congruence."""
        assert check_congruence(F_QUADRATIC, T_SQUARE, 3)
        assert not check_congruence(F_QUADRATIC, T_SQUARE, 2)

    def test_missing_terms_count_as_zero(self):
        """Test terms present in only one form."""
        F = form({(2, 0): 1, (1, 1): 6})
        T = form({(2, 0): 1, (0, 2): -3})

        assert check_congruence(F, T, 3)
        assert not check_congruence(F, T, 6)

    def test_modulus_one(self):
        """Test that any two integer forms are congruent mod 1."""
        assert check_congruence(F_QUADRATIC, form({(1, 1): 5}), 1)

    def test_shape_mismatch(self):
        """Test forms of different degrees are rejected."""
        with pytest.raises(DimensionMismatchError, match="shape"):
            check_congruence(F_QUADRATIC, form({(1, 0): 1}), 3)

    def test_rational_coefficients_rejected(self):
        """Test that non-integer coefficients are rejected."""
        with pytest.raises(ValueError, match="integer coefficients"):
            check_congruence(F_QUADRATIC, form({(2, 0): Fraction(1, 2)}), 3)


class TestL1Norm:
    """Tests for the coefficient sum norm."""

    def test_values(self):
        """Test L1 of x^2, 3x^2 - 4y^2 and x^2 + 3xy + 3y^2."""
        assert l1_infty(T_SQUARE) == 1
        assert l1_infty(form({(2, 0): 3, (0, 2): -4})) == 7
        assert l1_infty(F_QUADRATIC) == 7

    def test_zero_form(self):
        """Test the zero form has no L1 bound."""
        with pytest.raises(ZeroPolynomialError):
            l1_infty(HomogeneousPoly.zero(2, 2))


class TestHeightLowerBound:
    """Tests for m / L1(T)."""

    def test_bound(self):
        """Test the bound for T = x^2 mod 3."""
        assert height_lower_bound(F_QUADRATIC, T_SQUARE, 3) == 3

    def test_larger_auxiliary_form(self):
        """Test T = x^2 - 3y^2, giving 3/4."""
        T = form({(2, 0): 1, (0, 2): -3})

        assert height_lower_bound(F_QUADRATIC, T, 3) == Fraction(3, 4)

    def test_trivial_modulus(self):
        """Test m = 1 still returns 1 / L1(T)."""
        assert height_lower_bound(F_QUADRATIC, form({(1, 1): 2}), 1) == Fraction(1, 2)

    def test_not_congruent(self):
        """Test a pair that is not congruent."""
        with pytest.raises(CongruenceError, match="not congruent"):
            height_lower_bound(F_QUADRATIC, T_SQUARE, 2)

    def test_bad_modulus(self):
        """Test m must be positive."""
        with pytest.raises(CongruenceError, match="positive"):
            height_lower_bound(F_QUADRATIC, T_SQUARE, 0)


class TestCongruencePair:
    """Tests for the validated (F, T, m) triple."""

    def test_bound_property(self):
        """Test the pair exposes its bound."""
        assert CongruencePair(F_QUADRATIC, T_SQUARE, 3).bound == 3

    def test_validation(self):
        """Test construction rejects non-congruent pairs and bad moduli."""
        with pytest.raises(CongruenceError):
            CongruencePair(F_QUADRATIC, T_SQUARE, 2)
        with pytest.raises(CongruenceError):
            CongruencePair(F_QUADRATIC, T_SQUARE, -3)


class TestVerifyPoint:
    """Tests for checking a point of X(F) against the bound."""

    def test_tight_point(self, eisenstein_field):
        """Test a root of t^2 + 3t + 3 attains H(a)^2 = 3."""
        a = ProjectiveVector.of(eisenstein_field, [eisenstein_field.generator, 1])

        report = verify_point(a, F_QUADRATIC, T_SQUARE, 3)

        assert report.bound == 3
        assert report.passed
        assert report.tight
        assert report.height_power.contains(3)

    def test_rational_point(self):
        """Test (1, 0) on x*y = 0 with T = x*y + 2x^2 mod 2."""
        rationals = NumberField.rationals()
        F = form({(1, 1): 1})
        T = form({(1, 1): 1, (2, 0): 2})

        report = verify_point(ProjectiveVector.of(rationals, [1, 0]), F, T, 2)

        assert report.bound == Fraction(2, 3)
        assert report.passed
        assert not report.tight

    def test_point_not_on_variety(self):
        """Test a point with F(a) != 0."""
        a = ProjectiveVector.of(NumberField.rationals(), [1, 1])

        with pytest.raises(PointNotOnVarietyError):
            verify_point(a, F_QUADRATIC, T_SQUARE, 3)

    def test_point_on_auxiliary_variety(self):
        """Test a point with T(a) = 0, where the bound does not apply."""
        a = ProjectiveVector.of(NumberField.rationals(), [0, 1])
        F = form({(1, 1): 1})
        T = form({(1, 1): 1, (2, 0): 2})

        with pytest.raises(BoundInapplicableError):
            verify_point(a, F, T, 2)

    def test_not_congruent(self):
        """Test a point on F = 0 with a non-congruent T."""
        a = ProjectiveVector.of(NumberField.rationals(), [1, 0])

        with pytest.raises(CongruenceError):
            verify_point(a, form({(1, 1): 1}), form({(2, 0): 1}), 2)

    def test_dimension_mismatch(self):
        """Test forms and point of different lengths."""
        a = ProjectiveVector.of(NumberField.rationals(), [1, 0, 0])

        with pytest.raises(DimensionMismatchError):
            verify_point(a, F_QUADRATIC, T_SQUARE, 3)

    def test_large_height_power_is_refined(self):
        """Test H(a)^3 = 10^9 is enclosed to the tolerance for a = (1000, 999)."""
        rationals = NumberField.rationals()
        F = form({(2, 1): 999, (1, 2): -1000})
        T = form({(3, 0): 7, (2, 1): 999, (1, 2): -1000})

        report = verify_point(ProjectiveVector.of(rationals, [1000, 999]), F, T, 7, 1e-10)

        assert report.height_power.contains(10**9)
        assert report.radius <= 1e-10
        assert report.passed


def random_form(rng: random.Random, degree: int) -> HomogeneousPoly:
    mapping = {(i, degree - i): rng.randint(-9, 9) for i in range(degree + 1)}
    mapping[(degree, 0)] = rng.choice([-2, -1, 1, 2])
    return HomogeneousPoly.from_dict(2, degree, mapping)


class TestBoundProperties:
    """Tests for congruence and bound behaviour on random forms."""

    def test_congruence_transitive(self):
        """Test T = F and S = T mod m give S = F mod m, and every divisor of m works too."""
        rng = random.Random(71)
        for _ in range(50):
            degree, m = rng.randint(1, 3), rng.randint(2, 30)
            F = random_form(rng, degree)
            T = F + random_form(rng, degree).scale(m)
            S = T + random_form(rng, degree).scale(m)

            assert check_congruence(F, T, m)
            assert check_congruence(T, S, m)
            assert check_congruence(F, S, m)
            for d in range(1, m + 1):
                if m % d == 0:
                    assert check_congruence(F, S, d)

    def test_bound_monotone_in_modulus(self):
        """Test m / L1(T) grows with m over the moduli T satisfies."""
        rng = random.Random(72)
        for _ in range(30):
            degree = rng.randint(1, 3)
            F = random_form(rng, degree)
            T = F + random_form(rng, degree).scale(60)
            if T.is_zero:
                continue
            moduli = [d for d in range(1, 61) if 60 % d == 0]

            bounds = [height_lower_bound(F, T, d) for d in moduli]

            assert bounds == sorted(bounds)
            assert len(set(bounds)) == len(bounds)

    def test_bound_antitone_in_l1(self):
        """Test a larger L1(T) gives a smaller bound at a fixed modulus."""
        rng = random.Random(73)
        for _ in range(50):
            degree, m = rng.randint(1, 3), rng.randint(2, 20)
            F = random_form(rng, degree)
            T1 = F + random_form(rng, degree).scale(m)
            T2 = F + random_form(rng, degree).scale(m)
            if T1.is_zero or T2.is_zero:
                continue
            if l1_infty(T1) > l1_infty(T2):
                T1, T2 = T2, T1

            assert height_lower_bound(F, T1, m) >= height_lower_bound(F, T2, m)
