"""
Tests for places, absolute values and the product formula.
"""

import random
from fractions import Fraction

import pytest
from sympy import primerange

from src.core.errors import UnsupportedPrimeError, ZeroPolynomialError
from src.core.precision import working_precision
from src.corpus import get_corpus_registry
from src.exact.polynomials import IntPolynomial
from src.fields.number_field import NumberField
from src.numeric.ball import Ball
from src.places import (
    AbsoluteValue,
    Normalization,
    PadicPower,
    abs_value,
    archimedean_places,
    candidate_finite_places,
    embed,
    exact_product_ball,
    finite_places_above,
    padic_max,
    product_formula_check,
)


@pytest.fixture
def gaussian():
    return NumberField(IntPolynomial((1, 0, 1)), name="Qi")


@pytest.fixture
def golden():
    return NumberField(IntPolynomial((-1, -1, 1)), name="golden")


class TestPadicPower:
    """Tests for exact p-power values."""

    def test_arithmetic(self):
        """Test multiplication, division and powers."""
        a = PadicPower(2, Fraction(1, 2))
        b = PadicPower(2, Fraction(-3, 2))

        assert (a * b).exponent == -1
        assert (a / b).exponent == 2
        assert (a**4).to_fraction() == 4

    def test_zero_is_smallest(self):
        """Test that 0 sorts below every power."""
        values = [PadicPower(3, -5), PadicPower.zero(3), PadicPower.one(3)]

        assert padic_max(values).is_one
        assert PadicPower.zero(3) < PadicPower(3, -100)

    def test_mixed_primes_rejected(self):
        """Test that powers of different primes do not combine."""
        with pytest.raises(ValueError, match="cannot combine"):
            PadicPower(2, 1) * PadicPower(3, 1)

    def test_exact_product_ball(self):
        """Test that square roots combine exactly before rounding."""
        values = [PadicPower(2, Fraction(1, 2)), PadicPower(2, Fraction(1, 2)), PadicPower(3, -1)]

        product = exact_product_ball(values)

        assert product.is_exact()
        assert product.contains(Fraction(2, 3))


class TestArchimedeanPlaces:
    """Tests for real and complex places."""

    def test_gaussian_has_one_complex_place(self, gaussian):
        """Test that Q(i) has one complex place of local degree 2."""
        places = archimedean_places(gaussian)

        assert len(places) == 1
        assert not places[0].is_real
        assert places[0].local_degree == 2
        assert places[0].id == "inf0"

    def test_golden_has_two_real_places(self, golden):
        """Test that Q(sqrt 5) has two real places."""
        places = archimedean_places(golden)

        assert [p.is_real for p in places] == [True, True]
        assert sum(p.local_degree for p in places) == 2

    def test_embedding(self, golden):
        """Test that t embeds to the roots of x^2 - x - 1."""
        with working_precision(64):
            places = archimedean_places(golden)
            images = [embed(golden.generator, p) for p in places]

        near = Fraction(1, 10**6)
        assert images[0].real.overlaps(Ball.from_mid_rad(Fraction(-618034, 10**6), near))
        assert images[1].real.overlaps(Ball.from_mid_rad(Fraction(1618034, 10**6), near))


class TestFinitePlaces:
    """Tests for the decomposition of rational primes."""

    def test_split_inert_ramified(self, gaussian):
        """Test 5 splits, 3 is inert and 2 ramifies in Q(i)."""
        assert len(finite_places_above(gaussian, 5)) == 2

        inert = finite_places_above(gaussian, 3)
        assert len(inert) == 1
        assert (inert[0].ramification_e, inert[0].residue_f) == (1, 2)

        ramified = finite_places_above(gaussian, 2)
        assert len(ramified) == 1
        assert (ramified[0].ramification_e, ramified[0].residue_f) == (2, 1)
        assert ramified[0].id == "p2.0"

    def test_not_prime(self, gaussian):
        """Test that composite numbers are rejected."""
        with pytest.raises(ValueError, match="not prime"):
            finite_places_above(gaussian, 6)

    def test_unsupported_prime(self):
        """Test that Z[sqrt 5] at 2 is reported as unsupported."""
        field = NumberField(IntPolynomial((-5, 0, 1)))

        with pytest.raises(UnsupportedPrimeError):
            finite_places_above(field, 2)


class TestAbsoluteValues:
    """Tests for normalized and unnormalized absolute values."""

    def test_rational_values(self):
        """Test the usual absolute values on Q."""
        q = NumberField.rationals()
        x = q.from_rational(Fraction(-3, 4))

        assert abs_value(x, archimedean_places(q)[0]).contains(Fraction(3, 4))
        two_adic = abs_value(x, finite_places_above(q, 2)[0])
        assert two_adic == PadicPower(2, 2)

    def test_ramified_value(self, gaussian):
        """Test ||1 + i||_2 = 2^(-1/2) for the ramified place above 2."""
        place = finite_places_above(gaussian, 2)[0]
        beta = gaussian.generator + 1

        unnormalized = abs_value(beta, place, Normalization.UNNORMALIZED)
        normalized = AbsoluteValue(place)(beta)

        assert unnormalized == PadicPower(2, Fraction(-1, 2))
        assert normalized == PadicPower(2, Fraction(-1, 2))

    def test_complex_normalized(self, gaussian):
        """Test that the normalized value at a complex place of Q(i) is the usual one."""
        place = archimedean_places(gaussian)[0]
        beta = gaussian.element([3, 4])

        assert abs_value(beta, place).contains(5)

    def test_candidate_primes(self, gaussian):
        """Test denominators, norms and the discriminant feed the candidates."""
        q = NumberField.rationals()

        assert candidate_finite_places([q.from_rational(Fraction(3, 2))]) == [2, 3]
        assert candidate_finite_places([gaussian.generator + 2]) == [2, 5]

    def test_candidate_primes_of_zero(self, gaussian):
        """Test that the zero vector has no candidate places."""
        with pytest.raises(ZeroPolynomialError):
            candidate_finite_places([gaussian.zero])


class TestProductFormula:
    """Tests for the product formula check."""

    def test_golden(self, golden):
        """Test the product formula for t + 2 in the golden field."""
        report = product_formula_check(golden.generator + 2)

        assert report.norm == 5
        assert report.finite_product == Fraction(1, 5)
        assert report.passed

    def test_gaussian_with_denominator(self, gaussian):
        """Test an element with a denominator."""
        report = product_formula_check(gaussian.element([Fraction(1, 3), 1]))

        assert report.norm == Fraction(10, 9)
        assert report.passed

    def test_zero_rejected(self, golden):
        """Test that zero has no product formula."""
        with pytest.raises(ZeroDivisionError):
            product_formula_check(golden.zero)

    def test_large_norm(self):
        """Test an element whose norm is far above the float range of exactness."""
        field = NumberField(IntPolynomial((-2, 0, 1)), name="Qsqrt2")

        report = product_formula_check(field.element([3000, 1000]))

        assert report.norm == 7_000_000
        assert report.radius <= 1e-10
        assert report.passed

    def test_lehmer_with_denominator(self):
        """Test a dense element of Lehmer's field with a denominator."""
        field = get_corpus_registry().get_field("lehmer")
        beta = field.element([4, -3, 1, 0, 2, -1, 5, 0, -2, -9], 6)

        report = product_formula_check(beta)

        assert report.finite_product * report.norm == 1
        assert report.passed


def random_element(field: NumberField, rng: random.Random, bound: int = 6, max_den: int = 1):
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in range(field.degree)]
        beta = field.element(coeffs, rng.randint(1, max_den))
        if not beta.is_zero:
            return beta


class TestAbsoluteValueProperties:
    """Tests for multiplicativity, integrality and local degrees."""

    def test_finite_multiplicativity(self):
        """Test ||beta*gamma||_v = ||beta||_v * ||gamma||_v exactly at finite places."""
        rng = random.Random(11)
        registry = get_corpus_registry()
        for config in registry.product_formula_fields():
            field = registry.get_field(config.id)
            for _ in range(4):
                beta = random_element(field, rng, max_den=4)
                gamma = random_element(field, rng, max_den=4)
                for p in candidate_finite_places([beta, gamma, beta * gamma]):
                    for place in finite_places_above(field, p):
                        product = abs_value(beta * gamma, place)

                        assert product == abs_value(beta, place) * abs_value(gamma, place)

    def test_archimedean_multiplicativity(self):
        """Test multiplicativity of the normalized value at every Archimedean place."""
        rng = random.Random(12)
        registry = get_corpus_registry()
        for config in registry.product_formula_fields():
            field = registry.get_field(config.id)
            for _ in range(4):
                beta = random_element(field, rng, max_den=4)
                gamma = random_element(field, rng, max_den=4)
                with working_precision(128):
                    for place in archimedean_places(field):
                        product = abs_value(beta * gamma, place)
                        factors = abs_value(beta, place) * abs_value(gamma, place)

                        assert product.overlaps(factors)

    def test_integral_elements_bounded_at_finite_places(self):
        """Test ||beta||_v <= 1 for beta in Z[t] at every place above the candidate primes."""
        rng = random.Random(13)
        registry = get_corpus_registry()
        for config in registry.product_formula_fields():
            field = registry.get_field(config.id)
            for _ in range(5):
                beta = random_element(field, rng, bound=9)
                for p in candidate_finite_places([beta], extra_integers=[2, 3]):
                    for place in finite_places_above(field, p):
                        for norm_kind in Normalization:
                            value = abs_value(beta, place, norm_kind)

                            assert value <= PadicPower.one(p)

    def test_local_degrees_sum_to_field_degree(self):
        """Test sum of e*f over the places above p equals [K:Q] for each corpus field."""
        registry = get_corpus_registry()
        for config in registry.list_fields():
            field = registry.get_field(config.id)
            for p in primerange(2, 30):
                if config.id == "sqrt5" and p == 2:
                    continue
                places = finite_places_above(field, p)

                assert sum(pl.local_degree for pl in places) == field.degree, (config.id, p)

    def test_archimedean_degrees_sum_to_field_degree(self):
        """Test r1 + 2*r2 = [K:Q] for each corpus field."""
        registry = get_corpus_registry()
        for config in registry.list_fields():
            field = registry.get_field(config.id)

            assert sum(pl.local_degree for pl in archimedean_places(field)) == field.degree
