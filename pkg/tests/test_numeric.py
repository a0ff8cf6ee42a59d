"""
Tests for ball arithmetic, root isolation and adaptive refinement.
"""

import random
from fractions import Fraction

import pytest
from mpmath import mpf

from src.core.errors import (
    BallDomainError,
    ConvergenceError,
    NotSquarefreeError,
    PrecisionExhaustedError,
)
from src.core.precision import PrecisionContext, current_bits, working_precision
from src.exact.polynomials import IntPolynomial, poly_gcd
from src.numeric import Ball, ball_max, ball_product, isolate_roots, refine
from src.numeric.ball import ComplexBall


class TestBall:
    """Tests for outward-rounded ball arithmetic."""

    def test_exact_integers(self):
        """Test that integer balls are exact."""
        b = Ball(3) + Ball(4)

        assert b.is_exact()
        assert b.contains(7)

    def test_one_third_is_enclosed(self):
        """Test that 1/3 is enclosed with a tiny radius."""
        with working_precision(64):
            third = Ball(Fraction(1, 3))

            assert third.contains(Fraction(1, 3))
            assert third.rad < mpf(2) ** -60
            assert (third * 3).contains(1)

    def test_division_by_zero_enclosure(self):
        """Test that dividing by a ball containing zero fails."""
        with pytest.raises(BallDomainError, match="containing 0"):
            Ball(1) / Ball.from_endpoints(-1, 1)

    def test_rational_power(self):
        """Test that 2^(1/2) squares back to 2."""
        with working_precision(80):
            root = Ball(2).rational_power(Fraction(1, 2))

            assert (root * root).contains(2)
            assert abs(float(root) - 2**0.5) < 1e-15

    def test_rational_power_needs_positive(self):
        """Test that fractional powers reject enclosures touching zero."""
        with pytest.raises(BallDomainError):
            Ball.from_endpoints(0, 1).rational_power(Fraction(1, 2))

    def test_nonnegative_power_reaching_zero(self):
        """Test fractional powers of an enclosure whose lower end is zero."""
        b = Ball.from_endpoints(0, 4).nonnegative_power(Fraction(1, 2))

        assert b.lower == 0
        assert b.contains(2)

    def test_log(self):
        """Test the logarithm and its domain."""
        assert Ball(1).log().contains(0)
        with pytest.raises(BallDomainError):
            Ball(0).log()

    def test_max_and_product(self):
        """Test ball_max and ball_product."""
        m = ball_max(Ball.from_endpoints(1, 3), Ball.from_endpoints(2, 4))

        assert m.lower == 2
        assert m.upper == 4
        assert ball_product([Ball(2), Ball(3), Fraction(1, 2)]).contains(3)


class TestPrecisionContext:
    """Tests for the working precision context."""

    def test_nesting_restores(self):
        """Test that nested blocks restore the outer precision."""
        with working_precision(128):
            with working_precision(256):
                assert current_bits() == 256
            assert current_bits() == 128
        assert PrecisionContext.get_current_or_none() is None

    def test_minimum_precision(self):
        """Test that very low precisions are rejected."""
        with pytest.raises(ValueError, match="at least 16 bits"):
            PrecisionContext.set(8)

    def test_get_current_outside_block(self):
        """Test that asking for the context outside a block fails."""
        with pytest.raises(RuntimeError, match="No precision context"):
            PrecisionContext.get_current()


class TestRootIsolation:
    """Tests for certified root isolation."""

    def test_golden_ratio_roots(self):
        """Test the two real roots of x^2 - x - 1."""
        with working_precision(64):
            roots = isolate_roots(IntPolynomial((-1, -1, 1)))

        assert len(roots) == 2
        assert all(r.is_real for r in roots)
        phi = Fraction(16180339887498948482, 10**19)
        assert roots[1].real.overlaps(Ball.from_mid_rad(phi, Fraction(1, 10**18)))

    def test_conjugate_pairs(self):
        """Test that x^2 + 1 has the conjugate pair +-i."""
        with working_precision(64):
            roots = isolate_roots(IntPolynomial((1, 0, 1)))

        assert not any(r.is_real for r in roots)
        assert roots[0].imag.contains(-1)
        assert roots[1].imag.contains(1)

    def test_not_squarefree(self):
        """Test that repeated roots are rejected."""
        with pytest.raises(NotSquarefreeError):
            isolate_roots(IntPolynomial((1, 2, 1)))

    def test_lehmer_roots_count(self):
        """Test isolating the ten roots of Lehmer's polynomial."""
        lehmer = IntPolynomial((1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1))
        with working_precision(128):
            roots = isolate_roots(lehmer)

        assert len(roots) == 10
        assert sum(1 for r in roots if r.is_real) == 2


class TestRefine:
    """Tests for the adaptive precision driver."""

    def test_refines_until_tight(self):
        """Test that refine returns a result at the requested radius."""
        result = refine(lambda: Ball(Fraction(1, 3)), 1e-30)

        assert result.rad <= mpf(1e-30)
        assert result.contains(Fraction(1, 3))

    def test_convergence_errors_trigger_retry(self):
        """Test that ConvergenceError raises the precision instead of failing."""
        seen = []

        def compute():
            seen.append(current_bits())
            if len(seen) < 3:
                raise ConvergenceError("not yet")
            return Ball(1)

        assert refine(compute, 1e-10, initial_bits=32).contains(1)
        assert seen == [32, 64, 128]

    def test_cap_exhausted(self):
        """Test that an unreachable target exhausts the cap."""
        with pytest.raises(PrecisionExhaustedError, match="precision cap"):
            refine(lambda: Ball.from_endpoints(0, 1), 1e-10, cap_bits=128)


def random_expression(rng: random.Random, depth: int) -> tuple[Fraction, Ball]:
    """A random arithmetic tree evaluated exactly and in ball arithmetic."""
    if depth == 0 or rng.random() < 0.25:
        leaf = Fraction(rng.randint(-50, 50), rng.randint(1, 30))
        return leaf, Ball(leaf)
    op = rng.choice("+-*/n|^")
    x, bx = random_expression(rng, depth - 1)
    if op == "n":
        return -x, -bx
    if op == "|":
        return abs(x), abs(bx)
    if op == "^":
        k = rng.randint(0, 3)
        return x**k, bx**k
    y, by = random_expression(rng, depth - 1)
    if op == "+":
        return x + y, bx + by
    if op == "-":
        return x - y, bx - by
    if op == "/" and y != 0 and not by.contains_zero():
        return x / y, bx / by
    return x * y, bx * by


class TestEnclosureProperties:
    """Tests for containment and root re-expansion on random inputs."""

    def test_expression_trees_contain_exact_value(self):
        """Test 1000 random expression trees enclose their exact rational value."""
        rng = random.Random(51)
        for _ in range(1000):
            bits = rng.choice([24, 53, 64, 128])
            with working_precision(bits):
                exact, ball = random_expression(rng, rng.randint(1, 5))

                assert ball.contains(exact)

    def test_roots_reexpand_to_coefficients(self):
        """Test lc * prod (x - r) encloses the coefficients of random squarefree f."""
        rng = random.Random(52)
        checked = 0
        while checked < 30:
            degree = rng.randint(1, 7)
            coeffs = [rng.randint(-9, 9) for _ in range(degree)]
            f = IntPolynomial(tuple(coeffs) + (rng.choice([-3, -1, 1, 2]),))
            if poly_gcd(f, f.derivative()).degree > 0:
                continue
            with working_precision(128):
                expanded = [ComplexBall.from_value(1)]
                for r in isolate_roots(f):
                    shifted = [ComplexBall.from_value(0)] + expanded
                    for i, c in enumerate(expanded):
                        shifted[i] = shifted[i] - r * c
                    expanded = shifted

                for c, e in zip(f.coeffs, expanded):
                    assert e.real.contains(Fraction(c, f.leading)), str(f)
                    assert e.imag.contains(0)
            checked += 1

    def test_radius_is_exact_outside_precision_block(self):
        """Test a ball built at high precision keeps its radius at the default precision."""
        with working_precision(512):
            ball = Ball(10**9) + Ball(Fraction(1, 3))
            inside = ball.rad

        assert ball.rad == inside
        assert ball.rad < mpf(2) ** -400
