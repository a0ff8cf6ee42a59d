"""Exact integer, rational, and polynomial arithmetic."""

from .integers import factor_integer, p_valuation, prime_divisors, rational_valuation, small_primes
from .modular import factor_mod_p, hensel_lift, reduce_mod
from .polynomials import (
    IntPolynomial,
    RatPolynomial,
    content_primitive,
    discriminant,
    format_polynomial,
    irreducible_factors,
    poly_gcd,
    resultant,
    squarefree_factors,
    to_fraction,
)

__all__ = [
    "IntPolynomial",
    "RatPolynomial",
    "content_primitive",
    "discriminant",
    "factor_integer",
    "factor_mod_p",
    "format_polynomial",
    "hensel_lift",
    "irreducible_factors",
    "p_valuation",
    "poly_gcd",
    "prime_divisors",
    "rational_valuation",
    "reduce_mod",
    "resultant",
    "small_primes",
    "squarefree_factors",
    "to_fraction",
]
