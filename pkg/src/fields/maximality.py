"""
Dedekind's p-maximality criterion and the irreducibility certificate for
defining polynomials.
"""

import logging
from itertools import combinations

from src.core.errors import IrreducibilityNotCertifiedError
from src.exact.integers import small_primes
from src.exact.modular import factor_mod_p, gf_gcd_polys
from src.exact.polynomials import IntPolynomial, discriminant

from .number_field import NumberField

logger = logging.getLogger(__name__)


def _product(polys: list[IntPolynomial]) -> IntPolynomial:
    acc = IntPolynomial((1,))
    for g in polys:
        acc = acc * g
    return acc


def p_maximality_test(field: NumberField, p: int) -> bool:
    """
    Whether Z[theta] is maximal at p (Dedekind's criterion).

    With f = prod g_i^e_i mod p, put g = prod g_i and h = prod g_i^(e_i - 1)
    (integer lifts) and F = (g*h - f)/p. Z[theta] is p-maximal iff
    gcd(F, g, h) = 1 over GF(p).

    Args:
        field: Number field Q[x]/(f)
        p: Prime

    Returns:
        True iff Z[theta] is p-maximal
    """
    disc = field.discriminant
    if disc.numerator % (p * p) != 0:
        return True
    f = field.defining_poly
    factors = factor_mod_p(f, p)
    g = _product([gi for gi, _ in factors])
    h = _product([IntPolynomial((1,))] + [gi for gi, e in factors for _ in range(e - 1)])
    diff = g * h - f
    if any(c % p for c in diff.coeffs):
        raise ArithmeticError(f"lifted factorization is not congruent to f mod {p}")
    F = IntPolynomial(tuple(c // p for c in diff.coeffs))
    common = gf_gcd_polys([F, g, h], p)
    maximal = common.degree == 0
    logger.debug(f"DEDEKIND | field={field.name} | p={p} | maximal={maximal}")
    return maximal


def _subset_sums(degrees: list[int]) -> set[int]:
    sums: set[int] = set()
    for r in range(1, len(degrees)):
        for combo in combinations(degrees, r):
            sums.add(sum(combo))
    return sums


def certify_irreducible(f: IntPolynomial, prime_bound: int = 200, prime_count: int = 20) -> None:
    """
    Certify that a monic integer polynomial is irreducible over Q.

    Accepts f if it is irreducible modulo some prime p <= prime_bound with
    p not dividing disc(f). Otherwise every factor over Q must have a degree
    that is a sub-sum of each factorization pattern mod p; f is accepted when
    no proper degree survives the patterns of up to `prime_count` such primes.

    Raises:
        IrreducibilityNotCertifiedError: If neither test succeeds.
    """
    d = f.degree
    if d <= 1:
        return
    disc = discriminant(f)
    if disc == 0:
        raise IrreducibilityNotCertifiedError(
            f"irreducibility not certified: {f} has repeated roots"
        )
    possible = set(range(1, d))
    used = 0
    for p in small_primes(prime_bound):
        if disc.numerator % p == 0:
            continue
        degrees = [g.degree for g, e in factor_mod_p(f, p) for _ in range(e)]
        if len(degrees) == 1:
            logger.debug(f"IRREDUCIBLE_MOD_P | poly={f} | p={p}")
            return
        possible &= _subset_sums(degrees)
        used += 1
        if not possible:
            logger.debug(f"IRREDUCIBLE_BY_PATTERNS | poly={f} | primes={used}")
            return
        if used >= prime_count:
            break
    raise IrreducibilityNotCertifiedError(
        f"irreducibility not certified for {f}: degree patterns admit factors of degree "
        f"{sorted(possible)}"
    )
