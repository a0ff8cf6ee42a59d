"""
Polynomial arithmetic modulo p and p-adic Hensel lifting.

Thin wrappers around sympy.polys.galoistools (dense, high-to-low lists over
GF(p)) and sympy's multifactor Hensel lift, converted to the low-to-high
IntPolynomial convention used everywhere else.
"""

import logging

from sympy import ZZ
from sympy.polys.factortools import dup_zz_hensel_lift
from sympy.polys.galoistools import (
    gf_add,
    gf_factor,
    gf_from_int_poly,
    gf_gcd,
    gf_mul,
    gf_pow,
    gf_quo,
    gf_rem,
    gf_to_int_poly,
)

from .polynomials import IntPolynomial

logger = logging.getLogger(__name__)


def to_gf(f: IntPolynomial, p: int) -> list:
    """Dense GF(p) representation (high-to-low, residues in [0, p))."""
    return gf_from_int_poly([ZZ(c) for c in reversed(f.coeffs)], p)


def from_gf(f: list, p: int, symmetric: bool = False) -> IntPolynomial:
    return IntPolynomial(tuple(int(c) for c in reversed(gf_to_int_poly(f, p, symmetric=symmetric))))


def reduce_mod(f: IntPolynomial, modulus: int, symmetric: bool = True) -> IntPolynomial:
    """Reduce coefficients modulo `modulus`, optionally into the symmetric range."""
    out = []
    for c in f.coeffs:
        r = c % modulus
        if symmetric and r > modulus // 2:
            r -= modulus
        out.append(r)
    return IntPolynomial(tuple(out))


def factor_mod_p(f: IntPolynomial, p: int) -> list[tuple[IntPolynomial, int]]:
    """
    Factor f over GF(p) into distinct monic irreducibles with multiplicities.

    Args:
        f: Integer polynomial, nonzero mod p
        p: Prime

    Returns:
        [(factor, multiplicity)], factors with coefficients in [0, p), sorted
        lexicographically by their low-to-high coefficients

    Raises:
        ValueError: If f vanishes identically mod p.
    """
    fp = to_gf(f, p)
    if not fp:
        raise ValueError(f"polynomial vanishes identically mod {p}")
    _, factors = gf_factor(fp, p, ZZ)
    result = [(from_gf(g, p), int(k)) for g, k in factors]
    return sorted(result, key=lambda item: item[0].coeffs)


def gf_gcd_polys(polys: list[IntPolynomial], p: int) -> IntPolynomial:
    """Monic gcd over GF(p) of several integer polynomials."""
    acc: list = []
    for f in polys:
        acc = gf_gcd(acc, to_gf(f, p), p, ZZ)
    return from_gf(acc, p)


def mul_mod(f: IntPolynomial, g: IntPolynomial, p: int) -> IntPolynomial:
    return from_gf(gf_mul(to_gf(f, p), to_gf(g, p), p, ZZ), p)


def pow_mod(f: IntPolynomial, n: int, p: int) -> IntPolynomial:
    return from_gf(gf_pow(to_gf(f, p), n, p, ZZ), p)


def add_mod(f: IntPolynomial, g: IntPolynomial, p: int) -> IntPolynomial:
    return from_gf(gf_add(to_gf(f, p), to_gf(g, p), p, ZZ), p)


def quo_mod(f: IntPolynomial, g: IntPolynomial, p: int) -> IntPolynomial:
    return from_gf(gf_quo(to_gf(f, p), to_gf(g, p), p, ZZ), p)


def rem_mod(f: IntPolynomial, g: IntPolynomial, p: int) -> IntPolynomial:
    return from_gf(gf_rem(to_gf(f, p), to_gf(g, p), p, ZZ), p)


def hensel_lift(
    f: IntPolynomial, factors: list[IntPolynomial], p: int, k: int
) -> list[IntPolynomial]:
    """
    Multifactor Hensel lifting of a coprime factorization mod p to mod p^k.

    Args:
        f: Monic integer polynomial
        factors: Monic, pairwise coprime mod p, with f = prod(factors) mod p
        p: Prime
        k: Target exponent

    Returns:
        Monic lifts F_i = factors[i] mod p with f = prod(F_i) mod p^k,
        coefficients in the symmetric range mod p^k
    """
    if f.leading != 1:
        raise ValueError("Hensel lifting expects a monic polynomial")
    lifted = dup_zz_hensel_lift(
        ZZ(p),
        [ZZ(c) for c in reversed(f.coeffs)],
        [[ZZ(c) for c in reversed(g.coeffs)] for g in factors],
        k,
        ZZ,
    )
    logger.debug(f"PADIC_LIFT | p={p} | k={k} | factors={len(factors)}")
    modulus = p**k
    return [reduce_mod(IntPolynomial(tuple(int(c) for c in reversed(F))), modulus) for F in lifted]
