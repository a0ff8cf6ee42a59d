"""
Finite places above a rational prime p.

f is factored modulo p, the coprime groups g^e are Hensel-lifted to p^k, and
each lifted group is one place of K when e = 1. A group with e > 1 is
accepted only when its g-adic Newton polygon has a single slope s/e with
gcd(s, e) = 1, which makes it irreducible over Q_p with ramification e.
"""

import logging
import math
from typing import Optional

from sympy import isprime

from src.config import get_settings
from src.core.errors import PrecisionExhaustedError, UnsupportedPrimeError
from src.exact.integers import p_valuation
from src.exact.modular import factor_mod_p, hensel_lift, pow_mod, reduce_mod
from src.exact.polynomials import IntPolynomial
from src.fields.maximality import p_maximality_test
from src.fields.number_field import NumberField

from .place import FinitePlace

logger = logging.getLogger(__name__)


def residue_factors(field: NumberField, p: int) -> list[tuple[IntPolynomial, int]]:
    return field.memoize(("residue", p), lambda: factor_mod_p(field.defining_poly, p))


def lifted_factors(field: NumberField, p: int, k: int) -> list[IntPolynomial]:
    """Lifted local factors G_j = g_j^e_j mod p, modulo p^k, in residue-factor order."""

    def lift() -> list[IntPolynomial]:
        groups = [pow_mod(g, e, p) for g, e in residue_factors(field, p)]
        if len(groups) == 1:
            return [reduce_mod(field.defining_poly, p**k)]
        return hensel_lift(field.defining_poly, groups, p, k)

    return field.memoize(("lift", p, k), lift)


def _capped_valuation(c: int, p: int, k: int) -> int:
    c %= p**k
    return k if c == 0 else p_valuation(c, p)


def _adic_expansion(G: IntPolynomial, g: IntPolynomial, count: int) -> list[IntPolynomial]:
    digits = []
    rest = G.to_poly()
    gp = g.to_poly()
    for _ in range(count):
        q, r = rest.div(gp)
        digits.append(IntPolynomial.from_poly(r))
        rest = q
    digits.append(IntPolynomial.from_poly(rest))
    return digits


def single_slope_certificate(
    G: IntPolynomial, g: IntPolynomial, e: int, p: int, k: int
) -> Optional[bool]:
    """
    Newton-polygon test for G = sum a_i g^i (deg a_i < deg g), G = g^e mod p.

    Returns:
        True when v(a_0) = s with gcd(s, e) = 1 and every vertex lies on or
        above the segment from (0, s) to (e, 0); False when the polygon is
        not of that shape; None when p^k cannot resolve v(a_0).
    """
    digits = _adic_expansion(G, g, e)
    vals = [min((_capped_valuation(c, p, k) for c in a.coeffs), default=k) for a in digits]
    s = vals[0]
    if s >= k:
        return None
    if math.gcd(s, e) != 1:
        return False
    return all(e * vals[i] >= s * (e - i) for i in range(1, e))


def _certify_ramified(field: NumberField, p: int, index: int, g: IntPolynomial, e: int) -> None:
    settings = get_settings()
    k = settings.padic_start_precision
    while k <= settings.padic_precision_cap:
        verdict = single_slope_certificate(lifted_factors(field, p, k)[index], g, e, p, k)
        if verdict is True:
            return
        if verdict is False:
            raise UnsupportedPrimeError(
                p,
                f"repeated factor ({g})^{e} is not certified irreducible by a single-slope "
                "Newton polygon",
            )
        k *= 2
    raise PrecisionExhaustedError(
        f"p-adic precision cap {settings.padic_precision_cap} reached certifying a place above {p}"
    )


def _decompose(field: NumberField, p: int) -> list[FinitePlace]:
    if not p_maximality_test(field, p):
        raise UnsupportedPrimeError(p, "Z[theta] is not p-maximal (Dedekind criterion fails)")
    k = get_settings().padic_start_precision
    factors = residue_factors(field, p)
    lifted = lifted_factors(field, p, k)
    places = []
    for index, ((g, e), G) in enumerate(zip(factors, lifted)):
        if e > 1:
            _certify_ramified(field, p, index, g, e)
        places.append(FinitePlace(field, p, index, g, G, k, e, g.degree))
    total = sum(pl.local_degree for pl in places)
    if total != field.degree:
        raise ArithmeticError(f"local degrees above {p} sum to {total}, expected {field.degree}")
    logger.info(
        f"PLACES_DECOMPOSED | field={field.name} | p={p} | places={len(places)} | "
        f"ef={[(pl.ramification_e, pl.residue_f) for pl in places]}"
    )
    return places


def finite_places_above(field: NumberField, p: int) -> list[FinitePlace]:
    """
    All places of K above the rational prime p, ordered by residue factor.

    Args:
        field: Number field
        p: Rational prime

    Returns:
        One FinitePlace per prime of K above p

    Raises:
        ValueError: If p is not prime.
        UnsupportedPrimeError: If Z[theta] is not p-maximal or a ramified
            group fails the Newton-polygon certificate.
        PrecisionExhaustedError: If the certificate needs more than the cap.
    """
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    return field.memoize(("finite", p), lambda: _decompose(field, p))
