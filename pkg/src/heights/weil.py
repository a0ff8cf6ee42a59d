"""
Weil heights and Mahler measures.

h(alpha) = prod_v max{1, |alpha|_v} in the absolute normalization, so that
h(alpha)^deg(alpha) equals the Mahler measure of the minimal polynomial.
"""

import logging
from fractions import Fraction
from typing import Optional, Union

from src.config import get_settings
from src.core.errors import ConstantPolynomialError, ZeroPolynomialError
from src.exact.polynomials import (
    IntPolynomial,
    content_primitive,
    irreducible_factors,
    squarefree_factors,
)
from src.fields.number_field import FieldElement, NumberField
from src.numeric.ball import Ball, ball_max, ball_product
from src.numeric.refine import refine
from src.numeric.roots import isolate_roots
from src.places.absolute import arch_abs, candidate_finite_places, finite_abs
from src.places.place import ArchimedeanPlace, FinitePlace, Normalization, PadicPower
from src.places.product import GlobalProduct, evaluate_product, finite_factors, global_product

logger = logging.getLogger(__name__)


def _finite_weil_factor(alpha: FieldElement):
    def local(place: FinitePlace) -> PadicPower:
        value = finite_abs(alpha, place, Normalization.NORMALIZED)
        return value if PadicPower.one(place.p) < value else PadicPower.one(place.p)

    return local


def _arch_weil_factor(alpha: FieldElement):
    def local(place: ArchimedeanPlace) -> Ball:
        value = ball_max(1, arch_abs(alpha, place, Normalization.UNNORMALIZED))
        return value.rational_power(Fraction(place.local_degree, place.field.degree))

    return local


def weil_height_report(alpha: FieldElement, target_radius: Optional[float] = None) -> GlobalProduct:
    """Weil height with its local factors max{1, |alpha|_v}."""
    primes = candidate_finite_places([alpha.field.one, alpha])
    return global_product(
        alpha.field,
        primes,
        _finite_weil_factor(alpha),
        _arch_weil_factor(alpha),
        target_radius,
        label="weil_height",
    )


def _weil_height_here(alpha: FieldElement) -> Ball:
    primes = candidate_finite_places([alpha.field.one, alpha])
    rows = finite_factors(alpha.field, primes, _finite_weil_factor(alpha))
    return evaluate_product(alpha.field, rows, _arch_weil_factor(alpha)).value


def _root_of(poly: IntPolynomial) -> FieldElement:
    """A root of an irreducible integer polynomial as an element of a monic presentation."""
    lc = poly.leading
    if lc < 0:
        poly = IntPolynomial(tuple(-c for c in poly.coeffs))
        lc = -lc
    d = poly.degree
    # lc^(d-1) * poly(x/lc) is monic with root lc*alpha
    monic = IntPolynomial(
        tuple(c * lc ** (d - 1 - i) if i < d else 1 for i, c in enumerate(poly.coeffs))
    )
    field = NumberField(monic, assume_irreducible=True)
    return field.generator / lc


def algebraic_number(poly: IntPolynomial) -> FieldElement:
    """
    A root of `poly`, which must be irreducible over Q up to content.

    Raises:
        ValueError: If the primitive part of `poly` is reducible or a power.
    """
    factors = irreducible_factors(content_primitive(poly)[1])
    if len(factors) != 1 or factors[0][1] != 1:
        raise ValueError(f"{poly} is not irreducible; pass a minimal polynomial")
    return _root_of(factors[0][0])


def weil_height(
    alpha: Union[FieldElement, IntPolynomial], target_radius: Optional[float] = None
) -> Ball:
    """
    Absolute Weil height of an algebraic number.

    Args:
        alpha: Field element, or an irreducible integer polynomial standing
            for any of its roots (conjugates share a height)
        target_radius: Enclosure radius (default tolerance)

    Returns:
        Ball enclosing h(alpha); h(0) = 1

    Raises:
        UnsupportedPrimeError: If a candidate prime is outside the supported class.
    """
    if isinstance(alpha, IntPolynomial):
        alpha = algebraic_number(alpha)
    if alpha.is_zero:
        return Ball(1)
    return weil_height_report(alpha, target_radius).value


def _classical_measure_here(f: IntPolynomial) -> Ball:
    _, prim = content_primitive(f)
    acc = Ball(abs(prim.leading))
    for g, mult in squarefree_factors(prim):
        if g.degree < 1:
            continue
        for root in isolate_roots(g):
            acc = acc * ball_max(1, abs(root)) ** mult
    return acc


def _check_measurable(f: IntPolynomial) -> None:
    if f.is_zero:
        raise ZeroPolynomialError("Mahler measure of the zero polynomial")
    if f.degree < 1:
        raise ConstantPolynomialError("Mahler measure needs a polynomial of degree at least 1")


def mahler_measure(f: IntPolynomial, target_radius: Optional[float] = None) -> Ball:
    """
    mu(f) = |lc| * prod max(1, |root|) for the primitive part of f.

    Roots are isolated per squarefree factor and counted with multiplicity.

    Raises:
        ConstantPolynomialError: If deg f < 1.
    """
    _check_measurable(f)
    target = target_radius if target_radius is not None else get_settings().default_tolerance
    return refine(lambda: _classical_measure_here(f), target, label="mahler_measure")


def mahler_measure_from_heights(f: IntPolynomial, target_radius: Optional[float] = None) -> Ball:
    """
    mu(f) as prod_q h(root of q)^(deg q * e) over the irreducible factors q^e of
    the primitive part, each height computed from the places of Q(root).
    """
    _check_measurable(f)
    _, prim = content_primitive(f)
    roots = [(_root_of(q), q.degree * e) for q, e in irreducible_factors(prim) if q.degree >= 1]

    def compute() -> Ball:
        return ball_product(
            (Ball(1) if alpha.is_zero else _weil_height_here(alpha)) ** power
            for alpha, power in roots
        )

    target = target_radius if target_radius is not None else get_settings().default_tolerance
    result = refine(compute, target, label="mahler_measure_from_heights")
    logger.debug(f"MAHLER_FROM_HEIGHTS | poly={f} | factors={len(roots)}")
    return result
