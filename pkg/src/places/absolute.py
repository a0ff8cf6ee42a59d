"""
Absolute values at places, the candidate set of finite places for a list of
elements, and the product-formula self-check.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Union

from src.config import get_settings
from src.core.errors import ConvergenceError, PrecisionExhaustedError, ZeroPolynomialError
from src.core.precision import PrecisionContext
from src.exact.integers import p_valuation, prime_divisors
from src.exact.polynomials import resultant
from src.fields.number_field import FieldElement, NumberField, norm
from src.numeric.ball import Ball, ball_product
from src.numeric.refine import refine

from .archimedean import archimedean_places, embed
from .finite import finite_places_above
from .place import (
    ArchimedeanPlace,
    FinitePlace,
    LocalValue,
    Normalization,
    PadicPower,
    Place,
)

logger = logging.getLogger(__name__)


def finite_exponent(beta: FieldElement, place: FinitePlace) -> Fraction:
    """
    w with ||beta||_v = p^(-w), for nonzero beta.

    The valuation of Res(G_k, b) is trusted once it sits at least the safety
    margin below k; otherwise G is lifted further.
    """
    settings = get_settings()
    p = place.p
    k = place.precision_k
    n_v = place.local_degree
    while k <= settings.padic_precision_cap:
        res = resultant(place.local_factor_at(k), beta.numerator)
        if res != 0:
            v = p_valuation(res.numerator, p)
            if v <= k - settings.padic_safety_margin:
                return Fraction(v, n_v) - p_valuation(beta.denominator, p)
        logger.debug(f"PADIC_ESCALATE | place={place.id} | k={k}")
        k *= 2
    raise PrecisionExhaustedError(
        f"p-adic precision cap {settings.padic_precision_cap} reached evaluating |{beta}| at "
        f"{place.id}"
    )


def finite_abs(
    beta: FieldElement, place: FinitePlace, normalization: Normalization = Normalization.NORMALIZED
) -> PadicPower:
    if beta.is_zero:
        return PadicPower.zero(place.p)
    w = finite_exponent(beta, place)
    if normalization == Normalization.NORMALIZED:
        w *= Fraction(place.local_degree, place.field.degree)
    return PadicPower(place.p, -w)


def arch_abs(
    beta: FieldElement,
    place: ArchimedeanPlace,
    normalization: Normalization = Normalization.NORMALIZED,
) -> Ball:
    """|beta| at `place` at the current working precision."""
    if beta.is_zero:
        return Ball(0)
    if beta.is_rational:
        value = Ball(abs(beta.as_rational()))
    else:
        value = abs(embed(beta, place))
    if normalization == Normalization.UNNORMALIZED:
        return value
    exponent = Fraction(place.local_degree, place.field.degree)
    if exponent == 1:
        return value
    if not value.is_positive():
        raise ConvergenceError(f"|{beta}| at {place.id} is not separated from 0")
    return value.rational_power(exponent)


def abs_value(
    beta: FieldElement,
    place: Place,
    normalization: Normalization = Normalization.NORMALIZED,
    target_radius: Optional[float] = None,
) -> LocalValue:
    """
    ||beta||_v or |beta|_v = ||beta||_v^(d_v/d).

    Args:
        beta: Element of the field owning `place`
        place: Archimedean or finite place
        normalization: Which of the two absolute values to return
        target_radius: Enclosure radius at Archimedean places (default tolerance)

    Returns:
        A Ball at Archimedean places, an exact PadicPower at finite places
    """
    beta = place.field.coerce(beta)
    if isinstance(place, FinitePlace):
        return finite_abs(beta, place, normalization)
    if PrecisionContext.get_current_or_none() is not None:
        return arch_abs(beta, place, normalization)
    target = target_radius if target_radius is not None else get_settings().default_tolerance
    return refine(
        lambda: arch_abs(beta, place, normalization), target, label=f"abs_value@{place.id}"
    )


@dataclass
class AbsoluteValue:
    """A place paired with a normalization, callable on field elements."""

    place: Place
    normalization: Normalization = Normalization.NORMALIZED

    def __call__(self, beta: FieldElement, target_radius: Optional[float] = None) -> LocalValue:
        return abs_value(beta, self.place, self.normalization, target_radius)


def _rational_parts(elements: Iterable[FieldElement]) -> tuple[set[int], int]:
    primes: set[int] = set()
    common = 0
    for a in elements:
        primes |= prime_divisors(a.denominator)
        if not a.is_zero:
            common = math.gcd(common, abs(norm(a).numerator))
    return primes, common


def candidate_finite_places(
    elements: Iterable[FieldElement], extra_integers: Iterable[Union[int, Fraction]] = ()
) -> list[int]:
    """
    Primes p at which max_i |a_i|_v may differ from 1 for some v | p.

    Collects the primes of every denominator, of gcd_i |N(a_i)| over the
    nonzero a_i, of disc(f), and of any extra integers or rationals supplied.

    Raises:
        ZeroPolynomialError: If every element is zero.
    """
    elements = list(elements)
    if not elements or all(a.is_zero for a in elements):
        raise ZeroPolynomialError("candidate places need a nonzero element")
    field_ = elements[0].field
    primes, common = _rational_parts(elements)
    primes |= prime_divisors(common)
    disc = field_.discriminant
    primes |= prime_divisors(disc.numerator) | prime_divisors(disc.denominator)
    for extra in extra_integers:
        extra = Fraction(extra)
        primes |= prime_divisors(extra.numerator) | prime_divisors(extra.denominator)
    return sorted(primes)


def places_for(
    field_: NumberField, primes: Iterable[int]
) -> tuple[list[ArchimedeanPlace], list[FinitePlace]]:
    """Archimedean places at the current precision and all places above `primes`."""
    finite = [pl for p in primes for pl in finite_places_above(field_, p)]
    return archimedean_places(field_), finite


@dataclass
class ProductFormulaReport:
    """Outcome of product_formula_check."""

    element: str
    norm: Fraction
    finite_product: Fraction
    archimedean_product: Ball
    finite_ok: bool
    archimedean_ok: bool
    finite_rows: list[tuple[str, PadicPower]] = field(default_factory=list)
    archimedean_rows: list[tuple[str, Ball]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.finite_ok and self.archimedean_ok

    @property
    def radius(self):
        return self.archimedean_product.rad


def product_formula_check(
    beta: FieldElement, target_radius: Optional[float] = None
) -> ProductFormulaReport:
    """
    Check prod_v ||beta||_v^(d_v) = 1 split into its rational halves.

    The finite half must equal |N(beta)|^-1 exactly and the Archimedean half
    must enclose |N(beta)|.

    Raises:
        ZeroDivisionError: If beta is zero.
    """
    if beta.is_zero:
        raise ZeroDivisionError("product formula needs a nonzero element")
    field_ = beta.field
    n = abs(norm(beta))
    finite_product = Fraction(1)
    finite_rows = []
    for p in candidate_finite_places([beta]):
        for place in finite_places_above(field_, p):
            w = finite_exponent(beta, place) * place.local_degree
            if w.denominator != 1:
                raise ArithmeticError(f"non-integral local norm exponent {w} at {place.id}")
            finite_rows.append((place.id, PadicPower(p, -w)))
            finite_product *= Fraction(p) ** int(-w)

    def arch_side() -> tuple[list[tuple[str, Ball]], Ball]:
        rows = []
        for place in archimedean_places(field_):
            value = arch_abs(beta, place, Normalization.UNNORMALIZED)
            rows.append((place.id, value**place.local_degree))
        return rows, ball_product(v for _, v in rows)

    target = target_radius if target_radius is not None else get_settings().default_tolerance
    arch_rows, arch_product = refine(
        arch_side,
        target,
        radius_of=lambda side: side[1].rad,
        label="product_formula",
    )
    report = ProductFormulaReport(
        element=str(beta),
        norm=n,
        finite_product=finite_product,
        archimedean_product=arch_product,
        finite_ok=finite_product * n == 1,
        archimedean_ok=arch_product.contains(n),
        finite_rows=finite_rows,
        archimedean_rows=arch_rows,
    )
    logger.info(
        f"PRODUCT_FORMULA | element={beta} | field={field_.name} | passed={report.passed}"
    )
    return report
