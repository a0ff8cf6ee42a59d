"""
The one-variable case: an algebraic number alpha and a rational polynomial T
of degree at most N, with local values

    U_v(alpha, T) = |T(alpha)|_v / max{1, |alpha|_v}^N.

Multiplying over all places gives h(alpha)^N * U(alpha, T) = 1 by the
product formula. The report carries both h * U and h^N * U together with
the exponent e solving h^e * U = 1, so the two readings can be compared.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from src.config import get_settings
from src.core.errors import ConvergenceError, DimensionMismatchError, TVanishesAtPointError
from src.exact.polynomials import RatPolynomial
from src.fields.number_field import FieldElement, norm
from src.numeric.ball import Ball, ball_max, ball_product
from src.numeric.refine import refine
from src.places.absolute import arch_abs, candidate_finite_places, finite_abs
from src.places.archimedean import archimedean_places
from src.places.finite import finite_places_above
from src.places.place import LocalValue, Normalization, PadicPower, Place, padic_max
from src.places.product import exact_product_ball

from .polynomials import HomogeneousPoly
from .sup_norm import sup_norm_arch, sup_norm_finite

logger = logging.getLogger(__name__)


@dataclass
class UnivariateRow:
    place: Place
    value: LocalValue  # |T(alpha)|_v
    height: LocalValue  # max{1, |alpha|_v}
    u: LocalValue
    sup_norm: Optional[LocalValue] = None  # nu_v(T) on the closed unit disc


@dataclass
class UnivariateReport:
    """Global and per-place values for a univariate (alpha, T, N)."""

    degree_bound: int
    height: Ball
    u: Ball
    height_times_u: Ball
    height_power_times_u: Ball
    observed_exponent: Optional[Ball]
    rows: list[UnivariateRow] = field(default_factory=list)

    @property
    def radius(self):
        return max(self.height.rad, self.height_power_times_u.rad)

    @property
    def passed(self) -> bool:
        return self.height_power_times_u.contains(1)


def evaluate_at(T: RatPolynomial, alpha: FieldElement) -> FieldElement:
    """T(alpha) by Horner's rule in the field of alpha."""
    acc = alpha.field.zero
    for c in reversed(T.coeffs):
        acc = acc * alpha + c
    return acc


def _finite_row(alpha, value, N, place) -> UnivariateRow:
    height = padic_max([PadicPower.one(place.p), finite_abs(alpha, place)])
    local = finite_abs(value, place)
    return UnivariateRow(place, local, height, local / height**N)


def _assemble(alpha, value, N, finite_rows) -> UnivariateReport:
    rows = list(finite_rows)
    arch_heights, arch_us = [], []
    for place in archimedean_places(alpha.field):
        exponent = Fraction(place.local_degree, place.field.degree)
        unnormalized = ball_max(1, arch_abs(alpha, place, Normalization.UNNORMALIZED))
        height = unnormalized.rational_power(exponent)
        local = arch_abs(value, place, Normalization.UNNORMALIZED)
        u = (local / unnormalized**N).nonnegative_power(exponent)
        rows.append(UnivariateRow(place, local.nonnegative_power(exponent), height, u))
        arch_heights.append(height)
        arch_us.append(u)

    height = ball_product(arch_heights) * exact_product_ball(r.height for r in finite_rows)
    u = ball_product(arch_us) * exact_product_ball(r.u for r in finite_rows)
    identity = ball_product(h**N * v for h, v in zip(arch_heights, arch_us))
    identity = identity * exact_product_ball(r.height**N * r.u for r in finite_rows)

    if not u.is_positive():
        raise ConvergenceError(f"U({alpha}, T) is not separated from 0")
    observed = None
    log_height = height.log()
    if not log_height.contains_zero():
        observed = -u.log() / log_height
    return UnivariateReport(N, height, u, height * u, identity, observed, rows)


def univariate_u(
    alpha: FieldElement,
    T: RatPolynomial,
    N: int,
    target_radius: Optional[float] = None,
    with_sup_norms: bool = True,
) -> UnivariateReport:
    """
    U(alpha, T) = prod_v U_v(alpha, T) with every local value.

    Args:
        alpha: Algebraic number in a presented field
        T: Rational polynomial with deg T <= N
        N: Degree bound (the exponent on max{1, |alpha|_v})
        target_radius: Radius of h^N * U (default tolerance)
        with_sup_norms: Also report nu_v(T) per place

    Raises:
        TVanishesAtPointError: If T(alpha) = 0.
        DimensionMismatchError: If deg T > N.
    """
    if T.degree > N:
        raise DimensionMismatchError(f"deg T = {T.degree} exceeds the degree bound N = {N}")
    value = evaluate_at(T, alpha)
    if value.is_zero:
        raise TVanishesAtPointError(f"T vanishes at {alpha}")
    field_ = alpha.field
    extra = [norm(value)] + [c for c in T.coeffs if c != 0]
    primes = candidate_finite_places([field_.one, alpha], extra)
    finite_rows = [
        _finite_row(alpha, value, N, place)
        for p in primes
        for place in finite_places_above(field_, p)
    ]
    target = target_radius if target_radius is not None else get_settings().default_tolerance
    report = refine(
        lambda: _assemble(alpha, value, N, finite_rows),
        target,
        label="univariate_u",
    )
    if with_sup_norms:
        form = HomogeneousPoly.homogenize(T)
        for row in report.rows:
            if isinstance(row.u, PadicPower):
                row.sup_norm = sup_norm_finite(form, row.place)
            else:
                row.sup_norm = sup_norm_arch(form, row.place, target)
    logger.info(
        f"UNIVARIATE_U | alpha={alpha} | N={N} | places={len(report.rows)} | "
        f"observed_exponent={report.observed_exponent!r}"
    )
    return report
