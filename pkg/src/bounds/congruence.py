"""
Height lower bounds on X(F) \\ X(T) from an auxiliary form T congruent to F.

If F, T in Z[x_1..x_N] have the same degree, T = F mod m and a lies on
F = 0 but not on T = 0, then T(a) = (T - F)(a) has every finite absolute
value at most |m|_v times the local height, which gives

    H(a)^deg F >= m / L1(T),

with L1(T) the sum of the absolute values of T's coefficients.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from src.config import get_settings
from src.core.errors import (
    BoundInapplicableError,
    CongruenceError,
    DimensionMismatchError,
    PointNotOnVarietyError,
    ZeroPolynomialError,
)
from src.functionals.polynomials import HomogeneousPoly
from src.heights.projective import projective_height_power
from src.heights.vectors import ProjectiveVector
from src.numeric.ball import Ball, mpf_to_fraction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CongruencePair:
    """Integer forms F and T of equal shape with T = F mod m."""

    F: HomogeneousPoly
    T: HomogeneousPoly
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise CongruenceError(f"modulus must be a positive integer, got {self.m}")
        if not check_congruence(self.F, self.T, self.m):
            raise CongruenceError(f"T = {self.T} is not congruent to F = {self.F} mod {self.m}")

    @property
    def bound(self) -> Fraction:
        return height_lower_bound(self.F, self.T, self.m)


def _integer_terms(poly: HomogeneousPoly, name: str) -> dict[tuple[int, ...], int]:
    if not poly.is_integral():
        raise ValueError(f"{name} = {poly} must have integer coefficients")
    return poly.integer_terms()


def check_congruence(F: HomogeneousPoly, T: HomogeneousPoly, m: int) -> bool:
    """
    True iff every coefficient of T - F is divisible by m.

    Terms present in only one of the forms count with coefficient 0 in the other.

    Raises:
        DimensionMismatchError: If F and T differ in degree or variable count.
    """
    if not F.same_shape(T):
        raise DimensionMismatchError(
            f"F has shape ({F.num_vars}, {F.degree}), T has ({T.num_vars}, {T.degree})"
        )
    f_terms = _integer_terms(F, "F")
    t_terms = _integer_terms(T, "T")
    return all(
        (t_terms.get(e, 0) - f_terms.get(e, 0)) % m == 0 for e in set(f_terms) | set(t_terms)
    )


def l1_infty(T: HomogeneousPoly) -> int:
    """Sum of |c_r| over the coefficients of an integer form."""
    if T.is_zero:
        raise ZeroPolynomialError("L1 norm of the zero polynomial")
    return sum(abs(c) for c in _integer_terms(T, "T").values())


def height_lower_bound(F: HomogeneousPoly, T: HomogeneousPoly, m: int) -> Fraction:
    """
    m / L1(T), a lower bound for H(a)^deg F on X(F) \\ X(T).

    Raises:
        CongruenceError: If T is not congruent to F mod m.
    """
    if m < 1:
        raise CongruenceError(f"modulus must be a positive integer, got {m}")
    if not check_congruence(F, T, m):
        raise CongruenceError(f"T = {T} is not congruent to F = {F} mod {m}")
    bound = Fraction(m, l1_infty(T))
    if m == 1:
        logger.warning(f"TRIVIAL_BOUND | m=1 | bound={bound} | T={T}")
    return bound


@dataclass
class PointReport:
    """Outcome of checking one point against the congruence bound."""

    point: ProjectiveVector
    bound: Fraction
    height_power: Ball
    tolerance: float

    @property
    def radius(self):
        return self.height_power.rad

    @property
    def passed(self) -> bool:
        return mpf_to_fraction(self.height_power.upper) >= self.bound - Fraction(self.tolerance)

    @property
    def tight(self) -> bool:
        return self.height_power.contains(self.bound)


def verify_point(
    a: ProjectiveVector,
    F: HomogeneousPoly,
    T: HomogeneousPoly,
    m: int,
    tolerance: Optional[float] = None,
) -> PointReport:
    """
    Compare H(a)^deg F with m / L1(T) at a point of X(F) \\ X(T).

    Membership is decided exactly in the field of a. The check passes when
    the upper end of the height enclosure reaches bound - tolerance, and is
    tight when the enclosure contains the bound.

    Raises:
        PointNotOnVarietyError: If F(a) != 0.
        BoundInapplicableError: If T(a) = 0.
        CongruenceError: If T is not congruent to F mod m.
    """
    tol = tolerance if tolerance is not None else get_settings().default_tolerance
    if F.num_vars != a.dimension or T.num_vars != a.dimension:
        raise DimensionMismatchError(
            f"forms in {F.num_vars} variables, point of length {a.dimension}"
        )
    if not a.field.coerce(F(a.coords)).is_zero:
        raise PointNotOnVarietyError(f"{a} is not on F = 0")
    if a.field.coerce(T(a.coords)).is_zero:
        raise BoundInapplicableError(f"{a} lies on T = 0; the bound does not apply")
    bound = height_lower_bound(F, T, m)
    height_power = projective_height_power(a, F.degree, tol)
    report = PointReport(a, bound, height_power, tol)
    logger.info(
        f"POINT_CHECKED | point={a} | bound={bound} | "
        f"height_power={report.height_power!r} | passed={report.passed} | tight={report.tight}"
    )
    return report
