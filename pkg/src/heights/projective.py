"""
Local and global projective heights, and subspace heights through Plucker
coordinates.
"""

from fractions import Fraction
from typing import Optional, Sequence, Union

from src.config import get_settings
from src.core.errors import DependentBasisError
from src.core.precision import PrecisionContext
from src.numeric.ball import Ball, ball_max
from src.numeric.refine import refine
from src.places.absolute import arch_abs, candidate_finite_places, finite_abs
from src.places.place import (
    ArchimedeanPlace,
    FinitePlace,
    LocalValue,
    Normalization,
    PadicPower,
    Place,
    padic_max,
)
from src.places.product import GlobalProduct, evaluate_product, finite_factors, global_product

from .vectors import Coordinate, ProjectiveVector, WedgeVector, wedge_coordinates


def finite_projective_height(a: ProjectiveVector, place: FinitePlace) -> PadicPower:
    return padic_max([finite_abs(c, place, Normalization.NORMALIZED) for c in a])


def arch_projective_height(a: ProjectiveVector, place: ArchimedeanPlace) -> Ball:
    """max_i |a_i|_v at the current precision, normalized after taking the max."""
    best = Ball(0)
    for c in a:
        best = ball_max(best, arch_abs(c, place, Normalization.UNNORMALIZED))
    return best.nonnegative_power(Fraction(place.local_degree, place.field.degree))


def local_projective_height(
    a: ProjectiveVector, place: Place, target_radius: Optional[float] = None
) -> LocalValue:
    """
    H_v(a) = max_i |a_i|_v.

    Returns:
        An exact PadicPower at finite places, a Ball at Archimedean places
    """
    if isinstance(place, FinitePlace):
        return finite_projective_height(a, place)
    if PrecisionContext.get_current_or_none() is not None:
        return arch_projective_height(a, place)
    target = target_radius if target_radius is not None else get_settings().default_tolerance
    return refine(lambda: arch_projective_height(a, place), target, label="local_height")


def projective_height_report(
    a: ProjectiveVector, target_radius: Optional[float] = None
) -> GlobalProduct:
    primes = candidate_finite_places(a.coords)
    return global_product(
        a.field,
        primes,
        lambda place: finite_projective_height(a, place),
        lambda place: arch_projective_height(a, place),
        target_radius,
        label="projective_height",
    )


def projective_height(a: ProjectiveVector, target_radius: Optional[float] = None) -> Ball:
    """
    H(a) = prod_v H_v(a) over the Archimedean places and the candidate finite places.

    Raises:
        UnsupportedPrimeError: If a candidate prime is outside the supported class.
    """
    return projective_height_report(a, target_radius).value


def projective_height_power(
    a: ProjectiveVector, exponent: int, target_radius: Optional[float] = None
) -> Ball:
    """H(a)^exponent, refined until the power itself meets `target_radius`."""
    rows = finite_factors(
        a.field, candidate_finite_places(a.coords), lambda pl: finite_projective_height(a, pl)
    )
    target = target_radius if target_radius is not None else get_settings().default_tolerance
    return refine(
        lambda: evaluate_product(a.field, rows, lambda pl: arch_projective_height(a, pl)).value
        ** exponent,
        target,
        label="height_power",
    )


def span_wedge(
    basis: Union[WedgeVector, Sequence[Union[ProjectiveVector, Sequence[Coordinate]]]],
) -> WedgeVector:
    wedge = basis if isinstance(basis, WedgeVector) else wedge_coordinates(basis)
    if wedge.is_zero:
        raise DependentBasisError("basis vectors are linearly dependent (zero wedge)")
    return wedge


def subspace_height_report(
    basis: Sequence[ProjectiveVector], target_radius: Optional[float] = None
) -> GlobalProduct:
    return projective_height_report(span_wedge(basis).as_projective(), target_radius)


def subspace_height(
    basis: Sequence[ProjectiveVector], target_radius: Optional[float] = None
) -> Ball:
    """
    H(W) = H(w_1 ^ ... ^ w_M) for the span W of `basis`.

    Raises:
        DependentBasisError: If the basis vectors are linearly dependent.
    """
    return subspace_height_report(basis, target_radius).value
