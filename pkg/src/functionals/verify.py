"""
Numerical verification of the height/quotient-norm identities

    H(a)^M * U(a, T) = 1        (projective points and forms)
    H(W) * U(W, Psi) = 1        (subspaces and surjective linear maps)

Both sides are assembled over one shared set of places, so the finite part
of the product is an exact rational and only the Archimedean factors carry
rounding.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from src.config import get_settings
from src.core.errors import TVanishesAtPointError
from src.fields.number_field import FieldElement
from src.heights.projective import arch_projective_height, finite_projective_height
from src.heights.vectors import ProjectiveVector
from src.numeric.ball import Ball, ball_product
from src.numeric.refine import refine
from src.places.absolute import arch_abs, finite_abs
from src.places.archimedean import archimedean_places
from src.places.finite import finite_places_above
from src.places.place import LocalValue, Place
from src.places.product import exact_product_ball

from .linear import LinearFunctional, LinearMap
from .polynomials import HomogeneousPoly
from .quotient import (
    arch_u_dual,
    arch_u_projective,
    finite_u_dual,
    finite_u_projective,
    form_value_at,
    subspace_functional,
    u_candidate_primes,
)

logger = logging.getLogger(__name__)


@dataclass
class PlaceRow:
    """One place's contribution: H_v, U_v and the local value they multiply to."""

    place: Place
    height: LocalValue
    u: LocalValue
    local: LocalValue


@dataclass
class IdentityReport:
    """Outcome of an identity check, with the per-place rows behind it."""

    kind: str
    exponent: int
    height: Ball
    u: Ball
    product: Ball
    tolerance: float
    rows: list[PlaceRow] = field(default_factory=list)

    @property
    def radius(self):
        return self.product.rad

    @property
    def passed(self) -> bool:
        return bool(self.product.width <= self.tolerance) and self.product.contains(1)


def _finite_rows(point: ProjectiveVector, primes, u_local, local_value) -> list[PlaceRow]:
    rows = []
    for p in primes:
        for place in finite_places_above(point.field, p):
            rows.append(
                PlaceRow(
                    place,
                    finite_projective_height(point, place),
                    u_local(place),
                    finite_abs(local_value, place),
                )
            )
    return rows


def _assemble(
    kind: str,
    point: ProjectiveVector,
    exponent: int,
    finite_rows: list[PlaceRow],
    arch_u,
    local_value: FieldElement,
    tolerance: float,
) -> IdentityReport:
    """All factors at the current working precision."""
    rows = list(finite_rows)
    arch_heights, arch_us = [], []
    for place in archimedean_places(point.field):
        height = arch_projective_height(point, place)
        u = arch_u(place)
        rows.append(PlaceRow(place, height, u, arch_abs(local_value, place)))
        arch_heights.append(height)
        arch_us.append(u)

    # finite H_v^M * U_v is combined exactly, then rounded once
    finite_product = exact_product_ball(r.height**exponent * r.u for r in finite_rows)
    height = ball_product(arch_heights) * exact_product_ball(r.height for r in finite_rows)
    u = ball_product(arch_us) * exact_product_ball(r.u for r in finite_rows)
    product = ball_product(h**exponent * v for h, v in zip(arch_heights, arch_us))
    return IdentityReport(kind, exponent, height, u, product * finite_product, tolerance, rows)


def _run(compute, tolerance: float, label: str) -> IdentityReport:
    report = refine(compute, tolerance / 2, radius_of=lambda r: r.product.rad, label=label)
    logger.info(
        f"IDENTITY_CHECKED | kind={report.kind} | places={len(report.rows)} | "
        f"radius={float(report.radius):.3e} | passed={report.passed}"
    )
    return report


def verify_identity_projective(
    a: ProjectiveVector, T: HomogeneousPoly, tolerance: Optional[float] = None
) -> IdentityReport:
    """
    Check H(a)^M * U(a, T) = 1 for a form T of degree M with T(a) != 0.

    The product is refined until its radius is at most tolerance / 2; the
    check passes when the enclosure contains 1.

    Raises:
        TVanishesAtPointError: If T(a) = 0.
        UnsupportedPrimeError: If a needed prime is outside the supported class.
    """
    tol = tolerance if tolerance is not None else get_settings().default_tolerance
    value = form_value_at(a, T)
    if value.is_zero:
        raise TVanishesAtPointError(f"T vanishes at {a}")
    primes = u_candidate_primes(a.coords, value, T.coefficients_in(a.field))
    finite_rows = _finite_rows(a, primes, lambda place: finite_u_projective(a, T, place), value)
    return _run(
        lambda: _assemble(
            "projective",
            a,
            T.degree,
            finite_rows,
            lambda place: arch_u_projective(a, T, place),
            value,
            tol,
        ),
        tol,
        "verify_projective",
    )


def verify_identity_subspace(
    basis: Sequence[ProjectiveVector], psi: LinearMap, tolerance: Optional[float] = None
) -> IdentityReport:
    """
    Check H(W) * U(W, Psi) = 1 for W spanned by `basis` and Psi: K^N -> K^M.

    Rows are reported on the Plucker vector of the span; with M = 1 this is
    the dual-functional identity for a single vector.

    Raises:
        DependentBasisError: If the basis is linearly dependent.
        KernelMeetsSubspaceError: If W meets the kernel of Psi.
    """
    tol = tolerance if tolerance is not None else get_settings().default_tolerance
    point, phi, value = subspace_functional(basis, psi)
    primes = u_candidate_primes(point.coords, value, phi.coefficients)
    finite_rows = _finite_rows(
        point, primes, lambda place: finite_u_dual(point, phi, place), value
    )
    return _run(
        lambda: _assemble(
            "subspace",
            point,
            1,
            finite_rows,
            lambda place: arch_u_dual(point, phi, place),
            value,
            tol,
        ),
        tol,
        "verify_subspace",
    )


def verify_identity_dual(
    w: ProjectiveVector, psi: LinearFunctional, tolerance: Optional[float] = None
) -> IdentityReport:
    """H(w) * U(w, psi) = 1 for a single vector and functional."""
    return verify_identity_subspace([w], LinearMap(psi.field, (psi.coefficients,)), tolerance)
