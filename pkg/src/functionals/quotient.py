"""
Quotient norms U_v of an auxiliary form or functional at a point.

U_v(a, T) is computed from its closed form |T(a)|_v / H_v(a)^M; the witness
oracles rebuild it as the sup norm of T - f* for an explicit f* vanishing
at a.
"""

import logging
import random
from fractions import Fraction
from typing import Optional, Sequence

from src.config import get_settings
from src.core.errors import (
    ConvergenceError,
    DimensionMismatchError,
    KernelMeetsSubspaceError,
    TVanishesAtPointError,
)
from src.core.precision import PrecisionContext
from src.fields.number_field import FieldElement, NumberField, norm
from src.heights.projective import finite_projective_height, span_wedge
from src.heights.vectors import ProjectiveVector
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
from src.places.product import GlobalProduct, global_product

from .linear import LinearFunctional, LinearMap, exterior_power_map
from .polynomials import HomogeneousPoly, monomial_exponents
from .sup_norm import sup_norm_arch, sup_norm_finite

logger = logging.getLogger(__name__)


def _with_precision(compute, target_radius: Optional[float], label: str):
    if PrecisionContext.get_current_or_none() is not None:
        return compute()
    target = target_radius if target_radius is not None else get_settings().default_tolerance
    return refine(compute, target, label=label)


def _normalized_ratio(num: Ball, den: Ball, place: ArchimedeanPlace) -> Ball:
    if den.contains_zero():
        raise ConvergenceError(f"local height at {place.id} is not separated from 0")
    return (num / den).nonnegative_power(Fraction(place.local_degree, place.field.degree))


def _unnormalized_max(coords: Sequence[FieldElement], place: ArchimedeanPlace) -> Ball:
    best = Ball(0)
    for c in coords:
        best = ball_max(best, arch_abs(c, place, Normalization.UNNORMALIZED))
    return best


# Projective points and forms


def form_value_at(a: ProjectiveVector, T: HomogeneousPoly) -> FieldElement:
    if T.num_vars != a.dimension:
        raise DimensionMismatchError(
            f"form in {T.num_vars} variables evaluated at a point of length {a.dimension}"
        )
    return a.field.coerce(T(a.coords))


def arch_u_projective(a: ProjectiveVector, T: HomogeneousPoly, place: ArchimedeanPlace) -> Ball:
    value = form_value_at(a, T)
    if value.is_zero:
        return Ball(0)
    num = arch_abs(value, place, Normalization.UNNORMALIZED)
    den = _unnormalized_max(a.coords, place) ** T.degree
    return _normalized_ratio(num, den, place)


def finite_u_projective(
    a: ProjectiveVector, T: HomogeneousPoly, place: FinitePlace
) -> PadicPower:
    value = form_value_at(a, T)
    if value.is_zero:
        return PadicPower.zero(place.p)
    return finite_abs(value, place) / finite_projective_height(a, place) ** T.degree


def u_local_projective(
    a: ProjectiveVector,
    T: HomogeneousPoly,
    place: Place,
    target_radius: Optional[float] = None,
) -> LocalValue:
    """
    U_v(a, T) = |T(a)|_v / H_v(a)^M.

    Returns:
        Exact PadicPower at finite places, Ball at Archimedean places; 0 when T(a) = 0
    """
    if isinstance(place, FinitePlace):
        return finite_u_projective(a, T, place)
    return _with_precision(lambda: arch_u_projective(a, T, place), target_radius, "u_local")


def _dominant_index(coords: Sequence[FieldElement], place: Place) -> int:
    if isinstance(place, FinitePlace):
        values = [finite_abs(c, place) for c in coords]
        best = padic_max(values)
        return values.index(best)
    mids = [arch_abs(c, place, Normalization.UNNORMALIZED).mid for c in coords]
    return max(range(len(mids)), key=lambda i: mids[i])


def projective_witness(a: ProjectiveVector, T: HomogeneousPoly, n: int) -> HomogeneousPoly:
    """f* = T - T(a) (z_n / a_n)^M, which vanishes at a."""
    value = form_value_at(a, T)
    exps = tuple(T.degree if j == n else 0 for j in range(a.dimension))
    monomial = HomogeneousPoly.monomial(exps, value / a[n] ** T.degree, a.field)
    witness = T - monomial
    if not a.field.coerce(witness(a.coords)).is_zero:
        raise ArithmeticError("witness polynomial does not vanish at the point")
    return witness


def u_witness_oracle_projective(
    a: ProjectiveVector,
    T: HomogeneousPoly,
    place: Place,
    target_radius: Optional[float] = None,
) -> LocalValue:
    """
    nu_v(T - f*) for the witness f* = T - T(a)(z_n/a_n)^M, a_n of maximal |.|_v.

    Raises:
        TVanishesAtPointError: If T(a) = 0.
    """
    if form_value_at(a, T).is_zero:
        raise TVanishesAtPointError(f"T vanishes at {a}")

    def compute() -> LocalValue:
        n = _dominant_index(a.coords, place)
        remainder = T - projective_witness(a, T, n)
        if isinstance(place, FinitePlace):
            return sup_norm_finite(remainder, place)
        return sup_norm_arch(remainder, place, target_radius)

    if isinstance(place, FinitePlace):
        return compute()
    return _with_precision(compute, target_radius, "u_witness")


def u_candidate_primes(
    coords: Sequence[FieldElement], value: FieldElement, extra: Sequence[FieldElement]
) -> list[int]:
    """Candidate primes of the point, extended by the norms of T(a) and of T's coefficients."""
    integers = [norm(value)] + [norm(c) for c in extra if not c.is_zero]
    return candidate_finite_places(coords, integers)


def u_global_projective(
    a: ProjectiveVector, T: HomogeneousPoly, target_radius: Optional[float] = None
) -> GlobalProduct:
    """
    U(a, T) = prod_v U_v(a, T).

    Raises:
        TVanishesAtPointError: If T(a) = 0.
    """
    value = form_value_at(a, T)
    if value.is_zero:
        raise TVanishesAtPointError(f"T vanishes at {a}")
    primes = u_candidate_primes(a.coords, value, T.coefficients_in(a.field))
    return global_product(
        a.field,
        primes,
        lambda place: finite_u_projective(a, T, place),
        lambda place: arch_u_projective(a, T, place),
        target_radius,
        label="u_global_projective",
    )


# Dual functionals and subspaces


def dual_norm(psi: LinearFunctional, place: Place) -> LocalValue:
    """
    nu_v(psi): max_i |c_i|_v at finite places, (sum_i ||c_i||_v)^(d_v/d) at
    Archimedean places.
    """
    if isinstance(place, FinitePlace):
        return padic_max([finite_abs(c, place) for c in psi.coefficients])

    def compute() -> Ball:
        total = Ball(0)
        for c in psi.coefficients:
            total = total + arch_abs(c, place, Normalization.UNNORMALIZED)
        return total.nonnegative_power(Fraction(place.local_degree, place.field.degree))

    return _with_precision(compute, None, "dual_norm")


def _check_dual(w: ProjectiveVector, psi: LinearFunctional) -> FieldElement:
    if psi.dimension != w.dimension:
        raise DimensionMismatchError(
            f"functional on K^{psi.dimension} applied to a vector of length {w.dimension}"
        )
    return psi(w.coords)


def arch_u_dual(w: ProjectiveVector, psi: LinearFunctional, place: ArchimedeanPlace) -> Ball:
    value = _check_dual(w, psi)
    if value.is_zero:
        return Ball(0)
    num = arch_abs(value, place, Normalization.UNNORMALIZED)
    return _normalized_ratio(num, _unnormalized_max(w.coords, place), place)


def finite_u_dual(w: ProjectiveVector, psi: LinearFunctional, place: FinitePlace) -> PadicPower:
    value = _check_dual(w, psi)
    if value.is_zero:
        return PadicPower.zero(place.p)
    return finite_abs(value, place) / finite_projective_height(w, place)


def u_local_dual(
    w: ProjectiveVector,
    psi: LinearFunctional,
    place: Place,
    target_radius: Optional[float] = None,
) -> LocalValue:
    """U_v(w, psi) = |psi(w)|_v / H_v(w)."""
    if isinstance(place, FinitePlace):
        return finite_u_dual(w, psi, place)
    return _with_precision(lambda: arch_u_dual(w, psi, place), target_radius, "u_local_dual")


def u_witness_oracle_dual(
    w: ProjectiveVector, psi: LinearFunctional, place: Place
) -> LocalValue:
    """
    nu_v of x -> psi(w) x_n / w_n, the part of psi left after removing a
    functional that vanishes at w; w_n is a coordinate of maximal |.|_v.

    Raises:
        TVanishesAtPointError: If psi(w) = 0.
    """
    value = _check_dual(w, psi)
    if value.is_zero:
        raise TVanishesAtPointError(f"functional vanishes at {w}")

    def compute() -> LocalValue:
        n = _dominant_index(w.coords, place)
        coeffs = [value / w[n] if j == n else w.field.zero for j in range(w.dimension)]
        remainder = LinearFunctional(w.field, tuple(coeffs))
        vanishing = LinearFunctional(
            w.field, tuple(c - r for c, r in zip(psi.coefficients, remainder.coefficients))
        )
        if not vanishing(w.coords).is_zero:
            raise ArithmeticError("dual witness does not vanish at the point")
        return dual_norm(remainder, place)

    if isinstance(place, FinitePlace):
        return compute()
    return _with_precision(compute, None, "u_witness_dual")


def subspace_functional(
    basis: Sequence[ProjectiveVector], psi: LinearMap
) -> tuple[ProjectiveVector, LinearFunctional, FieldElement]:
    """
    Plucker vector of the span, the induced functional, and its value there.

    Raises:
        DependentBasisError: If the basis is linearly dependent.
        DimensionMismatchError: If psi does not map K^N onto K^M.
        KernelMeetsSubspaceError: If the span meets the kernel of psi.
    """
    wedge = span_wedge(basis)
    if psi.n != wedge.n or psi.m != wedge.m:
        raise DimensionMismatchError(
            f"map is {psi.m}x{psi.n}, span is {wedge.m}-dimensional in K^{wedge.n}"
        )
    phi = exterior_power_map(psi)
    point = wedge.as_projective()
    value = phi(point.coords)
    if value.is_zero:
        raise KernelMeetsSubspaceError("the span meets the kernel of the map (zero determinant)")
    return point, phi, value


def u_subspace(
    basis: Sequence[ProjectiveVector], psi: LinearMap, target_radius: Optional[float] = None
) -> GlobalProduct:
    """
    U(W, psi) = prod_v U_v(w_1 ^ ... ^ w_M, wedge^M psi).
    """
    point, phi, value = subspace_functional(basis, psi)
    primes = u_candidate_primes(point.coords, value, phi.coefficients)
    return global_product(
        point.field,
        primes,
        lambda place: finite_u_dual(point, phi, place),
        lambda place: arch_u_dual(point, phi, place),
        target_radius,
        label="u_subspace",
    )


# Sampling of Z(a)


def random_vanishing_polynomial(
    a: ProjectiveVector, degree: int, rng: random.Random, coefficient_bound: int = 3
) -> HomogeneousPoly:
    """
    A random form of the given degree vanishing at a.

    Built as sum_j (a_n z_j - a_j z_n) g_j with a_n != 0 and g_j random forms
    of degree - 1 with small integer coefficients.
    """
    if degree < 1:
        raise DimensionMismatchError("forms vanishing at a point need degree at least 1")
    field: NumberField = a.field
    n_vars = a.dimension
    n = next(i for i, c in enumerate(a.coords) if not c.is_zero)
    total = HomogeneousPoly.zero(n_vars, degree, field)
    for j in range(n_vars):
        if j == n:
            continue
        linear = [field.zero] * n_vars
        linear[j] = a[n]
        linear[n] = -a[j]
        g = HomogeneousPoly.from_dict(
            n_vars,
            degree - 1,
            {
                e: rng.randint(-coefficient_bound, coefficient_bound)
                for e in monomial_exponents(n_vars, degree - 1)
            },
        )
        total = total + HomogeneousPoly.linear(linear, field) * g
    if not field.coerce(total(a.coords)).is_zero:
        raise ArithmeticError("sampled polynomial does not vanish at the point")
    return total
