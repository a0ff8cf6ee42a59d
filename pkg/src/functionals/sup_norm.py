"""
Sup norms nu_v(T) of homogeneous polynomials over the closed unit polydisc.

At a finite place nu_v is the Gauss norm (largest coefficient value). At an
Archimedean place the sup is attained on the torus |z_j| = 1 and, since
|T(lambda z)| = |T(z)| for |lambda| = 1, one phase may be fixed. The other
phases are searched by best-first branch and bound: every cell carries a
second-order Taylor upper bound for F = |T|^2 with a third-order remainder,
and lower bounds come from evaluated centres polished by golden-section
search.
"""

import heapq
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np
from scipy.optimize import minimize_scalar

from src.config import get_settings
from src.core.errors import SupNormBudgetError
from src.core.precision import PrecisionContext
from src.fields.number_field import NumberField
from src.numeric.ball import Ball
from src.numeric.refine import refine
from src.places.absolute import candidate_finite_places, finite_abs
from src.places.archimedean import embed
from src.places.place import ArchimedeanPlace, FinitePlace, Normalization, PadicPower, padic_max
from src.places.product import GlobalProduct, evaluate_product, finite_factors

from .polynomials import HomogeneousPoly

logger = logging.getLogger(__name__)

_EPS = 2.0**-52


def sup_norm_finite(T: HomogeneousPoly, place: FinitePlace) -> PadicPower:
    """Gauss norm max_r |c_r|_v; exact."""
    if T.is_zero:
        return PadicPower.zero(place.p)
    coeffs = T.coefficients_in(place.field)
    return padic_max([finite_abs(c, place, Normalization.NORMALIZED) for c in coeffs])


@dataclass
class _TorusProblem:
    """|sum_r c_r exp(i <E_r, phi>)|^2 on [0, 2pi)^D."""

    coeffs: np.ndarray  # complex, shape (R,)
    exps: np.ndarray  # float, shape (R, D)
    c3: float  # third-derivative constant

    @property
    def dim(self) -> int:
        return self.exps.shape[1]

    def evaluate(self, points: np.ndarray):
        """F, gradient (K, D) and Hessian (K, D, D) at K points."""
        w = np.exp(1j * (points @ self.exps.T)) * self.coeffs
        g = w.sum(axis=1)
        dg = (w[:, :, None] * (1j * self.exps)[None, :, :]).sum(axis=1)
        outer = self.exps[:, :, None] * self.exps[:, None, :]
        ddg = -(w[:, :, None, None] * outer[None]).sum(axis=1)
        f = np.abs(g) ** 2
        grad = 2.0 * np.real(np.conj(g)[:, None] * dg)
        hess = 2.0 * np.real(
            np.conj(dg)[:, :, None] * dg[:, None, :] + np.conj(g)[:, None, None] * ddg
        )
        return f, grad, hess

    def value(self, point: np.ndarray) -> float:
        return float(np.abs((np.exp(1j * (self.exps @ point)) * self.coeffs).sum()) ** 2)


def _interval_quadratic_max(a: np.ndarray, b: np.ndarray, delta: np.ndarray) -> np.ndarray:
    """max of a*u + b*u^2/2 over |u| <= delta, elementwise."""
    ends = np.maximum(a * delta, -a * delta) + 0.5 * b * delta**2
    with np.errstate(divide="ignore", invalid="ignore"):
        u = np.where(b < 0, -a / b, np.inf)
        inner = np.where(np.abs(u) <= delta, -0.5 * a * a / b, -np.inf)
    return np.maximum(ends, inner)


def _box_quadratic_max(grad: np.ndarray, hess: np.ndarray, delta: np.ndarray) -> np.ndarray:
    """max of grad.u + u.H.u/2 over the box |u|_inf <= delta, for D in {1, 2}."""
    if grad.shape[1] == 1:
        return _interval_quadratic_max(grad[:, 0], hess[:, 0, 0], delta)
    g1, g2 = grad[:, 0], grad[:, 1]
    h11, h12, h22 = hess[:, 0, 0], hess[:, 0, 1], hess[:, 1, 1]
    best = np.full(grad.shape[0], -np.inf)
    for s in (-1.0, 1.0):
        u1 = s * delta
        edge = _interval_quadratic_max(g2 + h12 * u1, h22, delta)
        best = np.maximum(best, g1 * u1 + 0.5 * h11 * u1**2 + edge)
        u2 = s * delta
        edge = _interval_quadratic_max(g1 + h12 * u2, h11, delta)
        best = np.maximum(best, g2 * u2 + 0.5 * h22 * u2**2 + edge)
    det = h11 * h22 - h12 * h12
    with np.errstate(divide="ignore", invalid="ignore"):
        concave = (h11 < 0) & (det > 0)
        u1 = np.where(concave, (-h22 * g1 + h12 * g2) / det, np.inf)
        u2 = np.where(concave, (h12 * g1 - h11 * g2) / det, np.inf)
        inside = concave & (np.abs(u1) <= delta) & (np.abs(u2) <= delta)
        inner = np.where(inside, 0.5 * (g1 * u1 + g2 * u2), -np.inf)
    return np.maximum(best, inner)


def _polish(problem: _TorusProblem, start: np.ndarray, delta: float) -> tuple[float, np.ndarray]:
    """Coordinate-wise golden-section ascent from `start` within +-delta."""
    point = start.copy()
    best = problem.value(point)
    for _ in range(2):
        for j in range(problem.dim):

            def negative(t: float, j: int = j) -> float:
                trial = point.copy()
                trial[j] = t
                return -problem.value(trial)

            try:
                res = minimize_scalar(
                    negative,
                    bracket=(point[j] - delta, point[j], point[j] + delta),
                    method="golden",
                )
            except ValueError:
                continue
            if -res.fun > best:
                best = -res.fun
                point[j] = res.x
    return best, point


def _torus_bounds(problem: _TorusProblem, tolerance: float) -> tuple[float, float]:
    """[lower, upper] for sup F, with upper - lower ~ tolerance * sqrt(lower)."""
    settings = get_settings()
    dim = problem.dim
    grid = settings.sup_norm_grid
    delta0 = math.pi / grid
    axes = [np.linspace(0, 2 * math.pi, grid, endpoint=False) + delta0] * dim
    centers = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, dim)
    deltas = np.full(len(centers), delta0)
    evaluated = len(centers)

    heap: list[tuple[float, int, np.ndarray, float]] = []
    lower = 0.0
    counter = 0

    def push(points: np.ndarray, half: np.ndarray) -> None:
        nonlocal lower, counter
        f, grad, hess = problem.evaluate(points)
        bound = f + _box_quadratic_max(grad, hess, half) + problem.c3 * half**3 / 6.0
        k = int(np.argmax(f))
        if f[k] > lower:
            lower = float(f[k])
            polished, _ = _polish(problem, points[k], float(half[k]))
            lower = max(lower, polished)
        for point, h, ub in zip(points, half, bound):
            counter += 1
            heapq.heappush(heap, (-float(ub), counter, point, float(h)))

    push(centers, deltas)
    while True:
        upper = -heap[0][0]
        if upper - lower <= tolerance * math.sqrt(max(lower, 1e-300)):
            return lower, upper
        batch = []
        while heap and -heap[0][0] - lower > tolerance * math.sqrt(max(lower, 1e-300)):
            batch.append(heapq.heappop(heap))
            if len(batch) >= 256:
                break
        children = []
        halves = []
        for _, _, point, h in batch:
            for signs in np.ndindex(*([2] * dim)):
                offset = (np.array(signs, dtype=float) * 2 - 1) * (h / 2)
                children.append(point + offset)
                halves.append(h / 2)
        evaluated += len(children)
        if evaluated > settings.sup_norm_max_cells:
            raise SupNormBudgetError(
                f"sup norm not resolved to {tolerance:g} within "
                f"{settings.sup_norm_max_cells} cells"
            )
        push(np.array(children), np.array(halves))


def _torus_problem(coeffs: list[complex], exps: list[tuple[int, ...]]) -> _TorusProblem:
    c = np.array(coeffs, dtype=complex)
    e = np.array([x[1:] for x in exps], dtype=float)
    diffs = np.abs(e[:, None, :] - e[None, :, :]).sum(axis=2)
    mags = np.abs(c)
    c3 = float((mags[:, None] * mags[None, :] * diffs**3).sum())
    return _TorusProblem(c, e, c3)


def _arch_sup_here(T: HomogeneousPoly, place: ArchimedeanPlace, tolerance: float) -> Ball:
    if T.is_zero:
        return Ball(0)
    values = [embed(c, place) for c in T.coefficients_in(place.field)]
    exponent = Fraction(place.local_degree, place.field.degree)
    if len(values) == 1 or T.num_vars == 1:
        return abs(values[0]).nonnegative_power(exponent)

    settings = get_settings()
    if T.num_vars > settings.sup_norm_max_vars:
        raise SupNormBudgetError(
            f"Archimedean sup norm supports at most {settings.sup_norm_max_vars} variables, "
            f"got {T.num_vars}"
        )
    mids = [complex(float(v.real.mid), float(v.imag.mid)) for v in values]
    problem = _torus_problem(mids, [e for e, _ in T.terms])

    # rounding of the coefficients to doubles and of the torus evaluation
    total = sum(abs(c) for c in mids)
    coeff_slack = sum(float(v.real.rad) + float(v.imag.rad) for v in values) + _EPS * total
    eval_slack = 16 * len(mids) * _EPS * total**2 * (1 + float(np.abs(problem.exps).max())) ** 2
    budget = tolerance / 2 - 2 * coeff_slack
    if budget <= 0:
        raise SupNormBudgetError(f"tolerance {tolerance:g} is below the coefficient precision")

    lower_f, upper_f = _torus_bounds(problem, budget)
    lo = max(math.sqrt(max(lower_f - eval_slack, 0.0)) - coeff_slack, 0.0) * (1 - 4 * _EPS)
    hi = (math.sqrt(upper_f + eval_slack) + coeff_slack) * (1 + 4 * _EPS)
    logger.debug(
        f"SUP_NORM | place={place.id} | vars={T.num_vars} | terms={len(mids)} | "
        f"lo={lo:.17g} | hi={hi:.17g}"
    )
    return Ball.from_endpoints(Fraction(lo), Fraction(hi)).nonnegative_power(exponent)


def sup_norm_arch(
    T: HomogeneousPoly, place: ArchimedeanPlace, tolerance: Optional[float] = None
) -> Ball:
    """
    Enclosure of nu_v(T) = (sup over the closed unit polydisc of ||T(z)||_v)^(d_v/d).

    The tolerance bounds the width of the enclosure of the unnormalized sup.

    Raises:
        SupNormBudgetError: If more than the configured number of variables or
            cells would be needed.
    """
    tol = tolerance if tolerance is not None else get_settings().default_tolerance
    if PrecisionContext.get_current_or_none() is not None:
        return _arch_sup_here(T, place, tol)
    return refine(
        lambda: _arch_sup_here(T, place, tol), tol, radius_of=lambda _: 0, label="sup_norm"
    )


def global_sup_norm(
    T: HomogeneousPoly, field: NumberField, tolerance: Optional[float] = None
) -> GlobalProduct:
    """
    nu(T) = prod_v nu_v(T) over the Archimedean places and the candidate finite places.

    The tolerance applies to each Archimedean factor.
    """
    coeffs = T.coefficients_in(field)
    primes = candidate_finite_places(coeffs) if coeffs else []
    tol = tolerance if tolerance is not None else get_settings().default_tolerance
    rows = finite_factors(field, primes, lambda place: sup_norm_finite(T, place))
    return refine(
        lambda: evaluate_product(field, rows, lambda place: _arch_sup_here(T, place, tol)),
        tol,
        radius_of=lambda _: 0,
        label="global_sup_norm",
    )


def local_sup_norm(T: HomogeneousPoly, place, tolerance: Optional[float] = None):
    if isinstance(place, FinitePlace):
        return sup_norm_finite(T, place)
    return sup_norm_arch(T, place, tolerance)

