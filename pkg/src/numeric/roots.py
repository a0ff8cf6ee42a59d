"""
Certified complex root isolation.

Aberth-Ehrlich simultaneous iteration in mpmath's multiprecision complex
arithmetic, followed by an a posteriori certificate in ball arithmetic: the
discs D(z_k, n|W_k|) built from the Weierstrass corrections W_k contain all
roots, and every connected component holds as many roots as discs, so
pairwise-disjoint discs each isolate exactly one root.
"""

import logging
from typing import Optional

from mpmath import mp, mpc, mpf

from src.config import get_settings
from src.core.errors import ConstantPolynomialError, ConvergenceError, NotSquarefreeError
from src.core.precision import current_bits, working_precision
from src.exact.polynomials import IntPolynomial, poly_gcd

from .ball import Ball, ComplexBall, mpf_to_fraction

logger = logging.getLogger(__name__)

_GUARD_BITS = 16


def default_root_radius(bits: int) -> mpf:
    """Target isolation radius used by place tables at `bits` of precision."""
    return mpf(2) ** (-(3 * bits) // 4)


def _initial_points(coeffs_low: tuple[int, ...]) -> list[mpc]:
    n = len(coeffs_low) - 1
    lead = abs(mpf(coeffs_low[-1]))
    bound = mpf(0)
    for k, c in enumerate(coeffs_low[:-1]):
        if c:
            bound = max(bound, (abs(mpf(c)) / lead) ** (mpf(1) / (n - k)))
    radius = 2 * bound if bound > 0 else mpf(1)
    return [radius * mp.expj(2 * mp.pi * k / n + mpf("0.4")) for k in range(n)]


def _aberth(f: IntPolynomial, bits: int, max_iterations: int) -> list[mpc]:
    coeffs = [mpf(c) for c in reversed(f.coeffs)]
    n = f.degree
    z = _initial_points(f.coeffs)
    if n == 1:
        return [mpc(-mpf(f.coeffs[0]) / mpf(f.coeffs[1]), 0)]
    eps = mpf(2) ** (-bits)
    for iteration in range(max_iterations):
        max_step = mpf(0)
        for k in range(n):
            value, deriv = mp.polyval(coeffs, z[k], derivative=True)
            if value == 0:
                continue
            repulsion = mp.fsum(1 / (z[k] - z[j]) for j in range(n) if j != k)
            if deriv == 0:
                z[k] += eps * mp.expj(k + 1)
                max_step = max(max_step, mpf(1))
                continue
            ratio = value / deriv
            denom = 1 - ratio * repulsion
            step = ratio if denom == 0 else ratio / denom
            z[k] -= step
            max_step = max(max_step, abs(step))
        scale = max(mpf(1), max(abs(w) for w in z))
        if max_step <= eps * scale:
            logger.debug(f"ABERTH_CONVERGED | deg={n} | prec={bits} | iterations={iteration + 1}")
            return z
    raise ConvergenceError(f"Aberth iteration did not converge in {max_iterations} steps")


def _symmetrize(approx: list[mpc], bits: int) -> list[mpc]:
    """Snap near-real roots onto the axis and mirror the upper half-plane."""
    threshold = mpf(2) ** (-(bits // 2))
    reals, upper, lower = [], [], []
    for z in approx:
        scale = max(mpf(1), abs(z))
        if abs(z.imag) <= threshold * scale:
            reals.append(mpc(z.real, 0))
        elif z.imag > 0:
            upper.append(z)
        else:
            lower.append(z)
    if len(upper) != len(lower):
        raise ConvergenceError("approximate roots are not conjugate-closed")
    return reals + upper + [w.conjugate() for w in upper]


def _horner(f: IntPolynomial, z: ComplexBall) -> ComplexBall:
    acc = ComplexBall.from_value(0)
    for c in reversed(f.coeffs):
        acc = acc * z + c
    return acc


def _inclusion_radii(f: IntPolynomial, centers: list[ComplexBall]) -> list[mpf]:
    n = f.degree
    radii = []
    for k, zk in enumerate(centers):
        denom = ComplexBall.from_value(f.leading)
        for j, zj in enumerate(centers):
            if j != k:
                denom = denom * (zk - zj)
        if abs(denom).contains_zero():
            raise ConvergenceError("coincident root approximations")
        correction = _horner(f, zk) / denom
        radii.append((abs(correction) * n).upper)
    return radii


def isolate_roots(
    f: IntPolynomial,
    target_radius: Optional[mpf] = None,
    max_iterations: Optional[int] = None,
) -> list[ComplexBall]:
    """
    Isolate all complex roots of a squarefree integer polynomial.

    Runs at the current working precision (see working_precision()).

    Args:
        f: Squarefree polynomial of degree >= 1
        target_radius: Maximum enclosure radius; defaults to 2^(-3*bits/4)
        max_iterations: Aberth iteration budget

    Returns:
        deg f pairwise-disjoint enclosures sorted by (real, imaginary)
        midpoint; real roots have an exactly-zero imaginary part and
        non-real roots come in conjugate pairs

    Raises:
        ConstantPolynomialError: If deg f < 1.
        NotSquarefreeError: If f has a repeated root.
        ConvergenceError: If the roots cannot be certified at this precision.
    """
    if f.degree < 1:
        raise ConstantPolynomialError("root isolation needs a polynomial of degree at least 1")
    if poly_gcd(f, f.derivative()).degree > 0:
        raise NotSquarefreeError(f"polynomial {f} is not squarefree")

    bits = current_bits(get_settings().initial_precision_bits)
    target = mpf(target_radius) if target_radius is not None else default_root_radius(bits)
    budget = max_iterations or get_settings().root_max_iterations

    with working_precision(bits):
        with mp.workprec(bits + _GUARD_BITS):
            approx = _aberth(f, bits, budget)
            centers_mp = _symmetrize(approx, bits)
        # round centres to the working precision so they are exact ball midpoints
        centers_mp = [+z for z in centers_mp]
        centers = [ComplexBall.from_value(z) for z in centers_mp]
        radii = _inclusion_radii(f, centers)

        for k in range(len(centers)):
            if radii[k] > target:
                raise ConvergenceError(f"root radius {mp.nstr(radii[k], 3)} above target")
            for j in range(k):
                gap = abs(centers[k] - centers[j]).lower
                if not gap > radii[k] + radii[j]:
                    raise ConvergenceError("root inclusion discs overlap")

        roots = []
        for z, r in zip(centers_mp, radii):
            if z.imag == 0:
                # The disc is symmetric and holds one root, so that root is real.
                a = mpf_to_fraction(z.real) - mpf_to_fraction(r)
                b = mpf_to_fraction(z.real) + mpf_to_fraction(r)
                if f(a) * f(b) > 0:
                    raise ConvergenceError("no sign change on a real root interval")
                roots.append(ComplexBall(Ball.from_mid_rad(z.real, r), Ball(0)))
            else:
                if not abs(z.imag) > r:
                    raise ConvergenceError("non-real root disc meets the real axis")
                roots.append(
                    ComplexBall(Ball.from_mid_rad(z.real, r), Ball.from_mid_rad(z.imag, r))
                )

    roots.sort(key=lambda w: (w.real.mid, w.imag.mid))
    logger.debug(
        f"ROOTS_CERTIFIED | deg={f.degree} | prec={bits} | max_radius={mp.nstr(max(radii), 3)}"
    )
    return roots

