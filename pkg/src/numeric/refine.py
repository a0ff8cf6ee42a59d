"""
Adaptive precision driver: re-run a ball-valued computation at doubled working
precision until its output is tight enough.
"""

import logging
from typing import Any, Callable, Optional, TypeVar

from mpmath import mp, mpf

from src.config import get_settings
from src.core.errors import ConvergenceError, PrecisionExhaustedError
from src.core.precision import current_cap_override, working_precision

from .ball import Ball, ComplexBall

logger = logging.getLogger(__name__)

T = TypeVar("T")


def result_radius(result: Any) -> mpf:
    """Largest radius among the balls in `result` (a ball, a list, or a dataclass)."""
    if isinstance(result, (Ball, ComplexBall)):
        return mpf(result.rad)
    if isinstance(result, (list, tuple)):
        return max((result_radius(r) for r in result), default=mpf(0))
    if hasattr(result, "radius"):
        return mpf(result.radius)
    return mpf(0)


def resolve_cap(cap_bits: Optional[int] = None) -> int:
    """Explicit cap, else a precision_cap() override, else the configured default."""
    if cap_bits is not None:
        return cap_bits
    override = current_cap_override()
    return override if override is not None else get_settings().precision_cap_bits


def refine(
    compute: Callable[[], T],
    target_radius: float,
    *,
    radius_of: Callable[[T], mpf] = result_radius,
    initial_bits: Optional[int] = None,
    cap_bits: Optional[int] = None,
    label: str = "computation",
) -> T:
    """
    Run `compute` at increasing working precision until its radius is small.

    Starts at the configured initial precision and doubles after every
    attempt that is too wide or raises ConvergenceError.

    Args:
        compute: Re-runnable computation; reads the precision from context
        target_radius: Requested output radius
        radius_of: Extracts the radius to compare against the target
        initial_bits: Starting precision (default from settings)
        cap_bits: Maximum precision (default from settings or CLI override)
        label: Name used in log records

    Returns:
        The first result whose radius is <= target_radius

    Raises:
        PrecisionExhaustedError: If the cap is reached without success.
    """
    settings = get_settings()
    bits = initial_bits or settings.initial_precision_bits
    cap = resolve_cap(cap_bits)
    target = mpf(target_radius)
    while True:
        try:
            with working_precision(bits):
                result = compute()
                radius = radius_of(result)
            if radius <= target:
                logger.debug(
                    f"REFINE_DONE | what={label} | prec={bits} | radius={mp.nstr(radius, 3)}"
                )
                return result
            reason = f"radius {mp.nstr(radius, 3)} > {mp.nstr(target, 3)}"
        except ConvergenceError as exc:
            reason = exc.message
        logger.info(f"REFINE_STEP | what={label} | prec={bits} | reason={reason}")
        if bits >= cap:
            logger.warning(f"REFINE_EXHAUSTED | what={label} | cap={cap} | reason={reason}")
            raise PrecisionExhaustedError(
                f"{label}: precision cap of {cap} bits reached ({reason})"
            )
        bits = min(2 * bits, cap)
