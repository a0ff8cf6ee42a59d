"""Congruence-based height lower bounds on X(F) \\ X(T)."""

from .congruence import (
    CongruencePair,
    PointReport,
    check_congruence,
    height_lower_bound,
    l1_infty,
    verify_point,
)

__all__ = [
    "CongruencePair",
    "PointReport",
    "check_congruence",
    "height_lower_bound",
    "l1_infty",
    "verify_point",
]
