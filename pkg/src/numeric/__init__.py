"""Certified ball arithmetic, root isolation, and adaptive refinement."""

from .ball import Ball, ComplexBall, ball_max, ball_product, mpf_to_fraction
from .refine import refine, resolve_cap, result_radius
from .roots import default_root_radius, isolate_roots

__all__ = [
    "Ball",
    "ComplexBall",
    "ball_max",
    "ball_product",
    "default_root_radius",
    "isolate_roots",
    "mpf_to_fraction",
    "refine",
    "resolve_cap",
    "result_radius",
]
