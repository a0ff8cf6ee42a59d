"""Weil heights, Mahler measures, projective and subspace heights."""

from .projective import (
    local_projective_height,
    projective_height,
    projective_height_power,
    projective_height_report,
    subspace_height,
    subspace_height_report,
)
from .vectors import ProjectiveVector, WedgeVector, index_label, index_sets, wedge_coordinates
from .weil import (
    algebraic_number,
    mahler_measure,
    mahler_measure_from_heights,
    weil_height,
    weil_height_report,
)

__all__ = [
    "ProjectiveVector",
    "WedgeVector",
    "algebraic_number",
    "index_label",
    "index_sets",
    "local_projective_height",
    "mahler_measure",
    "mahler_measure_from_heights",
    "projective_height",
    "projective_height_power",
    "projective_height_report",
    "subspace_height",
    "subspace_height_report",
    "wedge_coordinates",
    "weil_height",
    "weil_height_report",
]
