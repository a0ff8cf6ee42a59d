"""Number fields, element arithmetic, norms, and the supported-prime contract."""

from .linalg import determinant, maximal_minors
from .maximality import certify_irreducible, p_maximality_test
from .number_field import FieldElement, NumberField, minimal_polynomial, multiplication_matrix, norm

__all__ = [
    "FieldElement",
    "NumberField",
    "certify_irreducible",
    "determinant",
    "maximal_minors",
    "minimal_polynomial",
    "multiplication_matrix",
    "norm",
    "p_maximality_test",
]
