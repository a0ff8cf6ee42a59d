"""Exact determinants and maximal minors over a number field."""

from itertools import combinations
from typing import Sequence

from sympy import QQ, Poly
from sympy.polys.matrices import DomainMatrix

from src.core.errors import DimensionMismatchError
from src.exact.polynomials import X, RatPolynomial

from .number_field import FieldElement, NumberField

_POLY_RING = QQ[X]


def _lift(value: FieldElement):
    return _POLY_RING.from_sympy(value.as_rat_polynomial().to_poly().as_expr())


def determinant(matrix: Sequence[Sequence[FieldElement]], field: NumberField) -> FieldElement:
    """
    Determinant computed over Q[x] and reduced modulo the defining polynomial.

    Entries are lifted to their power-basis representatives; sympy's
    fraction-free elimination does the rest.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise DimensionMismatchError("determinant of a non-square matrix")
    if n == 0:
        return field.one
    rows = [[_lift(field.coerce(e)) for e in row] for row in matrix]
    det = DomainMatrix(rows, (n, n), _POLY_RING).det()
    reduced = Poly(_POLY_RING.to_sympy(det), X, domain=QQ).rem(field.defining_poly.to_poly())
    return field.element(RatPolynomial.from_poly(reduced).coeffs)


def maximal_minors(
    rows: Sequence[Sequence[FieldElement]], field: NumberField
) -> list[tuple[tuple[int, ...], FieldElement]]:
    """
    All M x M minors of an M x N matrix, columns chosen in lexicographic order.

    Rows keep the caller's order and the chosen columns stay ascending, with
    no extra sign. Index sets are 0-based.
    """
    m = len(rows)
    if m == 0:
        raise DimensionMismatchError("need at least one row")
    n = len(rows[0])
    if any(len(row) != n for row in rows):
        raise DimensionMismatchError("rows have different lengths")
    if m > n:
        raise DimensionMismatchError(f"{m} rows exceed the ambient dimension {n}")
    minors = []
    for cols in combinations(range(n), m):
        sub = [[list(row)[c] for c in cols] for row in rows]
        minors.append((cols, determinant(sub, field)))
    return minors
