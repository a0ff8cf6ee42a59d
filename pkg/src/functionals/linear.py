"""
Linear functionals, linear maps K^N -> K^M, and the induced functional on the
M-th exterior power.
"""

from dataclasses import dataclass
from typing import Sequence, Union

from src.core.errors import DimensionMismatchError
from src.fields.linalg import maximal_minors
from src.fields.number_field import FieldElement, NumberField

Entry = Union[FieldElement, int]


@dataclass(frozen=True)
class LinearFunctional:
    """x -> sum_i c_i x_i on K^n (n = N, or C(N, M) on a wedge space)."""

    field: NumberField
    coefficients: tuple[FieldElement, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise DimensionMismatchError("a linear functional needs at least one coefficient")
        object.__setattr__(
            self, "coefficients", tuple(self.field.coerce(c) for c in self.coefficients)
        )

    @classmethod
    def of(cls, field: NumberField, values: Sequence[Entry]) -> "LinearFunctional":
        return cls(field, tuple(values))

    @property
    def dimension(self) -> int:
        return len(self.coefficients)

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coefficients)

    def __call__(self, x: Sequence[Entry]) -> FieldElement:
        if len(x) != self.dimension:
            raise DimensionMismatchError(
                f"functional on K^{self.dimension} applied to a vector of length {len(x)}"
            )
        total = self.field.zero
        for c, xi in zip(self.coefficients, x):
            total = total + c * xi
        return total

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coefficients) + ")"


@dataclass(frozen=True)
class LinearMap:
    """An M x N matrix acting on column vectors of K^N."""

    field: NumberField
    rows: tuple[tuple[FieldElement, ...], ...]

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise DimensionMismatchError("a linear map needs at least one row and column")
        width = len(self.rows[0])
        if any(len(r) != width for r in self.rows):
            raise DimensionMismatchError("rows of a linear map have different lengths")
        rows = tuple(tuple(self.field.coerce(c) for c in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, field: NumberField, rows: Sequence[Sequence[Entry]]) -> "LinearMap":
        return cls(field, tuple(tuple(r) for r in rows))

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def row_functional(self, i: int) -> LinearFunctional:
        return LinearFunctional(self.field, self.rows[i])

    def apply(self, x: Sequence[Entry]) -> tuple[FieldElement, ...]:
        return tuple(self.row_functional(i)(x) for i in range(self.m))

    def is_surjective(self) -> bool:
        """Full row rank, i.e. some maximal minor is nonzero."""
        if self.m > self.n:
            return False
        return any(not minor.is_zero for _, minor in maximal_minors(self.rows, self.field))


def exterior_power_map(psi: LinearMap) -> LinearFunctional:
    """
    The functional on the M-th exterior power of K^N induced by psi: K^N -> K^M.

    Its coefficient at index set I is the minor of psi with columns I, so that
    applied to the Plucker coordinates of w_1, ..., w_M it gives
    det(psi(w_i)_j) by Cauchy-Binet.

    Raises:
        DimensionMismatchError: If M > N.
    """
    minors = maximal_minors(psi.rows, psi.field)
    return LinearFunctional(psi.field, tuple(value for _, value in minors))
