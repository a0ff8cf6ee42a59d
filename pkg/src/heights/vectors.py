"""
Projective vectors over a number field and their exterior powers.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence, Union

from src.core.errors import DimensionMismatchError, FieldMismatchError, ZeroVectorError
from src.fields.linalg import maximal_minors
from src.fields.number_field import FieldElement, NumberField

Coordinate = Union[FieldElement, int]


@dataclass(frozen=True)
class ProjectiveVector:
    """A nonzero vector (a_1, ..., a_N) in K^N, up to scaling."""

    field: NumberField
    coords: tuple[FieldElement, ...]

    def __post_init__(self):
        coords = tuple(self.field.coerce(c) for c in self.coords)
        if not coords:
            raise DimensionMismatchError("a projective vector needs at least one coordinate")
        if all(c.is_zero for c in coords):
            raise ZeroVectorError("the zero vector has no projective height")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, field: NumberField, values: Iterable[Coordinate]) -> "ProjectiveVector":
        return cls(field, tuple(values))

    @property
    def dimension(self) -> int:
        return len(self.coords)

    def scale(self, factor: Coordinate) -> "ProjectiveVector":
        return ProjectiveVector(self.field, tuple(c * factor for c in self.coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> FieldElement:
        return self.coords[i]

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def index_label(index: Sequence[int]) -> str:
    """1-based label of a 0-based index set, e.g. (0, 2) -> '13'."""
    sep = "," if any(i >= 9 for i in index) else ""
    return sep.join(str(i + 1) for i in index)


def index_sets(n: int, m: int) -> list[tuple[int, ...]]:
    """M-subsets of range(N) in lexicographic order."""
    return list(combinations(range(n), m))


@dataclass(frozen=True)
class WedgeVector:
    """Coordinates of an element of the M-th exterior power of K^N."""

    field: NumberField
    n: int
    m: int
    coords: tuple[FieldElement, ...]

    def __post_init__(self):
        if not 1 <= self.m <= self.n:
            raise DimensionMismatchError(f"need 1 <= M <= N, got M={self.m}, N={self.n}")
        expected = len(index_sets(self.n, self.m))
        if len(self.coords) != expected:
            raise DimensionMismatchError(
                f"wedge of M={self.m} in N={self.n} has {expected} coordinates, got "
                f"{len(self.coords)}"
            )
        object.__setattr__(self, "coords", tuple(self.field.coerce(c) for c in self.coords))

    @property
    def indices(self) -> list[tuple[int, ...]]:
        return index_sets(self.n, self.m)

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coords)

    def as_dict(self) -> dict[tuple[int, ...], FieldElement]:
        return dict(zip(self.indices, self.coords))

    def __getitem__(self, index: Sequence[int]) -> FieldElement:
        return self.as_dict()[tuple(sorted(index))]

    def as_projective(self) -> ProjectiveVector:
        return ProjectiveVector(self.field, self.coords)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{index_label(i)}: {c}" for i, c in self.as_dict().items()) + "}"


def wedge_coordinates(
    basis: Sequence[Union[ProjectiveVector, Sequence[Coordinate]]],
    field: Optional[NumberField] = None,
) -> WedgeVector:
    """
    Plucker coordinates w_1 ^ ... ^ w_M of M vectors in K^N.

    The coordinate at index set I is the minor with columns I, rows in the
    given order. Dependent rows give the all-zero wedge.

    Raises:
        DimensionMismatchError: If the rows have different lengths or M > N.
        FieldMismatchError: If the vectors live in different fields.
    """
    if not basis:
        raise DimensionMismatchError("need at least one basis vector")
    if field is None:
        field = next((v.field for v in basis if isinstance(v, ProjectiveVector)), None)
    if field is None:
        raise FieldMismatchError("cannot infer the field of a plain coordinate list")
    rows = []
    for v in basis:
        if isinstance(v, ProjectiveVector) and v.field != field:
            raise FieldMismatchError(f"basis vector over {v.field} in a span over {field}")
        rows.append([field.coerce(c) for c in v])
    minors = maximal_minors(rows, field)
    return WedgeVector(field, len(rows[0]), len(rows), tuple(value for _, value in minors))
