"""
Homogeneous polynomials in N variables with rational or number-field coefficients.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Optional, Sequence, Union

from src.core.errors import DimensionMismatchError, FieldMismatchError, HomogeneityError
from src.exact.polynomials import RatPolynomial
from src.fields.number_field import FieldElement, NumberField

Coefficient = Union[FieldElement, Fraction, int]
Exponent = tuple[int, ...]


def _is_zero(c: Coefficient) -> bool:
    return c.is_zero if isinstance(c, FieldElement) else c == 0


def _normalize(c: Coefficient) -> Union[FieldElement, Fraction]:
    if isinstance(c, FieldElement):
        return c
    return Fraction(c)


def monomial_exponents(num_vars: int, degree: int) -> list[Exponent]:
    """All exponent vectors of total degree `degree`, lexicographically descending."""
    out = []
    for combo in combinations_with_replacement(range(num_vars), degree):
        exps = [0] * num_vars
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return sorted(set(out), reverse=True)


def variable_names(num_vars: int) -> list[str]:
    return [f"x{i + 1}" for i in range(num_vars)]


@dataclass(frozen=True)
class HomogeneousPoly:
    """
    sum_r c_r z^(e_r) with every |e_r| = degree.

    Terms are kept with nonzero coefficients only, ordered lexicographically
    descending by exponent. `field` is set once any coefficient is a field
    element; rational coefficients are then read as elements of that field.
    """

    num_vars: int
    degree: int
    terms: tuple[tuple[Exponent, Union[FieldElement, Fraction]], ...] = ()
    field: Optional[NumberField] = None

    def __post_init__(self):
        if self.num_vars < 1:
            raise DimensionMismatchError("a homogeneous polynomial needs at least one variable")
        if self.degree < 0:
            raise HomogeneityError(f"negative degree {self.degree}")
        field = self.field
        merged: dict[Exponent, Union[FieldElement, Fraction]] = {}
        for exps, coeff in self.terms:
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.num_vars:
                raise DimensionMismatchError(
                    f"exponent {exps} has {len(exps)} entries, expected {self.num_vars}"
                )
            if any(e < 0 for e in exps):
                raise HomogeneityError(f"negative exponent in {exps}")
            if sum(exps) != self.degree:
                raise HomogeneityError(
                    f"monomial of degree {sum(exps)} in a form of degree {self.degree}"
                )
            coeff = _normalize(coeff)
            if isinstance(coeff, FieldElement):
                if field is None:
                    field = coeff.field
                elif coeff.field != field:
                    raise FieldMismatchError(f"coefficient in {coeff.field}, expected {field}")
            merged[exps] = merged[exps] + coeff if exps in merged else coeff
        terms = tuple(
            (e, c) for e, c in sorted(merged.items(), reverse=True) if not _is_zero(c)
        )
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "field", field)

    # Construction

    @classmethod
    def from_dict(
        cls,
        num_vars: int,
        degree: int,
        mapping: Mapping[Sequence[int], Coefficient],
        field: Optional[NumberField] = None,
    ) -> "HomogeneousPoly":
        return cls(num_vars, degree, tuple((tuple(e), c) for e, c in mapping.items()), field)

    @classmethod
    def monomial(
        cls, exponents: Sequence[int], coeff: Coefficient = 1, field: Optional[NumberField] = None
    ) -> "HomogeneousPoly":
        exps = tuple(exponents)
        return cls(len(exps), sum(exps), ((exps, coeff),), field)

    @classmethod
    def zero(cls, num_vars: int, degree: int, field: Optional[NumberField] = None):
        return cls(num_vars, degree, (), field)

    @classmethod
    def linear(
        cls, coefficients: Sequence[Coefficient], field: Optional[NumberField] = None
    ) -> "HomogeneousPoly":
        n = len(coefficients)
        terms = tuple(
            (tuple(1 if j == i else 0 for j in range(n)), c) for i, c in enumerate(coefficients)
        )
        return cls(n, 1, terms, field)

    @classmethod
    def homogenize(
        cls, poly: RatPolynomial, degree: Optional[int] = None, field: Optional[NumberField] = None
    ) -> "HomogeneousPoly":
        """z2^D * T(z1/z2) for a univariate T, with D = deg T unless given."""
        d = max(poly.degree, 0) if degree is None else degree
        if poly.degree > d:
            raise HomogeneityError(f"cannot homogenize degree {poly.degree} to degree {d}")
        terms = tuple(((k, d - k), c) for k, c in enumerate(poly.coeffs))
        return cls(2, d, terms, field)

    # Views

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def coefficients(self) -> list[Union[FieldElement, Fraction]]:
        return [c for _, c in self.terms]

    def coefficient(self, exponents: Sequence[int]) -> Union[FieldElement, Fraction]:
        return dict(self.terms).get(tuple(exponents), Fraction(0))

    def coefficients_in(self, field: NumberField) -> list[FieldElement]:
        if self.field is not None and self.field != field:
            raise FieldMismatchError(f"polynomial over {self.field} used over {field}")
        return [field.coerce(c) for c in self.coefficients]

    def is_integral(self) -> bool:
        return all(isinstance(c, Fraction) and c.denominator == 1 for c in self.coefficients)

    def integer_terms(self) -> dict[Exponent, int]:
        if not self.is_integral():
            raise ValueError(f"{self} does not have integer coefficients")
        return {e: int(c) for e, c in self.terms}

    def same_shape(self, other: "HomogeneousPoly") -> bool:
        return self.num_vars == other.num_vars and self.degree == other.degree

    # Arithmetic

    def __call__(self, point: Sequence[Coefficient]) -> Union[FieldElement, Fraction]:
        """Exact value at `point`; field-valued when the point or coefficients are."""
        if len(point) != self.num_vars:
            raise DimensionMismatchError(
                f"point has {len(point)} coordinates, polynomial has {self.num_vars} variables"
            )
        field = self.field or next((c.field for c in point if isinstance(c, FieldElement)), None)
        if field is None:
            values = [Fraction(c) for c in point]
            total = Fraction(0)
        else:
            values = [field.coerce(c) for c in point]
            total = field.zero
        for exps, coeff in self.terms:
            term = field.coerce(coeff) if field is not None else coeff
            for value, e in zip(values, exps):
                if e:
                    term = term * value**e
            total = total + term
        return total

    def _check_shape(self, other: "HomogeneousPoly") -> None:
        if not self.same_shape(other):
            raise DimensionMismatchError(
                f"shapes differ: ({self.num_vars}, {self.degree}) vs "
                f"({other.num_vars}, {other.degree})"
            )

    def __add__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        self._check_shape(other)
        return HomogeneousPoly(
            self.num_vars, self.degree, self.terms + other.terms, self.field or other.field
        )

    def __neg__(self) -> "HomogeneousPoly":
        return self.scale(-1)

    def __sub__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        return self + (-other)

    def scale(self, factor: Coefficient) -> "HomogeneousPoly":
        field = self.field or (factor.field if isinstance(factor, FieldElement) else None)
        return HomogeneousPoly(
            self.num_vars, self.degree, tuple((e, c * factor) for e, c in self.terms), field
        )

    def __mul__(self, other: Union["HomogeneousPoly", Coefficient]) -> "HomogeneousPoly":
        if not isinstance(other, HomogeneousPoly):
            return self.scale(other)
        if self.num_vars != other.num_vars:
            raise DimensionMismatchError("product of forms in different numbers of variables")
        terms = []
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                terms.append((tuple(a + b for a, b in zip(e1, e2)), c1 * c2))
        return HomogeneousPoly(
            self.num_vars, self.degree + other.degree, tuple(terms), self.field or other.field
        )

    def __str__(self) -> str:
        return format_form(self)


def format_form(poly: HomogeneousPoly, names: Optional[Iterable[str]] = None) -> str:
    """Canonical text, e.g. `x1^2 + 3*x1*x2 - x2^2`."""
    names = list(names) if names is not None else variable_names(poly.num_vars)
    if poly.is_zero:
        return "0"
    parts = []
    for exps, coeff in poly.terms:
        mono = "*".join(
            name if e == 1 else f"{name}^{e}" for name, e in zip(names, exps) if e
        )
        if isinstance(coeff, FieldElement):
            text = f"({coeff})"
            sign = "+"
        else:
            sign = "-" if coeff < 0 else "+"
            text = str(abs(coeff))
        if not mono:
            body = text
        elif text == "1":
            body = mono
        else:
            body = f"{text}*{mono}"
        parts.append(f"{sign} {body}")
    out = " ".join(parts)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]
