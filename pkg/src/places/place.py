"""
Places of a number field and exact p-power values.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Union

from src.exact.polynomials import IntPolynomial, format_polynomial
from src.fields.number_field import NumberField
from src.numeric.ball import Ball, ComplexBall


class Normalization(str, Enum):
    """Which absolute value to evaluate at a place."""

    UNNORMALIZED = "unnormalized"  # ||x||_v, extends the usual |.| or |.|_p
    NORMALIZED = "normalized"  # |x|_v = ||x||_v^(d_v/d)


@dataclass(frozen=True, order=False)
class PadicPower:
    """The exact value p^exponent, or 0 when `is_zero` is set."""

    p: int
    exponent: Fraction = Fraction(0)
    is_zero: bool = False

    def __post_init__(self):
        object.__setattr__(self, "exponent", Fraction(self.exponent))
        if self.is_zero:
            object.__setattr__(self, "exponent", Fraction(0))

    @classmethod
    def zero(cls, p: int) -> "PadicPower":
        return cls(p, Fraction(0), is_zero=True)

    @classmethod
    def one(cls, p: int) -> "PadicPower":
        return cls(p, Fraction(0))

    @property
    def is_one(self) -> bool:
        return not self.is_zero and self.exponent == 0

    def _check(self, other: "PadicPower") -> None:
        if other.p != self.p:
            raise ValueError(f"cannot combine powers of {self.p} and {other.p}")

    def __mul__(self, other: "PadicPower") -> "PadicPower":
        self._check(other)
        if self.is_zero or other.is_zero:
            return PadicPower.zero(self.p)
        return PadicPower(self.p, self.exponent + other.exponent)

    def __truediv__(self, other: "PadicPower") -> "PadicPower":
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero p-power")
        if self.is_zero:
            return self
        return PadicPower(self.p, self.exponent - other.exponent)

    def __pow__(self, n: Union[int, Fraction]) -> "PadicPower":
        if self.is_zero:
            if Fraction(n) <= 0:
                raise ZeroDivisionError("non-positive power of zero")
            return self
        return PadicPower(self.p, self.exponent * Fraction(n))

    def _key(self) -> tuple[int, Fraction]:
        return (0, Fraction(0)) if self.is_zero else (1, self.exponent)

    def __lt__(self, other: "PadicPower") -> bool:
        self._check(other)
        return self._key() < other._key()

    def __le__(self, other: "PadicPower") -> bool:
        self._check(other)
        return self._key() <= other._key()

    def to_fraction(self) -> Fraction:
        """Exact rational value; the exponent must be an integer."""
        if self.is_zero:
            return Fraction(0)
        if self.exponent.denominator != 1:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.p) ** self.exponent.numerator

    def to_ball(self) -> Ball:
        if self.is_zero:
            return Ball(0)
        if self.exponent.denominator == 1:
            return Ball(self.to_fraction())
        return Ball(self.p).rational_power(self.exponent)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if self.exponent == 0:
            return "1"
        return f"{self.p}^({self.exponent})"


def padic_max(values: list[PadicPower]) -> PadicPower:
    best = values[0]
    for v in values[1:]:
        if best < v:
            best = v
    return best


@dataclass(frozen=True)
class ArchimedeanPlace:
    """A real embedding, or a conjugate pair of complex embeddings (upper half-plane root)."""

    field: NumberField
    index: int
    root: ComplexBall = field(compare=False, repr=False)
    is_real: bool = field(compare=False)
    local_degree: int = field(compare=False)

    is_archimedean = True

    @property
    def id(self) -> str:
        return f"inf{self.index}"

    @property
    def sort_key(self) -> tuple:
        return (0, 0, self.index)


@dataclass(frozen=True)
class FinitePlace:
    """
    A prime of K above p, given by a p-adic factor of f lifted modulo p^k.

    `residue_factor` is the irreducible factor of f mod p (coefficients in
    [0, p)) that the local factor reduces to, raised to the ramification index.
    """

    field: NumberField
    p: int
    index: int
    residue_factor: IntPolynomial = field(compare=False)
    local_factor: IntPolynomial = field(compare=False, repr=False)
    precision_k: int = field(compare=False)
    ramification_e: int = field(compare=False)
    residue_f: int = field(compare=False)

    is_archimedean = False

    @property
    def local_degree(self) -> int:
        return self.ramification_e * self.residue_f

    @property
    def id(self) -> str:
        return f"p{self.p}.{self.index}"

    @property
    def sort_key(self) -> tuple:
        return (1, self.p, self.index)

    def local_factor_at(self, k: int) -> IntPolynomial:
        """Local factor lifted to precision p^k."""
        if k == self.precision_k:
            return self.local_factor
        from .finite import lifted_factors

        return lifted_factors(self.field, self.p, k)[self.index]

    def describe(self) -> str:
        g = format_polynomial(self.residue_factor.coeffs)
        e, f = self.ramification_e, self.residue_f
        return f"p={self.p}, ({g})^{e}, e={e}, f={f}"


Place = Union[ArchimedeanPlace, FinitePlace]
LocalValue = Union[Ball, PadicPower]


def local_value_to_ball(value: LocalValue) -> Ball:
    return value.to_ball() if isinstance(value, PadicPower) else value
