"""
Exact univariate polynomials over Z and Q.

Coefficient tuples are stored low-to-high (index = degree of the term); the
heavy lifting (gcd, subresultant resultants, discriminants, content) is done by
sympy's dense polynomial arithmetic.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from sympy import QQ, ZZ, Poly, Rational, Symbol

from src.core.errors import ConstantPolynomialError, ZeroPolynomialError

X = Symbol("x")

Number = Union[int, Fraction]


def to_fraction(value) -> Fraction:
    """Convert a sympy/python rational number to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if hasattr(value, "p") and hasattr(value, "q"):
        return Fraction(int(value.p), int(value.q))
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Fraction(int(value.numerator), int(value.denominator))
    return Fraction(int(value))


def _strip(coeffs: Iterable) -> tuple:
    items = list(coeffs)
    while items and items[-1] == 0:
        items.pop()
    return tuple(items)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients, low-to-high; `()` is the zero polynomial."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(int(c) for c in self.coeffs))

    @classmethod
    def from_poly(cls, poly: Poly) -> "IntPolynomial":
        values = [to_fraction(c) for c in reversed(poly.all_coeffs())]
        if any(v.denominator != 1 for v in values):
            raise ValueError("polynomial has non-integral coefficients")
        return cls(tuple(v.numerator for v in values))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def to_poly(self) -> Poly:
        return Poly(list(reversed(self.coeffs)) or [0], X, domain=ZZ)

    def to_rational(self) -> "RatPolynomial":
        return RatPolynomial(tuple(Fraction(c) for c in self.coeffs))

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_poly(self.to_poly() + other.to_poly())

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_poly(self.to_poly() - other.to_poly())

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_poly(self.to_poly() * other.to_poly())

    def __str__(self) -> str:
        return format_polynomial(self.coeffs)


@dataclass(frozen=True)
class RatPolynomial:
    """Polynomial with rational coefficients, low-to-high."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(Fraction(c) for c in self.coeffs))

    @classmethod
    def from_poly(cls, poly: Poly) -> "RatPolynomial":
        return cls(tuple(to_fraction(c) for c in reversed(poly.all_coeffs())))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def to_poly(self) -> Poly:
        terms = [Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)]
        return Poly(terms or [0], X, domain=QQ)

    def monic(self) -> "RatPolynomial":
        if self.is_zero:
            return self
        lc = self.leading
        return RatPolynomial(tuple(c / lc for c in self.coeffs))

    def clear_denominators(self) -> tuple[int, IntPolynomial]:
        """Return (D, D*self) with D the least common denominator."""
        den = 1
        for c in self.coeffs:
            den = math.lcm(den, c.denominator)
        return den, IntPolynomial(tuple(int(c * den) for c in self.coeffs))

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        return format_polynomial(self.coeffs)


def as_rational(f: Union[IntPolynomial, RatPolynomial]) -> RatPolynomial:
    return f.to_rational() if isinstance(f, IntPolynomial) else f


def poly_gcd(
    f: Union[IntPolynomial, RatPolynomial], g: Union[IntPolynomial, RatPolynomial]
) -> RatPolynomial:
    """
    Monic greatest common divisor over Q.

    gcd(f, 0) is f made monic; gcd(0, 0) is the zero polynomial.
    """
    f, g = as_rational(f), as_rational(g)
    if f.is_zero and g.is_zero:
        return RatPolynomial(())
    if g.is_zero:
        return f.monic()
    if f.is_zero:
        return g.monic()
    return RatPolynomial.from_poly(f.to_poly().gcd(g.to_poly())).monic()


def resultant(
    f: Union[IntPolynomial, RatPolynomial], g: Union[IntPolynomial, RatPolynomial]
) -> Fraction:
    """
    Exact resultant Res(f, g) via sympy's subresultant PRS.

    Raises:
        ZeroPolynomialError: If either argument is the zero polynomial.
    """
    f, g = as_rational(f), as_rational(g)
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("resultant of the zero polynomial is undefined")
    if f.degree == 0 and g.degree == 0:
        return Fraction(1)
    if g.degree == 0:
        return g.leading ** f.degree
    if f.degree == 0:
        return f.leading ** g.degree
    return to_fraction(f.to_poly().resultant(g.to_poly()))


def discriminant(f: Union[IntPolynomial, RatPolynomial]) -> Fraction:
    """
    disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f).

    Raises:
        ConstantPolynomialError: If deg f < 1.
    """
    f = as_rational(f)
    if f.degree < 1:
        raise ConstantPolynomialError("discriminant needs a polynomial of degree at least 1")
    if f.degree == 1:
        return Fraction(1)
    return to_fraction(f.to_poly().discriminant())


def content_primitive(f: IntPolynomial) -> tuple[int, IntPolynomial]:
    """
    Split f into (content, primitive part); the content is always positive.

    Raises:
        ZeroPolynomialError: If f is zero.
    """
    if f.is_zero:
        raise ZeroPolynomialError("content of the zero polynomial is undefined")
    content, primitive = f.to_poly().primitive()
    content = int(content)
    prim = IntPolynomial.from_poly(primitive)
    if content < 0:
        content = -content
        prim = IntPolynomial(tuple(-c for c in prim.coeffs))
    return content, prim


def squarefree_factors(f: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Square-free decomposition of a primitive polynomial: [(g_i, multiplicity)]."""
    _, factors = f.to_poly().sqf_list()
    return [(IntPolynomial.from_poly(g), int(m)) for g, m in factors]


def irreducible_factors(f: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Factorization over Q of a primitive polynomial into irreducibles with multiplicity."""
    _, factors = f.to_poly().factor_list()
    result = []
    for g, m in factors:
        g = IntPolynomial.from_poly(g)
        if g.leading < 0:
            g = IntPolynomial(tuple(-c for c in g.coeffs))
        result.append((g, int(m)))
    return sorted(result, key=lambda item: (item[0].degree, item[0].coeffs))


def format_polynomial(coeffs: Sequence[Number], var: str = "x") -> str:
    """Canonical text form, highest degree first, e.g. `x^2 - 2*x + 1/2`."""
    terms = [(i, Fraction(c)) for i, c in enumerate(coeffs) if c != 0]
    if not terms:
        return "0"
    parts: list[str] = []
    for i, c in reversed(terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append(f"{sign} {body}")
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]
