"""
Number fields K = Q[x]/(f) and their elements.

Elements are stored as an integer numerator polynomial in the generator plus a
positive integer denominator, reduced modulo the monic defining polynomial.
"""

import logging
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Hashable, Iterable, Optional, TypeVar, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.config import get_settings
from src.core.errors import FieldMismatchError, InvalidFieldError
from src.exact.polynomials import (
    IntPolynomial,
    RatPolynomial,
    discriminant,
    format_polynomial,
    resultant,
    to_fraction,
)

logger = logging.getLogger(__name__)

T = TypeVar("T")
Scalar = Union[int, Fraction]


class NumberField:
    """
    The field Q[x]/(f) for a monic irreducible integer polynomial f.

    Irreducibility is certified at construction unless the caller vouches for
    it (factors produced by a full factorization over Q). Per-field caches for
    places and lifted local factors are filled lazily behind a lock.
    """

    def __init__(
        self,
        defining_poly: IntPolynomial,
        name: Optional[str] = None,
        *,
        assume_irreducible: bool = False,
    ):
        if defining_poly.degree < 1:
            raise InvalidFieldError("defining polynomial must have degree at least 1")
        if defining_poly.leading != 1:
            raise InvalidFieldError(
                f"defining polynomial {defining_poly} is not monic; replace x by x/lc and "
                "clear denominators to obtain a monic integral polynomial for the same field"
            )
        self.defining_poly = defining_poly
        self.degree = defining_poly.degree
        self.name = name or format_polynomial(defining_poly.coeffs, "t")
        self._lock = threading.Lock()
        self._cache: dict[Hashable, Any] = {}
        self._poly = defining_poly.to_poly()

        if not assume_irreducible:
            from .maximality import certify_irreducible

            settings = get_settings()
            certify_irreducible(
                defining_poly,
                prime_bound=settings.irreducibility_prime_bound,
                prime_count=settings.irreducibility_prime_count,
            )

    @classmethod
    def rationals(cls) -> "NumberField":
        return cls(IntPolynomial((0, 1)), name="Q", assume_irreducible=True)

    # Caching

    def memoize(self, key: Hashable, factory: Callable[[], T]) -> T:
        """
        Return the cached value for `key`, computing it with `factory` if absent.

        The factory runs outside the lock; racing writers store identical values.
        """
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = factory()
        with self._lock:
            return self._cache.setdefault(key, value)

    @property
    def discriminant(self) -> Fraction:
        return self.memoize("discriminant", lambda: discriminant(self.defining_poly))

    # Element construction

    def element(self, coeffs: Iterable[Scalar], denominator: int = 1) -> "FieldElement":
        """Element sum(coeffs[i] * theta^i) / denominator; coefficients may be rational."""
        values = [Fraction(c) / int(denominator) for c in coeffs]
        den = 1
        for v in values:
            den = math.lcm(den, v.denominator)
        numer = tuple(int(v * den) for v in values)
        return FieldElement(self, IntPolynomial(numer), den)

    def from_rational(self, value: Scalar) -> "FieldElement":
        value = Fraction(value)
        return FieldElement(self, IntPolynomial((value.numerator,)), value.denominator)

    def coerce(self, value: Union["FieldElement", Scalar]) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"element of {value.field} used in {self}")
            return value
        return self.from_rational(value)

    @property
    def generator(self) -> "FieldElement":
        return FieldElement(self, IntPolynomial((0, 1)), 1)

    @property
    def zero(self) -> "FieldElement":
        return self.from_rational(0)

    @property
    def one(self) -> "FieldElement":
        return self.from_rational(1)

    # Protocol

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NumberField) and other.defining_poly == self.defining_poly

    def __hash__(self) -> int:
        return hash(("NumberField", self.defining_poly.coeffs))

    def __repr__(self) -> str:
        return f"NumberField({self.name})"

    __str__ = __repr__


@dataclass(frozen=True, eq=True)
class FieldElement:
    """b(theta) / denominator with deg b < [K:Q] and gcd(content(b), denominator) = 1."""

    field: NumberField
    numerator: IntPolynomial
    denominator: int = 1

    def __post_init__(self):
        if self.denominator == 0:
            raise ZeroDivisionError("field element with zero denominator")
        numer = self.numerator
        if numer.degree >= self.field.degree:
            numer = IntPolynomial.from_poly(numer.to_poly().rem(self.field._poly))
        den = int(self.denominator)
        if den < 0:
            numer, den = IntPolynomial(tuple(-c for c in numer.coeffs)), -den
        g = math.gcd(den, *numer.coeffs) if numer.coeffs else den
        if g > 1:
            numer = IntPolynomial(tuple(c // g for c in numer.coeffs))
            den //= g
        if numer.is_zero:
            den = 1
        object.__setattr__(self, "numerator", numer)
        object.__setattr__(self, "denominator", den)

    # Views

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    @property
    def is_rational(self) -> bool:
        return self.numerator.degree <= 0

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        """Rational coefficients in the power basis, padded to [K:Q]."""
        coeffs = [Fraction(c, self.denominator) for c in self.numerator.coeffs]
        return tuple(coeffs + [Fraction(0)] * (self.field.degree - len(coeffs)))

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return Fraction(self.numerator.coeffs[0] if self.numerator.coeffs else 0, self.denominator)

    def as_rat_polynomial(self) -> RatPolynomial:
        return RatPolynomial(tuple(Fraction(c, self.denominator) for c in self.numerator.coeffs))

    # Arithmetic

    def _coerce(self, other: Union["FieldElement", Scalar]) -> "FieldElement":
        return self.field.coerce(other)

    def __add__(self, other):
        o = self._coerce(other)
        num = (
            self.numerator.to_poly() * o.denominator + o.numerator.to_poly() * self.denominator
        )
        den = self.denominator * o.denominator
        return FieldElement(self.field, IntPolynomial.from_poly(num), den)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(
            self.field, IntPolynomial(tuple(-c for c in self.numerator.coeffs)), self.denominator
        )

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        num = (self.numerator.to_poly() * o.numerator.to_poly()).rem(self.field._poly)
        den = self.denominator * o.denominator
        return FieldElement(self.field, IntPolynomial.from_poly(num), den)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """
        Multiplicative inverse via the extended Euclidean algorithm against f.

        Raises:
            ZeroDivisionError: If the element is zero.
        """
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero in a number field")
        b = self.numerator.to_rational().to_poly()
        modulus = self.field.defining_poly.to_rational().to_poly()
        inv = RatPolynomial.from_poly(b.invert(modulus))
        scale, numer = inv.clear_denominators()
        return FieldElement(self.field, IntPolynomial(numer.coeffs), scale) * self.denominator

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self) -> str:
        body = format_polynomial(self.numerator.coeffs, "t")
        if self.denominator == 1:
            return body
        return f"({body})/{self.denominator}"

    def __repr__(self) -> str:
        return f"FieldElement({self}, field={self.field.name})"


def norm(beta: FieldElement) -> Fraction:
    """
    N_{K/Q}(beta) = Res(f, b) / den^d, exact and signed.
    """
    if beta.is_zero:
        return Fraction(0)
    field = beta.field
    res = resultant(field.defining_poly, beta.numerator)
    return res / Fraction(beta.denominator) ** field.degree


def multiplication_matrix(beta: FieldElement) -> DomainMatrix:
    """Matrix over QQ of x -> beta*x in the power basis (columns are images of theta^j)."""
    field = beta.field
    d = field.degree
    theta = field.generator
    columns = []
    image = beta
    for _ in range(d):
        columns.append(image.coefficients)
        image = image * theta
    rows = [
        [QQ(columns[j][i].numerator, columns[j][i].denominator) for j in range(d)]
        for i in range(d)
    ]
    return DomainMatrix(rows, (d, d), QQ)


def minimal_polynomial(beta: FieldElement) -> IntPolynomial:
    """
    Primitive integer minimal polynomial of beta with positive leading coefficient.

    The characteristic polynomial of multiplication by beta is a power of the
    minimal polynomial, so its square-free part is the answer.
    """
    charpoly = multiplication_matrix(beta).charpoly()
    coeffs = [to_fraction(QQ.to_sympy(c)) for c in reversed(charpoly)]
    minimal = RatPolynomial(tuple(coeffs)).to_poly().sqf_part()
    _, integral = minimal.clear_denoms(convert=True)
    _, primitive = integral.primitive()
    result = IntPolynomial.from_poly(primitive)
    if result.leading < 0:
        result = IntPolynomial(tuple(-c for c in result.coeffs))
    return result
