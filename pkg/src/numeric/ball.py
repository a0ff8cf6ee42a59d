"""
Ball arithmetic on top of mpmath's outward-rounded interval context.

A Ball is an enclosure [lower, upper] of a real number, presented as
midpoint +- radius. Every operation rounds outward at `iv.prec`, which the
working_precision() context manager controls, so the result always contains
the exact image of any point choice from the operand enclosures.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from mpmath import iv, libmp, mp, mpf

from src.core.errors import BallDomainError

BallLike = Union["Ball", int, Fraction, float]


def _to_iv(value) -> "iv.mpf":
    if isinstance(value, Ball):
        return value._iv
    if isinstance(value, iv.mpf):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return iv.mpf(value.numerator)
        return iv.mpf(value.numerator) / iv.mpf(value.denominator)
    if isinstance(value, tuple):
        lo, hi = value
        return iv.mpf((_to_iv(lo), _to_iv(hi)))
    return iv.mpf(value)


def mpf_to_fraction(x: mpf) -> Fraction:
    """Exact rational value of a finite mpf."""
    p, q = libmp.to_rational(x._mpf_)
    return Fraction(int(p), int(q))


class Ball:
    """Real enclosure with outward-rounded arithmetic."""

    __slots__ = ("_iv",)

    def __init__(self, value: BallLike = 0):
        self._iv = _to_iv(value)

    # Construction

    @classmethod
    def from_endpoints(cls, lower: BallLike, upper: BallLike) -> "Ball":
        lo, hi = _to_iv(lower), _to_iv(upper)
        return cls(iv.mpf((lo, hi)))

    @classmethod
    def from_mid_rad(cls, mid: BallLike, rad: BallLike) -> "Ball":
        r = abs(_to_iv(rad))
        return cls(_to_iv(mid) + iv.mpf((-r, r)))

    # Geometry

    @property
    def lower(self) -> mpf:
        return mp.make_mpf(self._iv._mpi_[0])

    @property
    def upper(self) -> mpf:
        return mp.make_mpf(self._iv._mpi_[1])

    @property
    def mid(self) -> mpf:
        return mp.make_mpf(self._iv.mid._mpi_[0])

    @property
    def rad(self) -> mpf:
        """Half-width, computed exactly."""
        return mp.ldexp(mp.fsub(self.upper, self.lower, exact=True), -1)

    @property
    def width(self) -> mpf:
        return mp.fsub(self.upper, self.lower, exact=True)

    def is_exact(self) -> bool:
        return self._iv._mpi_[0] == self._iv._mpi_[1]

    def contains(self, value: BallLike) -> bool:
        """True if the enclosure of `value` lies inside this ball."""
        if isinstance(value, (int, Fraction)):
            q = Fraction(value)
            lo, hi = self.lower, self.upper
            below = mp.isinf(lo) or mpf_to_fraction(lo) <= q
            return bool(below) and bool(mp.isinf(hi) or q <= mpf_to_fraction(hi))
        other = _to_iv(value)
        return bool(self.lower <= mp.make_mpf(other._mpi_[0])) and bool(
            mp.make_mpf(other._mpi_[1]) <= self.upper
        )

    def overlaps(self, other: BallLike) -> bool:
        o = Ball(other)
        return bool(self.lower <= o.upper) and bool(o.lower <= self.upper)

    def contains_zero(self) -> bool:
        return bool(self.lower <= 0) and bool(self.upper >= 0)

    def is_positive(self) -> bool:
        return bool(self.lower > 0)

    # Arithmetic

    def __add__(self, other: BallLike) -> "Ball":
        return Ball(self._iv + _to_iv(other))

    __radd__ = __add__

    def __sub__(self, other: BallLike) -> "Ball":
        return Ball(self._iv - _to_iv(other))

    def __rsub__(self, other: BallLike) -> "Ball":
        return Ball(_to_iv(other) - self._iv)

    def __mul__(self, other: BallLike) -> "Ball":
        return Ball(self._iv * _to_iv(other))

    __rmul__ = __mul__

    def __truediv__(self, other: BallLike) -> "Ball":
        divisor = Ball(other)
        if divisor.contains_zero():
            raise BallDomainError(f"division by an enclosure containing 0: {divisor!r}")
        return Ball(self._iv / divisor._iv)

    def __rtruediv__(self, other: BallLike) -> "Ball":
        return Ball(other) / self

    def __neg__(self) -> "Ball":
        return Ball(-self._iv)

    def __abs__(self) -> "Ball":
        return Ball(abs(self._iv))

    def __pow__(self, exponent: Union[int, Fraction]) -> "Ball":
        if isinstance(exponent, Fraction) and exponent.denominator != 1:
            return self.rational_power(exponent)
        n = int(exponent)
        if n < 0:
            return Ball(1) / (self ** (-n))
        return Ball(self._iv**n)

    def rational_power(self, exponent: Fraction) -> "Ball":
        """
        x^(p/q) for an enclosure inside the positive reals.

        Raises:
            BallDomainError: If the enclosure touches 0 or the negative reals.
        """
        exponent = Fraction(exponent)
        if exponent.denominator == 1:
            return self ** exponent.numerator
        if not self.is_positive():
            raise BallDomainError(f"rational power of an enclosure touching <= 0: {self!r}")
        q = iv.mpf(exponent.numerator) / iv.mpf(exponent.denominator)
        return Ball(iv.exp(iv.ln(self._iv) * q))

    def nonnegative_power(self, exponent: Fraction) -> "Ball":
        """x^(p/q) for p/q > 0 on an enclosure whose lower end may reach 0."""
        if self.is_positive() or Fraction(exponent).denominator == 1:
            return self ** Fraction(exponent)
        if bool(self.upper < 0):
            raise BallDomainError(f"rational power of a negative enclosure: {self!r}")
        upper = Ball(self.upper).rational_power(Fraction(exponent)) if self.upper > 0 else Ball(0)
        return Ball.from_endpoints(0, upper.upper)

    def log(self) -> "Ball":
        if not self.is_positive():
            raise BallDomainError(f"logarithm of an enclosure touching <= 0: {self!r}")
        return Ball(iv.ln(self._iv))

    def sqrt(self) -> "Ball":
        if bool(self.lower < 0):
            raise BallDomainError(f"square root of an enclosure touching the negatives: {self!r}")
        return Ball(iv.sqrt(self._iv))

    # Presentation

    def to_strings(self, digits: int = 20) -> tuple[str, str]:
        """(midpoint, radius) as deterministic decimal strings."""
        return mp.nstr(self.mid, digits), mp.nstr(self.rad, 3)

    def __float__(self) -> float:
        return float(self.mid)

    def __repr__(self) -> str:
        mid, rad = self.to_strings(15)
        return f"[{mid} +/- {rad}]"


def ball_max(a: BallLike, b: BallLike) -> Ball:
    """Enclosure of max(x, y) for x in a, y in b."""
    a, b = Ball(a), Ball(b)
    lo = a.lower if a.lower >= b.lower else b.lower
    hi = a.upper if a.upper >= b.upper else b.upper
    return Ball.from_endpoints(lo, hi)


def ball_product(values) -> Ball:
    acc = Ball(1)
    for v in values:
        acc = acc * v
    return acc


@dataclass(frozen=True)
class ComplexBall:
    """Rectangular complex enclosure real + i*imag."""

    real: Ball
    imag: Ball

    @classmethod
    def from_value(cls, value) -> "ComplexBall":
        if isinstance(value, ComplexBall):
            return value
        if hasattr(value, "imag") and hasattr(value, "real") and not isinstance(
            value, (int, Fraction)
        ):
            return cls(Ball(mpf(value.real)), Ball(mpf(value.imag)))
        return cls(Ball(value), Ball(0))

    @property
    def is_real(self) -> bool:
        """True when the imaginary part is exactly zero (a certified real value)."""
        return self.imag.is_exact() and self.imag.contains(0)

    @property
    def rad(self) -> mpf:
        return max(self.real.rad, self.imag.rad)

    def conjugate(self) -> "ComplexBall":
        return ComplexBall(self.real, -self.imag)

    def __add__(self, other) -> "ComplexBall":
        o = ComplexBall.from_value(other)
        return ComplexBall(self.real + o.real, self.imag + o.imag)

    __radd__ = __add__

    def __sub__(self, other) -> "ComplexBall":
        o = ComplexBall.from_value(other)
        return ComplexBall(self.real - o.real, self.imag - o.imag)

    def __rsub__(self, other) -> "ComplexBall":
        return ComplexBall.from_value(other) - self

    def __mul__(self, other) -> "ComplexBall":
        o = ComplexBall.from_value(other)
        if self.is_real and o.is_real:
            return ComplexBall(self.real * o.real, Ball(0))
        return ComplexBall(
            self.real * o.real - self.imag * o.imag,
            self.real * o.imag + self.imag * o.real,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ComplexBall":
        o = ComplexBall.from_value(other)
        if o.is_real:
            return ComplexBall(self.real / o.real, self.imag / o.real)
        den = o.real**2 + o.imag**2
        num = self * o.conjugate()
        return ComplexBall(num.real / den, num.imag / den)

    def __neg__(self) -> "ComplexBall":
        return ComplexBall(-self.real, -self.imag)

    def __abs__(self) -> Ball:
        if self.is_real:
            return abs(self.real)
        return (self.real**2 + self.imag**2).sqrt()

    def __repr__(self) -> str:
        return f"({self.real!r} + i*{self.imag!r})"
