"""
Text grammar for polynomials, field elements and vectors.

- univariate polynomials over Q in `x`
- homogeneous polynomials in `x1 .. xN` (`x`, `y`, `z` for N <= 3), whose
  coefficients may involve the field generator `t`
- field elements as polynomials in `t` of degree below the field degree
- vectors as bracketed comma lists of field elements

Input is first scanned token by token so errors carry the offending
position; the token stream is then handed to sympy.
"""

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from tokenize import TokenError
from typing import Optional, Union

from sympy import Poly, Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.polyerrors import BasePolynomialError, CoercionFailed

from src.core.errors import DegreeBoundError, ExpressionSyntaxError, HomogeneityError
from src.exact.polynomials import IntPolynomial, RatPolynomial, to_fraction
from src.fields.number_field import FieldElement, NumberField
from src.functionals.polynomials import HomogeneousPoly
from src.heights.vectors import ProjectiveVector

GENERATOR = "t"
_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>\*\*|[-+*/^(),\[\]]))"
)
_TRANSFORMATIONS = standard_transformations + (convert_xor,)


class ParseMode(str, Enum):
    UNIVARIATE = "univariate"
    HOMOGENEOUS = "homogeneous"
    ELEMENT = "element"
    VECTOR = "vector"


@dataclass(frozen=True)
class Mode:
    """A parse mode with its shape parameters (N and M for homogeneous input)."""

    kind: ParseMode
    num_vars: Optional[int] = None
    degree: Optional[int] = None

    @classmethod
    def homogeneous(cls, num_vars: int, degree: Optional[int] = None) -> "Mode":
        return cls(ParseMode.HOMOGENEOUS, num_vars, degree)


UNIVARIATE = Mode(ParseMode.UNIVARIATE)
ELEMENT = Mode(ParseMode.ELEMENT)
VECTOR = Mode(ParseMode.VECTOR)

Parsed = Union[RatPolynomial, HomogeneousPoly, FieldElement, ProjectiveVector]


def _variable_aliases(num_vars: int) -> dict[str, str]:
    names = {f"x{i + 1}": f"x{i + 1}" for i in range(num_vars)}
    if num_vars <= 3:
        names.update({alias: f"x{i + 1}" for i, alias in enumerate("xyz"[:num_vars])})
    return names


def _scan(text: str, names: dict[str, str], offset: int = 0) -> str:
    """
    Validate `text` and return it with every name replaced by its canonical form.

    Raises:
        ExpressionSyntaxError: On an unknown character or name, or unbalanced brackets.
    """
    if not text.strip():
        raise ExpressionSyntaxError("empty expression", offset)
    out = []
    depth = 0
    pos = 0
    while text[pos:].strip():
        match = _TOKEN.match(text, pos)
        if match is None:
            start = len(text) - len(text[pos:].lstrip())
            raise ExpressionSyntaxError(
                f"unexpected character {text[start]!r}",
                offset + start,
            )
        kind = match.lastgroup
        start = match.start(kind)
        token = match.group(kind)
        if kind == "name":
            if token not in names:
                raise ExpressionSyntaxError(
                    f"unknown name {token!r}; "
                    f"expected one of {', '.join(sorted(names)) or 'no names'}",
                    offset + start,
                )
            token = names[token]
        elif token == "(":
            depth += 1
        elif token == ")":
            depth -= 1
            if depth < 0:
                raise ExpressionSyntaxError("unbalanced ')'", offset + start)
        elif token in "[],":
            raise ExpressionSyntaxError(f"unexpected {token!r}", offset + start)
        out.append(token)
        pos = match.end()
    if depth:
        raise ExpressionSyntaxError(f"unbalanced '(' in {text!r}", offset + len(text))
    return " ".join(out)


def _sympy(text: str, names: dict[str, str], offset: int):
    canonical = _scan(text, names, offset)
    symbols = {name: Symbol(name) for name in set(names.values())}
    try:
        return parse_expr(canonical, local_dict=symbols, transformations=_TRANSFORMATIONS)
    except (SyntaxError, TokenError, TypeError, ValueError) as e:
        raise ExpressionSyntaxError(f"cannot parse {text!r}: {e}", offset) from e


def _polynomial(expr, gens, text: str, offset: int) -> Poly:
    try:
        return Poly(expr, *gens)
    except (BasePolynomialError, CoercionFailed) as e:
        raise ExpressionSyntaxError(f"{text!r} is not a polynomial: {e}", offset) from e


def _element_from_expr(expr, field: NumberField, text: str, offset: int) -> FieldElement:
    t = Symbol(GENERATOR)
    poly = _polynomial(expr, [t], text, offset)
    if not poly.is_zero and poly.degree() >= field.degree:
        raise DegreeBoundError(
            f"element {text.strip()!r} has degree {poly.degree()} in {GENERATOR}; "
            f"the field has degree {field.degree}"
        )
    try:
        coeffs = [to_fraction(c) for c in reversed(poly.all_coeffs())]
    except (TypeError, ValueError) as e:
        raise ExpressionSyntaxError(f"non-rational coefficient in {text!r}", offset) from e
    return field.element(coeffs)


def parse_univariate(text: str) -> RatPolynomial:
    expr = _sympy(text, {"x": "x"}, 0)
    poly = _polynomial(expr, [Symbol("x")], text, 0)
    return RatPolynomial(tuple(to_fraction(c) for c in reversed(poly.all_coeffs())))


def parse_element(text: str, field: NumberField, offset: int = 0) -> FieldElement:
    expr = _sympy(text, {GENERATOR: GENERATOR}, offset)
    return _element_from_expr(expr, field, text, offset)


def _split_top_level(body: str, offset: int) -> list[tuple[str, int]]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append((body[start:i], offset + start))
            start = i + 1
    parts.append((body[start:], offset + start))
    return parts


def parse_row(text: str, field: NumberField, offset: int = 0) -> tuple[FieldElement, ...]:
    """A bracketed list `[a1, a2, ...]` of field elements; zero rows are allowed."""
    stripped = text.strip()
    lead = offset + len(text) - len(text.lstrip())
    if not (stripped.startswith("[") and stripped.endswith("]")):
        raise ExpressionSyntaxError(f"expected a bracketed list [a1, a2, ...]: {text!r}", lead)
    parts = _split_top_level(stripped[1:-1], lead + 1)
    return tuple(parse_element(p, field, o) for p, o in parts)


def parse_vector(text: str, field: NumberField) -> ProjectiveVector:
    return ProjectiveVector(field, parse_row(text, field))


def parse_rows(text: str, field: NumberField) -> list[tuple[FieldElement, ...]]:
    """Several bracketed lists separated by ';', e.g. `[1, 2, 3]; [0, 1, 1]`."""
    out, pos = [], 0
    for chunk in text.split(";"):
        if chunk.strip():
            out.append(parse_row(chunk, field, pos))
        pos += len(chunk) + 1
    return out


def parse_vectors(text: str, field: NumberField) -> list[ProjectiveVector]:
    return [ProjectiveVector(field, row) for row in parse_rows(text, field)]


def parse_homogeneous(
    text: str,
    num_vars: int,
    degree: Optional[int] = None,
    field: Optional[NumberField] = None,
) -> HomogeneousPoly:
    """
    A form in x1..xN; coefficients may use the generator when `field` is given.

    Raises:
        HomogeneityError: If the terms have different degrees or differ from `degree`.
    """
    names = _variable_aliases(num_vars)
    if field is not None:
        names[GENERATOR] = GENERATOR
    expr = _sympy(text, names, 0)
    gens = [Symbol(f"x{i + 1}") for i in range(num_vars)]
    poly = _polynomial(expr, gens, text, 0)
    terms = poly.terms()
    degrees = {sum(e) for e, _ in terms} if not poly.is_zero else set()
    if len(degrees) > 1:
        raise HomogeneityError(f"{text!r} mixes terms of degrees {sorted(degrees)}")
    actual = degrees.pop() if degrees else (degree or 0)
    if degree is not None and actual != degree:
        raise HomogeneityError(f"{text!r} has degree {actual}, expected {degree}")

    mapping: dict[tuple[int, ...], Union[Fraction, FieldElement]] = {}
    for exps, coeff in terms:
        if coeff == 0:
            continue
        if field is None:
            mapping[tuple(exps)] = to_fraction(coeff)
        else:
            mapping[tuple(exps)] = _element_from_expr(coeff, field, str(coeff), 0)
    return HomogeneousPoly.from_dict(num_vars, actual, mapping, field)


def parse_poly(text: str, mode: Mode, field: Optional[NumberField] = None) -> Parsed:
    """
    Parse `text` in the given mode.

    Raises:
        ExpressionSyntaxError: With the 0-based position of the offending input.
        HomogeneityError: For a non-homogeneous form in homogeneous mode.
        DegreeBoundError: For an element of degree >= [K : Q].
    """
    if mode.kind == ParseMode.UNIVARIATE:
        return parse_univariate(text)
    if mode.kind == ParseMode.HOMOGENEOUS:
        if mode.num_vars is None:
            raise ValueError("homogeneous mode needs the number of variables")
        return parse_homogeneous(text, mode.num_vars, mode.degree, field)
    field = field or NumberField.rationals()
    if mode.kind == ParseMode.ELEMENT:
        return parse_element(text, field)
    return parse_vector(text, field)


def parse_field_polynomial(text: str) -> IntPolynomial:
    """A defining polynomial in `t` (or `x`) with integer coefficients."""
    expr = _sympy(text, {GENERATOR: GENERATOR, "x": GENERATOR}, 0)
    poly = _polynomial(expr, [Symbol(GENERATOR)], text, 0)
    coeffs = [to_fraction(c) for c in reversed(poly.all_coeffs())]
    if any(c.denominator != 1 for c in coeffs):
        raise ExpressionSyntaxError(f"defining polynomial {text!r} must have integer coefficients")
    return IntPolynomial(tuple(int(c) for c in coeffs))
