"""
Report models printed by the CLI, as JSON or as a plain table.
"""

from fractions import Fraction
from typing import Any, Optional

from pydantic import BaseModel, Field

from src import __version__
from src.numeric.ball import Ball
from src.places.place import ArchimedeanPlace, FinitePlace, LocalValue, PadicPower, Place

DIGITS = 20


class ValueModel(BaseModel):
    """A local value: an exact power of p, or a real enclosure."""

    p: Optional[int] = None
    exponent_num: Optional[int] = None
    exponent_den: Optional[int] = None
    zero: Optional[bool] = None
    midpoint: Optional[str] = None
    radius: Optional[str] = None

    @classmethod
    def from_value(cls, value: Any) -> "ValueModel":
        if isinstance(value, PadicPower):
            if value.is_zero:
                return cls(p=value.p, zero=True)
            return cls(
                p=value.p,
                exponent_num=value.exponent.numerator,
                exponent_den=value.exponent.denominator,
            )
        if isinstance(value, (int, Fraction)):
            return cls(midpoint=str(Fraction(value)), radius="0")
        mid, rad = Ball(value).to_strings(DIGITS)
        return cls(midpoint=mid, radius=rad)

    def text(self) -> str:
        if self.p is not None:
            if self.zero:
                return "0"
            exponent = Fraction(self.exponent_num, self.exponent_den)
            return "1" if exponent == 0 else f"{self.p}^({exponent})"
        return self.midpoint if self.radius == "0" else f"{self.midpoint} +/- {self.radius}"


class PlaceRow(BaseModel):
    """One row of the per-place table."""

    place: str
    kind: str
    local_degree: int
    p: Optional[int] = None
    description: Optional[str] = None
    values: dict[str, ValueModel] = Field(default_factory=dict)

    @classmethod
    def from_place(cls, place: Place, **values: Optional[LocalValue]) -> "PlaceRow":
        return cls(
            place=place.id,
            kind="archimedean" if isinstance(place, ArchimedeanPlace) else "finite",
            local_degree=place.local_degree,
            p=place.p if isinstance(place, FinitePlace) else None,
            values={k: ValueModel.from_value(v) for k, v in values.items() if v is not None},
        )


class GlobalValue(BaseModel):
    """A global figure as midpoint +/- radius."""

    midpoint: str
    radius: str

    @classmethod
    def from_ball(cls, value: Any) -> "GlobalValue":
        if isinstance(value, (int, Fraction)):
            return cls(midpoint=str(Fraction(value)), radius="0")
        mid, rad = Ball(value).to_strings(DIGITS)
        return cls(midpoint=mid, radius=rad)


class Report(BaseModel):
    """Output of one CLI command."""

    command: str
    request: dict[str, Any]
    places: list[PlaceRow] = Field(default_factory=list)
    global_value: Optional[GlobalValue] = Field(default=None, serialization_alias="global")
    details: dict[str, Any] = Field(default_factory=dict)
    verdict: Optional[str] = None
    version: str = __version__
    timing_ms: float = 0.0

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, exclude_none=True, indent=2)


class ErrorReport(BaseModel):
    """Output of a command that failed with a library error."""

    command: str
    request: dict[str, Any]
    error: dict[str, str]
    version: str = __version__

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)


def render_table(report: Report) -> str:
    """Human-readable rendering of a report."""
    lines = [f"{report.command}"]
    for key, value in report.request.items():
        lines.append(f"  {key}: {value}")
    if report.places:
        columns = sorted({k for row in report.places for k in row.values}, key=_column_order)
        described = any(row.description for row in report.places)
        header = ["place", "d_v"] + columns + (["description"] if described else [])
        body = [
            [row.place, str(row.local_degree)]
            + [row.values[c].text() if c in row.values else "" for c in columns]
            + ([row.description or ""] if described else [])
            for row in report.places
        ]
        widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
        lines.append("")
        lines.append("  ".join(h.ljust(w) for h, w in zip(header, widths)))
        for r in body:
            lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)))
        lines.append("")
    for key, value in report.details.items():
        lines.append(f"{key}: {value}")
    if report.global_value is not None:
        lines.append(f"global: {report.global_value.midpoint} +/- {report.global_value.radius}")
    if report.verdict is not None:
        lines.append(f"verdict: {report.verdict}")
    return "\n".join(lines)


_ORDER = ["value", "H_v", "max1", "U_v", "nu_v", "local"]


def _column_order(name: str) -> tuple[int, str]:
    return (_ORDER.index(name) if name in _ORDER else len(_ORDER), name)
