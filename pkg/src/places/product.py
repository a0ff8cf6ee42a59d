"""
Products of local values over all relevant places of a field.

Finite factors are exact p-powers; they are combined per prime before
being turned into balls, so only the Archimedean factors and the final
irrational p-powers carry rounding.
"""

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from src.config import get_settings
from src.fields.number_field import NumberField
from src.numeric.ball import Ball, ball_product
from src.numeric.refine import refine

from .archimedean import archimedean_places
from .finite import finite_places_above
from .place import ArchimedeanPlace, FinitePlace, PadicPower

FiniteLocal = Callable[[FinitePlace], PadicPower]
ArchLocal = Callable[[ArchimedeanPlace], Ball]


@dataclass
class GlobalProduct:
    """A product over places, with the local factors that make it up."""

    value: Ball
    finite_rows: list[tuple[FinitePlace, PadicPower]] = field(default_factory=list)
    arch_rows: list[tuple[ArchimedeanPlace, Ball]] = field(default_factory=list)

    @property
    def radius(self):
        return self.value.rad

    def finite_by_prime(self) -> dict[int, PadicPower]:
        combined: dict[int, PadicPower] = {}
        for place, value in self.finite_rows:
            combined[place.p] = combined.get(place.p, PadicPower.one(place.p)) * value
        return combined


def exact_product_ball(values: Iterable[PadicPower]) -> Ball:
    """Product of p-powers, combined exactly per prime before rounding."""
    combined: dict[int, PadicPower] = {}
    for value in values:
        combined[value.p] = combined.get(value.p, PadicPower.one(value.p)) * value
    return ball_product(v.to_ball() for v in combined.values())


def finite_factors(
    field_: NumberField, primes: Iterable[int], finite_local: FiniteLocal
) -> list[tuple[FinitePlace, PadicPower]]:
    return [(pl, finite_local(pl)) for p in primes for pl in finite_places_above(field_, p)]


def evaluate_product(
    field_: NumberField,
    finite_rows: list[tuple[FinitePlace, PadicPower]],
    arch_local: ArchLocal,
) -> GlobalProduct:
    """Assemble the product at the current working precision."""
    arch_rows = [(pl, arch_local(pl)) for pl in archimedean_places(field_)]
    finite_ball = exact_product_ball(v for _, v in finite_rows)
    value = ball_product(v for _, v in arch_rows) * finite_ball
    return GlobalProduct(value, finite_rows, arch_rows)


def global_product(
    field_: NumberField,
    primes: Iterable[int],
    finite_local: FiniteLocal,
    arch_local: ArchLocal,
    target_radius: Optional[float] = None,
    label: str = "global_product",
) -> GlobalProduct:
    """
    prod_v (local value at v) over the Archimedean places and the places above `primes`.

    The finite factors are computed once; the Archimedean side is refined
    until the product's radius meets `target_radius`.
    """
    rows = finite_factors(field_, primes, finite_local)
    target = target_radius if target_radius is not None else get_settings().default_tolerance
    return refine(lambda: evaluate_product(field_, rows, arch_local), target, label=label)
