"""
Archimedean places: certified roots of the defining polynomial, with
conjugate pairs merged into a single place of local degree 2.
"""

import logging

from src.config import get_settings
from src.core.precision import PrecisionContext, current_bits
from src.fields.number_field import FieldElement, NumberField
from src.numeric.ball import ComplexBall
from src.numeric.refine import refine
from src.numeric.roots import default_root_radius, isolate_roots

from .place import ArchimedeanPlace

logger = logging.getLogger(__name__)


def _build_places(field: NumberField, bits: int) -> list[ArchimedeanPlace]:
    roots = isolate_roots(field.defining_poly, default_root_radius(bits))
    places = []
    for root in roots:
        if root.is_real:
            places.append(ArchimedeanPlace(field, len(places), root, True, 1))
        elif root.imag.is_positive():
            places.append(ArchimedeanPlace(field, len(places), root, False, 2))
    total = sum(pl.local_degree for pl in places)
    if total != field.degree:
        raise ArithmeticError(f"archimedean local degrees sum to {total}, expected {field.degree}")
    real = sum(1 for pl in places if pl.is_real)
    logger.debug(
        f"ARCH_PLACES | field={field.name} | prec={bits} | real={real} | "
        f"complex={len(places) - real}"
    )
    return places


def archimedean_places(field: NumberField) -> list[ArchimedeanPlace]:
    """
    The real places and complex-pair places of K, in root sort order.

    Inside a working_precision() block the roots are certified at that
    precision; outside one, precision is raised until isolation succeeds.
    Tables are cached per (field, precision).

    Raises:
        PrecisionExhaustedError: If root isolation fails up to the precision cap.
    """
    if PrecisionContext.get_current_or_none() is None:
        return refine(
            lambda: archimedean_places(field),
            target_radius=1,
            radius_of=lambda _: 0,
            label="archimedean_places",
        )
    bits = current_bits(get_settings().initial_precision_bits)
    return field.memoize(("arch", bits), lambda: _build_places(field, bits))


def place_root(place: ArchimedeanPlace) -> ComplexBall:
    """Root of `place` certified at the current working precision."""
    if PrecisionContext.get_current_or_none() is None:
        return place.root
    return archimedean_places(place.field)[place.index].root


def embed(beta: FieldElement, place: ArchimedeanPlace) -> ComplexBall:
    """Enclosure of the image of beta under the embedding of `place`."""
    root = place_root(place)
    acc = ComplexBall.from_value(0)
    for c in reversed(beta.numerator.coeffs):
        acc = acc * root + c
    if beta.denominator != 1:
        acc = acc / beta.denominator
    return acc
