"""Places of number fields, absolute values, and the product formula."""

from .absolute import (
    AbsoluteValue,
    ProductFormulaReport,
    abs_value,
    arch_abs,
    candidate_finite_places,
    finite_abs,
    finite_exponent,
    places_for,
    product_formula_check,
)
from .archimedean import archimedean_places, embed
from .finite import finite_places_above, lifted_factors, single_slope_certificate
from .place import (
    ArchimedeanPlace,
    FinitePlace,
    LocalValue,
    Normalization,
    PadicPower,
    Place,
    local_value_to_ball,
    padic_max,
)
from .product import (
    GlobalProduct,
    evaluate_product,
    exact_product_ball,
    finite_factors,
    global_product,
)

__all__ = [
    "AbsoluteValue",
    "ArchimedeanPlace",
    "FinitePlace",
    "GlobalProduct",
    "LocalValue",
    "Normalization",
    "PadicPower",
    "Place",
    "ProductFormulaReport",
    "abs_value",
    "arch_abs",
    "archimedean_places",
    "candidate_finite_places",
    "embed",
    "evaluate_product",
    "exact_product_ball",
    "finite_abs",
    "finite_exponent",
    "finite_factors",
    "finite_places_above",
    "global_product",
    "lifted_factors",
    "local_value_to_ball",
    "padic_max",
    "places_for",
    "product_formula_check",
    "single_slope_certificate",
]
