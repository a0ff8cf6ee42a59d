"""Sup norms, quotient norms U_v, exterior powers and identity verifiers."""

from .linear import LinearFunctional, LinearMap, exterior_power_map
from .polynomials import HomogeneousPoly, format_form, monomial_exponents, variable_names
from .quotient import (
    dual_norm,
    projective_witness,
    random_vanishing_polynomial,
    subspace_functional,
    u_global_projective,
    u_local_dual,
    u_local_projective,
    u_subspace,
    u_witness_oracle_dual,
    u_witness_oracle_projective,
)
from .sup_norm import global_sup_norm, local_sup_norm, sup_norm_arch, sup_norm_finite
from .univariate import UnivariateReport, UnivariateRow, evaluate_at, univariate_u
from .verify import (
    IdentityReport,
    PlaceRow,
    verify_identity_dual,
    verify_identity_projective,
    verify_identity_subspace,
)

__all__ = [
    "HomogeneousPoly",
    "IdentityReport",
    "LinearFunctional",
    "LinearMap",
    "PlaceRow",
    "UnivariateReport",
    "UnivariateRow",
    "dual_norm",
    "evaluate_at",
    "exterior_power_map",
    "format_form",
    "global_sup_norm",
    "local_sup_norm",
    "monomial_exponents",
    "projective_witness",
    "random_vanishing_polynomial",
    "subspace_functional",
    "sup_norm_arch",
    "sup_norm_finite",
    "u_global_projective",
    "u_local_dual",
    "u_local_projective",
    "u_subspace",
    "u_witness_oracle_dual",
    "u_witness_oracle_projective",
    "univariate_u",
    "variable_names",
    "verify_identity_dual",
    "verify_identity_projective",
    "verify_identity_subspace",
]
