"""Core module for the error hierarchy and the working-precision context."""

from .errors import (
    BallDomainError,
    BoundInapplicableError,
    CongruenceError,
    ConstantPolynomialError,
    ConvergenceError,
    DegreeBoundError,
    DependentBasisError,
    DimensionMismatchError,
    ExpressionSyntaxError,
    FieldMismatchError,
    HeightForgeError,
    HomogeneityError,
    InvalidFieldError,
    IrreducibilityNotCertifiedError,
    KernelMeetsSubspaceError,
    NotSquarefreeError,
    PointNotOnVarietyError,
    PrecisionExhaustedError,
    SupNormBudgetError,
    TVanishesAtPointError,
    UnsupportedPrimeError,
    ZeroPolynomialError,
    ZeroVectorError,
)
from .precision import PrecisionContext, current_bits, working_precision

__all__ = [
    "BallDomainError",
    "BoundInapplicableError",
    "CongruenceError",
    "ConstantPolynomialError",
    "ConvergenceError",
    "DegreeBoundError",
    "DependentBasisError",
    "DimensionMismatchError",
    "ExpressionSyntaxError",
    "FieldMismatchError",
    "HeightForgeError",
    "HomogeneityError",
    "InvalidFieldError",
    "IrreducibilityNotCertifiedError",
    "KernelMeetsSubspaceError",
    "NotSquarefreeError",
    "PointNotOnVarietyError",
    "PrecisionContext",
    "PrecisionExhaustedError",
    "SupNormBudgetError",
    "TVanishesAtPointError",
    "UnsupportedPrimeError",
    "ZeroPolynomialError",
    "ZeroVectorError",
    "current_bits",
    "working_precision",
]
