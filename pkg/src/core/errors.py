"""
Error hierarchy with stable codes and CLI exit codes.
"""

from typing import Optional


class HeightForgeError(Exception):
    """Base error for every failure the library reports to callers."""

    code: str = "INTERNAL"
    exit_code: int = 2

    def __init__(self, message: str, *, code: Optional[str] = None):
        super().__init__(message)
        self.message = message
        if code is not None:
            self.code = code

    def to_dict(self) -> dict[str, str]:
        """Serialize the error for JSON reports."""
        return {"code": self.code, "message": self.message}


# Input validation


class ZeroPolynomialError(HeightForgeError, ValueError):
    code = "ZERO_POLYNOMIAL"


class ConstantPolynomialError(HeightForgeError, ValueError):
    code = "CONSTANT_POLYNOMIAL"


class NotSquarefreeError(HeightForgeError, ValueError):
    code = "NOT_SQUAREFREE"


class InvalidFieldError(HeightForgeError, ValueError):
    code = "INVALID_FIELD"


class IrreducibilityNotCertifiedError(HeightForgeError, ValueError):
    code = "IRREDUCIBILITY_NOT_CERTIFIED"


class FieldMismatchError(HeightForgeError, ValueError):
    code = "FIELD_MISMATCH"


class DimensionMismatchError(HeightForgeError, ValueError):
    code = "DIMENSION_MISMATCH"


class ZeroVectorError(HeightForgeError, ValueError):
    code = "ZERO_VECTOR"


class ExpressionSyntaxError(HeightForgeError, ValueError):
    """Malformed expression text; `position` is the 0-based offending offset."""

    code = "SYNTAX_ERROR"

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.detail = message
        self.position = position


class HomogeneityError(HeightForgeError, ValueError):
    code = "NOT_HOMOGENEOUS"


class DegreeBoundError(HeightForgeError, ValueError):
    code = "DEGREE_BOUND"


# Arithmetic contracts


class UnsupportedPrimeError(HeightForgeError):
    code = "UNSUPPORTED_PRIME"

    def __init__(self, p: int, reason: str):
        super().__init__(f"prime {p} is not supported: {reason}")
        self.p = p


class BallDomainError(HeightForgeError, ArithmeticError):
    code = "BALL_DOMAIN"


class ConvergenceError(HeightForgeError, ArithmeticError):
    """Raised when a computation cannot certify its result at the current precision."""

    code = "NO_CONVERGENCE"
    exit_code = 1


class PrecisionExhaustedError(HeightForgeError, ArithmeticError):
    code = "PRECISION_EXHAUSTED"
    exit_code = 1


class SupNormBudgetError(HeightForgeError, ArithmeticError):
    code = "SUP_NORM_BUDGET"
    exit_code = 1


# Functional and bound preconditions


class TVanishesAtPointError(HeightForgeError, ValueError):
    code = "T_VANISHES"


class KernelMeetsSubspaceError(HeightForgeError, ValueError):
    code = "KERNEL_MEETS_SUBSPACE"


class DependentBasisError(HeightForgeError, ValueError):
    code = "DEPENDENT_BASIS"


class CongruenceError(HeightForgeError, ValueError):
    code = "CONGRUENCE_FAILED"


class PointNotOnVarietyError(HeightForgeError, ValueError):
    code = "NOT_ON_VARIETY"


class BoundInapplicableError(HeightForgeError, ValueError):
    code = "ON_AUXILIARY_VARIETY"
