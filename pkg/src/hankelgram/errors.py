"""Exception types shared across the package."""


class HankelgramError(Exception):
    """Base class for all package-specific errors."""


class DomainError(HankelgramError, ValueError):
    """A parameter lies outside the domain a formula is valid on."""


class SingularMatrixError(HankelgramError, ArithmeticError):
    """Exact elimination hit an unavoidable zero pivot."""


class SignConditionViolated(HankelgramError):
    """The one-sign-per-row hypothesis behind the eigenvalue bound failed."""


class UnsupportedFamilyError(HankelgramError, ValueError):
    """The requested closed form is not defined for this family."""


class ConvergenceFailure(HankelgramError, RuntimeError):
    """An iterative float computation exhausted its iteration budget."""
