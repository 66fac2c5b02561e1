"""
Exception hierarchy for the hypergeometric period toolkit.
"""

from typing import Optional


class HypergeometricError(Exception):
    """Base class for every error raised by this package."""


class ParameterValidationError(HypergeometricError, ValueError):
    """Parameters failed schema validation or the non-integrality condition."""

    def __init__(self, message: str, violations: Optional[list] = None):
        super().__init__(message)
        self.violations = violations or []


class PoleError(HypergeometricError, ArithmeticError):
    """A Gamma argument sits on (or within tolerance of) a nonpositive integer."""

    def __init__(self, message: str, argument: Optional[complex] = None):
        super().__init__(message)
        self.argument = argument


class LowerParameterPoleError(PoleError):
    """A lower series parameter is a nonpositive integer."""


class GammaOverflowError(HypergeometricError, OverflowError):
    """Gamma value exceeds the double precision exponent range."""


class NonConvergenceError(HypergeometricError, ArithmeticError):
    """Series did not reach the requested tolerance within the term cap."""


class BranchError(HypergeometricError, ValueError):
    """Argument lies outside the region where the principal branch is used."""


class DegenerateParameterError(HypergeometricError, ZeroDivisionError):
    """A closed-form denominator vanishes (within tolerance)."""


class ExhaustionError(HypergeometricError, RuntimeError):
    """Random sampling could not produce admissible parameters."""


class SizeError(HypergeometricError, ValueError):
    """Problem size exceeds what an enumeration oracle supports."""


class DimensionError(HypergeometricError, ValueError):
    """Quadrature dimension outside the supported range."""


class IntegrabilityError(HypergeometricError, ValueError):
    """Integrand exponents do not give a convergent improper integral."""


class ParameterRangeError(HypergeometricError, ValueError):
    """Argument or parameters outside the admissible range of an operation."""
