"""
Special functions and the error hierarchy shared by every other module.
"""

from .errors import (
    BranchError,
    DegenerateParameterError,
    DimensionError,
    ExhaustionError,
    GammaOverflowError,
    HypergeometricError,
    IntegrabilityError,
    LowerParameterPoleError,
    NonConvergenceError,
    ParameterRangeError,
    ParameterValidationError,
    PoleError,
    SizeError,
)
from .special_functions import (
    gamma,
    is_near_integer,
    is_near_nonpositive_integer,
    log_gamma,
    pochhammer,
    product,
    two_pi_i_power,
    unit_circle_exp,
)

__all__ = [
    'BranchError',
    'DegenerateParameterError',
    'DimensionError',
    'ExhaustionError',
    'GammaOverflowError',
    'HypergeometricError',
    'IntegrabilityError',
    'LowerParameterPoleError',
    'NonConvergenceError',
    'ParameterRangeError',
    'ParameterValidationError',
    'PoleError',
    'SizeError',
    'gamma',
    'is_near_integer',
    'is_near_nonpositive_integer',
    'log_gamma',
    'pochhammer',
    'product',
    'two_pi_i_power',
    'unit_circle_exp',
]
