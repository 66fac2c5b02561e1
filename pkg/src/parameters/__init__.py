"""
Parameter sets, exponents, validation, transforms and random draws.
"""

from .parameter_set import (
    ExponentSet,
    ParameterSet,
    Violation,
    additional_violations,
    corollary_parameters,
    exponents,
    negate,
    require_valid,
    solution_parameters,
    validate,
)
from .sampling import random_euler_admissible, random_generic
from .schema import PARAMETER_SCHEMA, load_parameters, parameters_to_json, parse_parameters

__all__ = [
    'ExponentSet',
    'ParameterSet',
    'Violation',
    'additional_violations',
    'corollary_parameters',
    'exponents',
    'negate',
    'require_valid',
    'solution_parameters',
    'validate',
    'random_euler_admissible',
    'random_generic',
    'PARAMETER_SCHEMA',
    'load_parameters',
    'parameters_to_json',
    'parse_parameters',
]
