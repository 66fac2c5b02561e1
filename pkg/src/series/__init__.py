"""
Hypergeometric series and the fundamental system of solutions.
"""

from .hypergeometric import SeriesValue, ghf, series_coefficients
from .solutions import fundamental_solution, fundamental_system, ode_residuals

__all__ = [
    'SeriesValue',
    'ghf',
    'series_coefficients',
    'fundamental_solution',
    'fundamental_system',
    'ode_residuals',
]
