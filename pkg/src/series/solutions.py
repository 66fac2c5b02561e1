"""
The fundamental system f_0, ..., f_m of the hypergeometric equation near x = 0.
"""

import cmath
from typing import List, Optional

from config.settings import settings
from src.core import BranchError, product
from src.parameters import ParameterSet, require_valid, solution_parameters
from src.series.hypergeometric import SeriesValue, ghf, series_coefficients


def _real_unit_interval(x: complex) -> float:
    x = complex(x)
    if x.imag != 0.0 or not 0.0 < x.real < 1.0:
        raise BranchError(f"x^(1 - b_r) uses the principal branch only for real x in (0, 1), got {x}")
    return x.real


def fundamental_solution(k: int, p: ParameterSet, x: complex, tol: Optional[float] = None) -> SeriesValue:
    """f_0 = F(a_1..a_{m+1}; b; x) and f_r = x^{1-b_r} F(a - b_r + 1; ...; x)."""
    require_valid(p)
    upper, lower = solution_parameters(k, p)
    if k == 0:
        return ghf(upper, lower, x, tol)

    x_real = _real_unit_interval(x)
    series = ghf(upper, lower, x_real, tol)
    factor = cmath.exp((1 - p.b[k]) * cmath.log(x_real))
    return SeriesValue(
        value=factor * series.value,
        terms_used=series.terms_used,
        tail_bound=abs(factor) * series.tail_bound,
    )


def fundamental_system(p: ParameterSet, x: complex, tol: Optional[float] = None) -> List[SeriesValue]:
    """All of f_0..f_m at x."""
    return [fundamental_solution(k, p, x, tol) for k in range(p.m + 1)]


def ode_residuals(k: int, p: ParameterSet, n_max: int = 50) -> List[float]:
    """Relative residuals of the coefficient recurrence of the differential equation.

    With f_k = x^shift sum c_n x^n and s = n + shift the operator
    theta prod(theta + b_i - 1) - x prod(theta + a_j) annihilates f_k iff
    s prod(s + b_i - 1) c_n = prod(s - 1 + a_j) c_{n-1} for n >= 1.
    """
    upper, lower = solution_parameters(k, p)
    coefficients = series_coefficients(upper, lower, n_max + 1)
    shift = 0j if k == 0 else 1 - p.b[k]

    residuals = []
    for n in range(1, n_max + 1):
        s = n + shift
        lhs = s * product([s + b - 1 for b in p.b[1:]]) * coefficients[n]
        rhs = product([s - 1 + a for a in p.a]) * coefficients[n - 1]
        scale = max(abs(lhs), abs(rhs), settings.tiny)
        residuals.append(abs(lhs - rhs) / scale)
    return residuals
