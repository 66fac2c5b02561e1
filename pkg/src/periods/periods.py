"""
Closed-form periods of u phi_0 over the twisted cycles Delta_k and their duals.

Each period is a Gamma prefactor times the fundamental solution f_k, valid for
real x in (0, x_max(m)].
"""

import cmath
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.core import BranchError, GammaOverflowError, PoleError, gamma, product
from src.parameters import ParameterSet, negate, require_valid
from src.series import fundamental_solution


def x_max(m: int) -> float:
    """Largest x for which the cycles Delta_0..Delta_m are constructed."""
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    return (1.0 / 3.0) * 0.75 ** (m - 1)


def check_x(m: int, x: float) -> float:
    """Return x as a float, or raise BranchError outside (0, x_max(m)]."""
    x_complex = complex(x)
    limit = x_max(m)
    if x_complex.imag != 0.0 or not 0.0 < x_complex.real <= limit:
        raise BranchError(f"period formulas need real x in (0, {limit:.6g}] for m = {m}, got {x}")
    return x_complex.real


def _named_gamma(name: str, z: complex) -> complex:
    try:
        return gamma(z)
    except PoleError as error:
        raise PoleError(f"Gamma({name}) has a pole at {complex(z)}", argument=complex(z)) from error


def _gamma_factors(k: int, p: ParameterSet) -> Tuple[List[Tuple[str, complex]], List[Tuple[str, complex]]]:
    """Named Gamma arguments of the numerator and the denominator."""
    a, b = p.a, p.b
    if k == 0:
        numerators = []
        denominators = []
        for i in range(1, p.m + 1):
            numerators += [(f"a_{i}", a[i]), (f"b_{i} - a_{i}", b[i] - a[i])]
            denominators.append((f"b_{i}", b[i]))
        return numerators, denominators

    r = k
    numerators = [(f"b_{r} - 1", b[r] - 1), ("1 - a_0", 1 - a[0])]
    denominators = [(f"b_{r} - a_0", b[r] - a[0])]
    for j in range(1, p.m + 1):
        if j == r:
            continue
        numerators += [(f"a_{j} - b_{r} + 1", a[j] - b[r] + 1), (f"b_{j} - a_{j}", b[j] - a[j])]
        denominators.append((f"b_{j} - b_{r} + 1", b[j] - b[r] + 1))
    return numerators, denominators


def gamma_prefactor(k: int, p: ParameterSet) -> complex:
    """Gamma product (and for k >= 1 the phase e^{-pi i (b_k - a_k - 1)}) in front of f_k."""
    require_valid(p)
    if not 0 <= k <= p.m:
        raise ValueError(f"cycle index must lie in 0..{p.m}, got {k}")
    numerators, denominators = _gamma_factors(k, p)
    value = product([_named_gamma(name, z) for name, z in numerators])
    for name, z in denominators:
        g = _named_gamma(name, z)
        if g == 0:
            raise GammaOverflowError(
                f"Gamma({name}) underflows at {complex(z)}; the prefactor of f_{k} is out of range"
            )
        value /= g
    if k > 0:
        value *= cmath.exp(-1j * math.pi * (p.b[k] - p.a[k] - 1))
    return value


def period_entry(k: int, p: ParameterSet, x: float, tol: Optional[float] = None) -> complex:
    """Integral of u phi_0 over Delta_k."""
    x = check_x(p.m, x)
    return gamma_prefactor(k, p) * fundamental_solution(k, p, x, tol).value


def dual_period_entry(k: int, p: ParameterSet, x: float, tol: Optional[float] = None) -> complex:
    """Integral of u^{-1} phi_0 over the dual cycle: period_entry with negated parameters."""
    return period_entry(k, negate(p), x, tol)


@dataclass(frozen=True)
class PeriodRow:
    """Row of the period matrix for phi_0 (dual: for u^{-1})."""

    entries: Tuple[complex, ...]
    dual: bool
    x: float
    tail_bound: float


def period_row(p: ParameterSet, x: float, tol: Optional[float] = None, dual: bool = False) -> PeriodRow:
    """All periods of phi_0 at x, with the largest series tail bound scaled by its prefactor."""
    x = check_x(p.m, x)
    q = negate(p) if dual else p
    entries = []
    tail = 0.0
    for k in range(q.m + 1):
        prefactor = gamma_prefactor(k, q)
        solution = fundamental_solution(k, q, x, tol)
        entries.append(prefactor * solution.value)
        tail = max(tail, abs(prefactor) * solution.tail_bound)
    return PeriodRow(entries=tuple(entries), dual=dual, x=x, tail_bound=tail)
