"""
Generalized hypergeometric series with a rigorous truncation bound.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence

from loguru import logger

from config.settings import settings
from src.core import (
    LowerParameterPoleError,
    NonConvergenceError,
    ParameterRangeError,
    is_near_nonpositive_integer,
    pochhammer,
    product,
)


@dataclass(frozen=True)
class SeriesValue:
    """Partial sum of a hypergeometric series and a bound on what was dropped."""

    value: complex
    terms_used: int
    tail_bound: float


def _ratio_bound(n: int, abs_x: float, upper_max: float, lower_max: float, p: int, q: int) -> float:
    """Bound on |t_{k+1} / t_k| valid for every k >= n (needs n > 2 * lower_max)."""
    return abs_x * (1.0 + upper_max / n) ** p / (1.0 - lower_max / n) ** q


def ghf(
    upper: Sequence[complex],
    lower: Sequence[complex],
    x: complex,
    tol: Optional[float] = None,
    term_cap: Optional[int] = None,
) -> SeriesValue:
    """Sum of prod (a_i, n) / (prod (b_j, n) n!) x^n until the tail is below tol.

    Terms come from the ratio recurrence. With t_0..t_{N-1} summed the tail is
    bounded by |t_{N-1}| rho / (1 - rho), rho bounding all later term ratios.
    """
    tol = settings.series_tolerance if tol is None else tol
    term_cap = settings.series_term_cap if term_cap is None else term_cap
    upper = [complex(v) for v in upper]
    lower = [complex(v) for v in lower]
    x = complex(x)

    if len(upper) > len(lower) + 1:
        raise ParameterRangeError(
            f"ghf: {len(upper)} upper and {len(lower)} lower parameters give a divergent series"
        )
    if abs(x) > settings.series_x_guard:
        raise ParameterRangeError(f"ghf: |x| = {abs(x):.6g} exceeds the guard {settings.series_x_guard}")
    for j, b in enumerate(lower):
        if is_near_nonpositive_integer(b):
            raise LowerParameterPoleError(f"ghf: lower parameter {j} = {b} is a nonpositive integer", argument=b)

    if x == 0:
        return SeriesValue(value=1 + 0j, terms_used=1, tail_bound=0.0)

    abs_x = abs(x)
    upper_max = max((abs(a) for a in upper), default=0.0)
    lower_max = max((abs(b) for b in lower), default=0.0)
    p, q = len(upper), len(lower)

    term = 1 + 0j
    total = 1 + 0j
    n = 0
    while True:
        # term holds t_n and has been added; decide whether t_{n+1}, ... can be dropped
        if term == 0:
            return SeriesValue(value=total, terms_used=n + 1, tail_bound=0.0)
        if n > 2.0 * lower_max:
            rho = _ratio_bound(n, abs_x, upper_max, lower_max, p, q)
            if rho < 1.0:
                tail = abs(term) * rho / (1.0 - rho)
                if tail <= tol:
                    logger.debug(f"ghf: {n + 1} terms, tail bound {tail:.3e}")
                    return SeriesValue(value=total, terms_used=n + 1, tail_bound=tail)
        if n + 1 >= term_cap:
            raise NonConvergenceError(f"ghf: tolerance {tol:.3e} not reached within {term_cap} terms (x = {x})")

        ratio = x / (n + 1)
        for a in upper:
            ratio *= a + n
        for b in lower:
            ratio /= b + n
        term *= ratio
        total += term
        n += 1


def series_coefficients(upper: Sequence[complex], lower: Sequence[complex], n_terms: int) -> List[complex]:
    """Coefficients c_0..c_{n_terms-1} from Pochhammer products directly.

    Upper and lower symbols are paired (n! closing the lower side) so that no
    single product overflows.
    """
    upper = [complex(v) for v in upper]
    denominators = [complex(v) for v in lower] + [1 + 0j]
    coefficients = []
    for n in range(n_terms):
        ratios = [
            pochhammer(a, n) / pochhammer(b, n)
            for a, b in zip(upper, denominators)
        ]
        extra = [pochhammer(a, n) for a in upper[len(denominators):]]
        extra += [1 / pochhammer(b, n) for b in denominators[len(upper):]]
        coefficients.append(product(ratios + extra))
    return coefficients
