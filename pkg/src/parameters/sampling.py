"""
Deterministic random parameter draws for tests and sweeps.
"""

from typing import Callable, Optional

import numpy as np
from loguru import logger

from config.settings import settings
from src.core import ExhaustionError
from src.parameters.parameter_set import ParameterSet, additional_violations, validate


def _draw_until_admissible(
    draw: Callable[[np.random.Generator], ParameterSet],
    seed: int,
    accept: Callable[[ParameterSet], bool],
    label: str,
) -> ParameterSet:
    rng = np.random.default_rng(seed)
    for attempt in range(settings.max_sampling_attempts):
        p = draw(rng)
        if accept(p):
            if attempt:
                logger.debug(f"{label}: seed {seed} accepted after {attempt + 1} draws")
            return p
    raise ExhaustionError(
        f"{label}: no admissible parameters after {settings.max_sampling_attempts} draws (seed {seed})"
    )


def random_generic(
    m: int,
    seed: int,
    delta: Optional[float] = None,
    margin: Optional[float] = None,
) -> ParameterSet:
    """Complex parameters passing validate() and with a_i - a_j non-integral.

    Real parts are drawn from settings.real_range and imaginary parts from
    settings.imag_range. ``margin`` (default ``delta``) is the distance to the
    integers demanded by every check.
    """
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    delta = settings.integer_tolerance if delta is None else delta
    margin = delta if margin is None else max(margin, delta)
    re_lo, re_hi = settings.real_range
    im_lo, im_hi = settings.imag_range

    def draw(rng: np.random.Generator) -> ParameterSet:
        values = rng.uniform(re_lo, re_hi, 2 * m + 1) + 1j * rng.uniform(im_lo, im_hi, 2 * m + 1)
        return ParameterSet.create(a=values[: m + 1].tolist(), b_tail=values[m + 1:].tolist())

    def accept(p: ParameterSet) -> bool:
        return not validate(p, margin) and not additional_violations(p, margin)

    return _draw_until_admissible(draw, seed, accept, "random_generic")


def random_euler_admissible(
    m: int,
    seed: int,
    delta: Optional[float] = None,
    margin: Optional[float] = None,
) -> ParameterSet:
    """Real parameters with a_i and b_i - a_i in settings.euler_range.

    These make the Euler integral over the unit cube convergent without
    regularization.
    """
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    delta = settings.integer_tolerance if delta is None else delta
    margin = delta if margin is None else max(margin, delta)
    lo, hi = settings.euler_range

    def draw(rng: np.random.Generator) -> ParameterSet:
        a = rng.uniform(lo, hi, m + 1)
        gaps = rng.uniform(lo, hi, m)
        return ParameterSet.create(a=a.tolist(), b_tail=(a[1:] + gaps).tolist())

    def accept(p: ParameterSet) -> bool:
        return not validate(p, margin)

    return _draw_until_admissible(draw, seed, accept, "random_euler_admissible")
