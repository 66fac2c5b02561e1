"""
Tensor-product tanh-sinh quadrature on the open unit cube.

Nodes live at z = 1 / (1 + exp(-pi sinh t)) for t on a grid of step
h = 2^(1 - level). They are kept in logarithmic form (log z, log(1 - z),
log weight) so that points exponentially close to either endpoint carry no
cancellation and endpoint singularities z^p (1 - z)^q with Re p, Re q > -1
are integrated without any change of variables.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import chain
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple

import numpy as np
from loguru import logger

from config.settings import settings
from src.core import DimensionError, IntegrabilityError, ParameterRangeError

# Half-width of the t grid; log z reaches about -1700 at the ends.
T_MAX = 7.0


@dataclass(frozen=True)
class CubeIntegrand:
    """prod_j z_j^{p_j} (1 - z_j)^{q_j} times an optional (1 - x prod_j z_j)^s."""

    exponents: Tuple[Tuple[complex, complex], ...]
    x: float = 0.0
    s: complex = 0j

    def __post_init__(self):
        object.__setattr__(
            self, "exponents", tuple((complex(p), complex(q)) for p, q in self.exponents)
        )
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "s", complex(self.s))

    @property
    def m(self) -> int:
        return len(self.exponents)

    @property
    def coupled(self) -> bool:
        return self.x != 0.0 and self.s != 0


@dataclass(frozen=True)
class TanhSinhRule:
    """Nodes and weights of one level, as logarithms."""

    level: int
    step: float
    log_z: np.ndarray
    log_one_minus_z: np.ndarray
    log_weight: np.ndarray

    @property
    def size(self) -> int:
        return self.log_z.size


@lru_cache(maxsize=None)
def tanh_sinh_rule(level: int) -> TanhSinhRule:
    """Nodes for the given level; the weight excludes the z (1 - z) factor."""
    if not 1 <= level <= settings.quadrature_max_level:
        raise ParameterRangeError(
            f"quadrature level must lie in 1..{settings.quadrature_max_level}, got {level}"
        )
    step = 2.0 ** (1 - level)
    half = int(math.ceil(T_MAX / step))
    t = step * np.arange(-half, half + 1, dtype=np.float64)
    u = 0.5 * math.pi * np.sinh(t)
    rule = TanhSinhRule(
        level=level,
        step=step,
        # z = 1 / (1 + exp(-2u)) and 1 - z = 1 / (1 + exp(2u))
        log_z=-np.logaddexp(0.0, -2.0 * u),
        log_one_minus_z=-np.logaddexp(0.0, 2.0 * u),
        log_weight=np.log(step * math.pi * np.cosh(t)),
    )
    for array in (rule.log_z, rule.log_one_minus_z, rule.log_weight):
        array.setflags(write=False)
    logger.debug(f"tanh-sinh level {level}: {rule.size} nodes, step {step}")
    return rule


def _check_integrand(f: CubeIntegrand) -> None:
    if not 1 <= f.m <= settings.quadrature_max_dimension:
        raise DimensionError(
            f"cube quadrature supports dimensions 1..{settings.quadrature_max_dimension}, got {f.m}"
        )
    for j, (p, q) in enumerate(f.exponents):
        if p.real <= -1.0 or q.real <= -1.0:
            raise IntegrabilityError(
                f"axis {j}: exponents p = {p}, q = {q} need real parts above -1"
            )
    if f.coupled and not 0.0 < f.x < 1.0:
        raise IntegrabilityError(f"coupling needs 0 < x < 1, got x = {f.x}")


def _axis_terms(rule: TanhSinhRule, p: complex, q: complex) -> Tuple[np.ndarray, np.ndarray]:
    """Log of weight * z^{p+1} (1 - z)^{q+1} and log z, with negligible nodes dropped."""
    log_terms = rule.log_weight + (p + 1) * rule.log_z + (q + 1) * rule.log_one_minus_z
    keep = log_terms.real >= math.log(settings.quadrature_cutoff)
    return log_terms[keep], rule.log_z[keep]


def _slabs(f: CubeIntegrand, rule: TanhSinhRule) -> Iterator[np.ndarray]:
    """Integrand values times weights, one slab per node of the first axis.

    Per-point sums over the axes are taken after sorting along the axis
    dimension, so permuting the axes of a symmetric integrand reproduces the
    same values exactly.
    """
    axes = [_axis_terms(rule, p, q) for p, q in f.exponents]
    first_terms, first_log_z = axes[0]
    rest_terms = [terms for terms, _ in axes[1:]]
    rest_log_z = [log_z for _, log_z in axes[1:]]

    for i in range(first_terms.size):
        term_grid = np.stack(np.meshgrid(first_terms[i : i + 1], *rest_terms, indexing="ij"), axis=-1)
        values = np.exp(np.sort(term_grid, axis=-1).sum(axis=-1))
        if f.coupled:
            z_grid = np.stack(np.meshgrid(first_log_z[i : i + 1], *rest_log_z, indexing="ij"), axis=-1)
            log_product = np.sort(z_grid, axis=-1).sum(axis=-1)
            values = values * np.exp(f.s * np.log1p(-f.x * np.exp(log_product)))
        yield values.ravel()


def cube_integral(f: CubeIntegrand, level: Optional[int] = None) -> complex:
    """Level-`level` tanh-sinh estimate of the integral of f over (0, 1)^m."""
    _check_integrand(f)
    level = settings.quadrature_level(f.m) if level is None else level
    rule = tanh_sinh_rule(level)

    slabs = list(_slabs(f, rule))
    real = math.fsum(chain.from_iterable(slab.real.tolist() for slab in slabs))
    imag = math.fsum(chain.from_iterable(slab.imag.tolist() for slab in slabs))
    logger.debug(f"cube_integral m={f.m} level={level}: {sum(s.size for s in slabs)} points")
    return complex(real, imag)


def level_sequence(
    f: CubeIntegrand,
    levels: Iterable[int],
    integrate: Callable[[CubeIntegrand, int], complex] = cube_integral,
) -> List[Dict[str, object]]:
    """Estimates at successive levels with |estimate - previous estimate|."""
    sequence: List[Dict[str, object]] = []
    previous: Optional[complex] = None
    for level in levels:
        estimate = integrate(f, level)
        difference = None if previous is None else abs(estimate - previous)
        sequence.append({"level": level, "estimate": estimate, "difference": difference})
        previous = estimate
    return sequence


def separable_product(f: CubeIntegrand, level: Optional[int] = None) -> complex:
    """Product of the one-dimensional integrals of an uncoupled integrand."""
    if f.coupled:
        raise ValueError("separable_product needs an integrand without coupling")
    value = 1 + 0j
    for p, q in f.exponents:
        value *= cube_integral(CubeIntegrand(exponents=((p, q),)), level)
    return value
