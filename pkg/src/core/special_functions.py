"""
Complex Gamma machinery and elementary complex helpers.

log Gamma uses the Lanczos approximation (g = 7, nine coefficients) on
Re z >= 1/2 and the reflection formula elsewhere, with the branch corrected so
that the result is the principal branch (analytic continuation from the
positive real axis in the plane cut along (-inf, 0]).
"""

import cmath
import math
from typing import Optional, Sequence

from config.settings import settings
from src.core.errors import GammaOverflowError, PoleError

_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)
_LOG_2 = math.log(2.0)
# beyond this |Im z| the closed form of log sin(pi z) is used; sin itself overflows near 226
_SIN_IMAG_LIMIT = 20.0
# log(DBL_MAX) and log of the smallest subnormal
_EXP_MAX = 709.782712893384
_EXP_MIN = -745.1332191019411

_I_POWERS = (1 + 0j, 1j, -1 + 0j, -1j)


def is_near_integer(w: complex, delta: Optional[float] = None) -> bool:
    """True when w lies within delta of an integer in both components."""
    delta = settings.integer_tolerance if delta is None else delta
    w = complex(w)
    return abs(w.imag) < delta and abs(w.real - round(w.real)) < delta


def is_near_nonpositive_integer(w: complex, delta: Optional[float] = None) -> bool:
    """True when w lies within delta of 0, -1, -2, ..."""
    w = complex(w)
    return is_near_integer(w, delta) and round(w.real) <= 0


def _lanczos_log_gamma(z: complex) -> complex:
    z = z - 1.0
    series = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        series += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _LOG_SQRT_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(series)


def _log_sin_pi(z: complex) -> complex:
    """Principal log sin(pi z), without forming sin(pi z) when |Im z| is large."""
    if abs(z.imag) <= _SIN_IMAG_LIMIT:
        return cmath.log(cmath.sin(math.pi * z))
    # sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}) for Im z > 0, conjugate form below
    s = 1.0 if z.imag > 0 else -1.0
    small = cmath.exp(2j * s * math.pi * z)
    value = -1j * s * math.pi * z + cmath.log(1.0 - small) - _LOG_2 + 0.5j * s * math.pi
    return complex(value.real, math.remainder(value.imag, 2.0 * math.pi))


def log_gamma(z: complex, delta: Optional[float] = None) -> complex:
    """Principal branch of log Gamma(z)."""
    z = complex(z)
    if is_near_nonpositive_integer(z, delta):
        raise PoleError(f"log_gamma: argument {z} is a pole of Gamma", argument=z)
    if z.real >= 0.5:
        return _lanczos_log_gamma(z)

    # Gamma(z) Gamma(1 - z) = pi / sin(pi z), branch-corrected
    reflected = _LOG_PI - _log_sin_pi(z) - _lanczos_log_gamma(1.0 - z)
    turns = math.floor(0.5 * z.real + 0.25)
    # signed zero picks the side of the cut, matching cmath.sin in _log_sin_pi
    sign = math.copysign(1.0, z.imag)
    return reflected + 2j * math.pi * turns * sign


def gamma(z: complex, delta: Optional[float] = None) -> complex:
    """Gamma(z) = exp(log_gamma(z)); raises on exponent overflow."""
    lg = log_gamma(z, delta)
    if lg.real > _EXP_MAX:
        raise GammaOverflowError(f"gamma: |Gamma({complex(z)})| overflows (log modulus {lg.real:.6g})")
    if lg.real < _EXP_MIN:
        return 0j
    return cmath.exp(lg)


def pochhammer(c: complex, n: int) -> complex:
    """Rising factorial c (c + 1) ... (c + n - 1) as a direct product."""
    if n < 0:
        raise ValueError(f"pochhammer: n must be nonnegative, got {n}")
    c = complex(c)
    value = 1 + 0j
    for k in range(n):
        value *= c + k
    return value


def unit_circle_exp(c: complex) -> complex:
    """exp(2 pi i c)."""
    c = complex(c)
    # reduce the real part first so that large integer shifts leave no residue
    reduced = c.real - math.floor(c.real)
    return cmath.exp(2j * math.pi * complex(reduced, c.imag))


def two_pi_i_power(n: int) -> complex:
    """(2 pi i)^n with the power of i taken exactly."""
    return (2.0 * math.pi) ** n * _I_POWERS[n % 4]


def product(values: Sequence[complex]) -> complex:
    """Product of complex values; the empty product is 1."""
    result = 1 + 0j
    for v in values:
        result *= v
    return result
