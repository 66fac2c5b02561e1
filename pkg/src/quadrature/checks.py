"""
Quadrature cross-checks of the Euler integral and the shifted beta products.
"""

from typing import Optional

from loguru import logger

from config.settings import settings
from src.core import ParameterRangeError, gamma, product
from src.parameters import ParameterSet
from src.periods import Identity, VerificationReport, gamma_prefactor
from src.quadrature.tanh_sinh import CubeIntegrand, cube_integral
from src.series import ghf


def _require_convergent(p: ParameterSet, n: int = 0) -> None:
    for i in range(1, p.m + 1):
        if (p.a[i] + n).real <= 0.0:
            raise ParameterRangeError(f"Re(a_{i} + {n}) = {(p.a[i] + n).real:.6g} must be positive")
        if (p.b[i] - p.a[i]).real <= 0.0:
            raise ParameterRangeError(f"Re(b_{i} - a_{i}) = {(p.b[i] - p.a[i]).real:.6g} must be positive")


def beta_product_check(
    p: ParameterSet,
    n: int = 0,
    level: Optional[int] = None,
    tol: Optional[float] = None,
) -> VerificationReport:
    """Cube integral of prod z_i^{a_i+n-1} (1 - z_i)^{b_i-a_i-1} against its Gamma product."""
    if n < 0:
        raise ValueError(f"shift n must be nonnegative, got {n}")
    tol = settings.beta_tolerance if tol is None else tol
    _require_convergent(p, n)

    integrand = CubeIntegrand(
        exponents=tuple((p.a[i] + n - 1, p.b[i] - p.a[i] - 1) for i in range(1, p.m + 1))
    )
    lhs = cube_integral(integrand, level)
    rhs = product(
        [gamma(p.a[i] + n) * gamma(p.b[i] - p.a[i]) / gamma(p.b[i] + n) for i in range(1, p.m + 1)]
    )
    report = VerificationReport.compare(
        Identity.BETA_PRODUCT, m=p.m, lhs=lhs, rhs=rhs, tol=tol, details={"n": n}
    )
    logger.info(f"beta_product m={p.m} n={n}: rel residual {report.rel_residual:.3e}")
    return report


def euler_integral_check(
    p: ParameterSet,
    x: float,
    level: Optional[int] = None,
    tol: Optional[float] = None,
) -> VerificationReport:
    """Cube integral of u_0 phi_0 against Gamma prefactor times the series f_0."""
    if tol is None:
        tol = settings.euler_tolerance_m3 if p.m >= 3 else settings.euler_tolerance
    _require_convergent(p)
    x_complex = complex(x)
    if x_complex.imag != 0.0 or not 0.0 <= x_complex.real < 1.0:
        raise ParameterRangeError(f"Euler integral check needs real 0 <= x < 1, got {x}")
    x = x_complex.real

    integrand = CubeIntegrand(
        exponents=tuple((p.a[i] - 1, p.b[i] - p.a[i] - 1) for i in range(1, p.m + 1)),
        x=x,
        s=-p.a[0],
    )
    lhs = cube_integral(integrand, level)
    upper = [p.a_cyclic(j) for j in range(1, p.m + 2)]
    rhs = gamma_prefactor(0, p) * ghf(upper, p.b[1:], x).value
    report = VerificationReport.compare(Identity.EULER_INTEGRAL, m=p.m, lhs=lhs, rhs=rhs, tol=tol, x=x)
    logger.info(f"euler_integral m={p.m} x={x}: rel residual {report.rel_residual:.3e}")
    return report
