"""
Numerical checks of the twisted period relation at entry (0, 0) and of the
quadratic identity it reduces to.
"""

from dataclasses import dataclass
from typing import List, Optional

from loguru import logger

from config.settings import settings
from src.core import DegenerateParameterError, product
from src.intersection import CocycleRef, Family, cohomology_pairing, homology_self
from src.parameters import ParameterSet, corollary_parameters, negate, require_valid
from src.periods.periods import check_x, gamma_prefactor
from src.periods.reports import Identity, VerificationReport
from src.series import fundamental_solution, ghf


@dataclass(frozen=True)
class TprTerm:
    """Contribution of the cycle Delta_k to the right side of the (0, 0) relation."""

    k: int
    period: complex
    dual_period: complex
    homology: complex

    @property
    def value(self) -> complex:
        return self.period * self.dual_period / self.homology


def tpr_terms(p: ParameterSet, x: float, tol: Optional[float] = None) -> List[TprTerm]:
    """Per-cycle terms, k ascending."""
    require_valid(p)
    x = check_x(p.m, x)
    dual = negate(p)
    terms = []
    for k in range(p.m + 1):
        period = gamma_prefactor(k, p) * fundamental_solution(k, p, x, tol).value
        dual_period = gamma_prefactor(k, dual) * fundamental_solution(k, dual, x, tol).value
        terms.append(TprTerm(k=k, period=period, dual_period=dual_period, homology=homology_self(k, p)))
    return terms


def tpr_residual_00(
    p: ParameterSet,
    x: float,
    tol: Optional[float] = None,
    series_tol: Optional[float] = None,
) -> VerificationReport:
    """I_c(phi_0, phi_0) against the sum over k of the period products over I_h(Delta_k, Delta_k^v)."""
    tol = settings.tpr_tolerance if tol is None else tol
    terms = tpr_terms(p, x, series_tol)
    lhs = cohomology_pairing(CocycleRef(Family.PHI, 0), CocycleRef(Family.PHI, 0), p)
    rhs = 0j
    for term in terms:
        rhs += term.value

    report = VerificationReport.compare(
        Identity.TPR_00,
        m=p.m,
        lhs=lhs,
        rhs=rhs,
        tol=tol,
        x=float(x),
        details={"terms": [term.value for term in terms]},
    )
    logger.info(f"tpr_00 m={p.m} x={x}: rel residual {report.rel_residual:.3e}")
    return report


def _check_corollary_denominators(p: ParameterSet) -> None:
    """b_r (b_r^2 - 1) must not vanish for any r."""
    for r in range(1, p.m + 1):
        for target in (0, 1, -1):
            if abs(p.b[r] - target) < settings.integer_tolerance:
                raise DegenerateParameterError(f"b_{r} = {p.b[r]} is too close to {target}")


def _corollary_weight(r: int, p: ParameterSet) -> complex:
    a, b = p.a, p.b
    b_r = b[r]
    weight = a[0] * (a[0] - b_r) * (b_r - a[r]) / (b_r * (b_r * b_r - 1))
    others = [l for l in range(1, p.m + 1) if l != r]
    weight *= product([(a[l] - b_r) / (b[l] - b_r) for l in others])
    return weight


def corollary_residual(
    p: ParameterSet,
    x: float,
    tol: Optional[float] = None,
    series_tol: Optional[float] = None,
) -> VerificationReport:
    """The (0, 0) relation after normalization, as an identity among series only."""
    tol = settings.corollary_tolerance if tol is None else tol
    _check_corollary_denominators(p)
    require_valid(p)
    x = check_x(p.m, x)

    ratio = product([p.b[l] / p.a[l] for l in range(1, p.m + 1)])
    lhs = ratio

    upper = [p.a_cyclic(j) for j in range(1, p.m + 2)]
    lower = list(p.b[1:])
    main_term = (
        ratio
        * ghf(upper, lower, x, series_tol).value
        * ghf([-v for v in upper], [-v for v in lower], x, series_tol).value
    )

    corrections = []
    for r in range(1, p.m + 1):
        weight = _corollary_weight(r, p)
        plus = ghf(*corollary_parameters(r, 1, p), x, series_tol).value
        minus = ghf(*corollary_parameters(r, -1, p), x, series_tol).value
        corrections.append(x * x * weight * plus * minus)

    rhs = main_term
    for correction in corrections:
        rhs += correction

    report = VerificationReport.compare(
        Identity.COROLLARY_52,
        m=p.m,
        lhs=lhs,
        rhs=rhs,
        tol=tol,
        x=float(x),
        details={"main_term": main_term, "corrections": corrections},
    )
    logger.info(f"corollary_52 m={p.m} x={x}: rel residual {report.rel_residual:.3e}")
    return report
