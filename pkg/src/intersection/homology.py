"""
Self-intersection numbers of the twisted cycles attached to f_0, ..., f_m.

Cross intersections I_h(Delta_k, Delta_l^v), k != l, vanish, so H is diagonal.
"""

from typing import List, Tuple

from src.intersection.cohomology import checked_quotient
from src.intersection.matrix import IntersectionMatrix, MatrixKind, diagonal_matrix
from src.parameters import ParameterSet, exponents, require_valid


def _homology_terms(k: int, p: ParameterSet) -> Tuple[List[complex], List[Tuple[str, complex]]]:
    ex = exponents(p)
    alpha, beta = ex.alpha, ex.beta
    numerators: List[complex] = []
    denominators: List[Tuple[str, complex]] = []
    if k == 0:
        for i in range(1, p.m + 1):
            numerators += [alpha[i], 1 - beta[i]]
            denominators += [
                (f"1 - alpha_{i}", 1 - alpha[i]),
                (f"alpha_{i} - beta_{i}", alpha[i] - beta[i]),
            ]
        return numerators, denominators

    r = k
    for j in range(1, p.m + 1):
        if j == r:
            continue
        numerators += [alpha[j], beta[r] - beta[j]]
        denominators += [
            (f"beta_{r} - alpha_{j}", beta[r] - alpha[j]),
            (f"alpha_{j} - beta_{j}", alpha[j] - beta[j]),
        ]
    numerators.append(alpha[0] - beta[r])
    denominators += [
        (f"1 - beta_{r}", 1 - beta[r]),
        (f"alpha_0 - 1", alpha[0] - 1),
    ]
    return numerators, denominators


def homology_denominator_factors(k: int, p: ParameterSet) -> List[Tuple[str, complex]]:
    """Named denominator factors of I_h(Delta_k, Delta_k^v); no validation."""
    if not 0 <= k <= p.m:
        raise ValueError(f"cycle index must lie in 0..{p.m}, got {k}")
    return _homology_terms(k, p)[1]


def homology_self(k: int, p: ParameterSet) -> complex:
    """I_h(Delta_k, Delta_k^v)."""
    require_valid(p)
    if not 0 <= k <= p.m:
        raise ValueError(f"cycle index must lie in 0..{p.m}, got {k}")
    numerators, denominators = _homology_terms(k, p)
    return checked_quotient(numerators, denominators)


def homology_matrix(p: ParameterSet) -> IntersectionMatrix:
    """H = diag(I_h(Delta_k, Delta_k^v))."""
    return diagonal_matrix(MatrixKind.HOMOLOGY, [homology_self(k, p) for k in range(p.m + 1)])
