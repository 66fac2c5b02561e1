"""
Brute-force cross-checks of the closed-form intersection numbers.
"""

from itertools import combinations
from typing import Any, Dict

from loguru import logger

from src.core import SizeError
from src.intersection.cohomology import cohomology_matrix, det_c_closed_form
from src.intersection.matrix import MatrixKind, numeric_determinant
from src.parameters import ParameterSet, require_valid

MAX_SUBSET_M = 20


def subset_sum_oracle(k: int, p: ParameterSet) -> complex:
    """Sum over subsets I of {0..m} minus {k} of
    prod_{i in I} 1/(b_i - a_i) * prod_{j not in I} 1/(a_j - b_k).
    """
    if p.m > MAX_SUBSET_M:
        raise SizeError(f"subset enumeration needs m <= {MAX_SUBSET_M}, got m = {p.m}")
    require_valid(p)
    if not 0 <= k <= p.m:
        raise ValueError(f"index must lie in 0..{p.m}, got {k}")

    others = [l for l in range(p.m + 1) if l != k]
    inside = {l: 1 / (p.b[l] - p.a[l]) for l in others}
    outside = {l: 1 / (p.a[l] - p.b[k]) for l in others}

    total = 0j
    for size in range(len(others) + 1):
        for subset in combinations(others, size):
            chosen = set(subset)
            term = 1 + 0j
            for l in others:
                term *= inside[l] if l in chosen else outside[l]
            total += term
    return total


def determinant_check(p: ParameterSet) -> Dict[str, Any]:
    """Numeric det of the phi-basis matrix against the closed form."""
    numeric = numeric_determinant(cohomology_matrix(p, MatrixKind.COHOMOLOGY_PHI))
    closed = det_c_closed_form(p)
    rel_error = abs(numeric - closed) / abs(closed)
    logger.debug(f"det(C) check m={p.m}: relative error {rel_error:.3e}")
    return {"numeric": numeric, "closed_form": closed, "rel_error": rel_error}
