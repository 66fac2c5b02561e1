"""
Closed-form intersection numbers of the logarithmic cocycles phi_k and psi_k.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Tuple

import numpy as np

from config.settings import settings
from src.core import DegenerateParameterError, product, two_pi_i_power
from src.intersection.matrix import IntersectionMatrix, MatrixKind, diagonal_matrix
from src.parameters import ParameterSet, require_valid


class Family(str, Enum):
    PHI = "phi"
    PSI = "psi"


@dataclass(frozen=True)
class CocycleRef:
    """phi_index or psi_index."""

    family: Family
    index: int


def epsilon(i: int, j: int) -> int:
    """-1 when i != j and one of them is 0, +1 otherwise."""
    return -1 if i != j and (i == 0 or j == 0) else 1


def checked_quotient(numerators: Iterable[complex], denominators: Iterable[Tuple[str, complex]]) -> complex:
    """prod(numerators) / prod(denominators); each denominator is named for the error."""
    value = product(list(numerators))
    for name, d in denominators:
        if abs(d) < settings.integer_tolerance:
            raise DegenerateParameterError(f"denominator {name} = {d} vanishes")
        value /= d
    return value


def _phi_self(k: int, p: ParameterSet) -> complex:
    others = [l for l in range(p.m + 1) if l != k]
    return two_pi_i_power(p.m) * checked_quotient(
        [p.b[l] - p.b[k] for l in others],
        [(f"a_{l} - b_{k}", p.a[l] - p.b[k]) for l in others]
        + [(f"b_{l} - a_{l}", p.b[l] - p.a[l]) for l in others],
    )


def _psi_self(k: int, p: ParameterSet) -> complex:
    others = [l for l in range(p.m + 1) if l != k]
    return two_pi_i_power(p.m) * checked_quotient(
        [p.a[l] - p.a[k] for l in others],
        [(f"b_{l} - a_{k}", p.b[l] - p.a[k]) for l in others]
        + [(f"b_{l} - a_{l}", p.b[l] - p.a[l]) for l in others],
    )


def _phi_psi(i: int, j: int, p: ParameterSet) -> complex:
    return epsilon(i, j) * two_pi_i_power(p.m) * checked_quotient(
        [p.b[i] - p.a[i], p.b[j] - p.a[j]],
        [(f"b_{i} - a_{j}", p.b[i] - p.a[j])]
        + [(f"b_{l} - a_{l}", p.b[l] - p.a[l]) for l in range(p.m + 1)],
    )


def cohomology_pairing(ci: CocycleRef, cj: CocycleRef, p: ParameterSet) -> complex:
    """I_c(ci, cj)."""
    require_valid(p)
    for ref in (ci, cj):
        if not 0 <= ref.index <= p.m:
            raise ValueError(f"cocycle index must lie in 0..{p.m}, got {ref.index}")

    if ci.family == cj.family:
        if ci.index != cj.index:
            return 0j
        if ci.family == Family.PHI:
            return _phi_self(ci.index, p)
        return _psi_self(ci.index, p)

    # I_c(phi_i, psi_j) = I_c(psi_j, phi_i)
    phi, psi = (ci, cj) if ci.family == Family.PHI else (cj, ci)
    return _phi_psi(phi.index, psi.index, p)


def cohomology_matrix(p: ParameterSet, kind: MatrixKind = MatrixKind.COHOMOLOGY_PHI) -> IntersectionMatrix:
    """C for the phi basis, the psi basis, or the mixed pairing (I_c(phi_i, psi_j))."""
    n = p.m + 1
    if kind == MatrixKind.COHOMOLOGY_PHI:
        return diagonal_matrix(kind, [cohomology_pairing(CocycleRef(Family.PHI, k), CocycleRef(Family.PHI, k), p) for k in range(n)])
    if kind == MatrixKind.COHOMOLOGY_PSI:
        return diagonal_matrix(kind, [cohomology_pairing(CocycleRef(Family.PSI, k), CocycleRef(Family.PSI, k), p) for k in range(n)])
    if kind == MatrixKind.COHOMOLOGY_MIXED:
        entries = np.empty((n, n), dtype=np.complex128)
        for i in range(n):
            for j in range(n):
                entries[i, j] = cohomology_pairing(CocycleRef(Family.PHI, i), CocycleRef(Family.PSI, j), p)
        return IntersectionMatrix(kind=kind, entries=entries)
    raise ValueError(f"not a cohomology matrix kind: {kind}")


def det_c_closed_form(p: ParameterSet) -> complex:
    """det C for the phi basis in closed form."""
    require_valid(p)
    n = p.m + 1
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    value = two_pi_i_power(p.m * (p.m + 1)) * checked_quotient(
        [p.b[i] - p.b[j] for i, j in pairs],
        [(f"a_{i} - b_{j}", p.a[i] - p.b[j]) for i, j in pairs],
    )
    for l in range(n):
        value = value * checked_quotient([1], [(f"b_{l} - a_{l}", p.b[l] - p.a[l])]) ** p.m
    return value
