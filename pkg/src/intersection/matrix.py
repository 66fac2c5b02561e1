"""
Intersection matrices of the twisted cohomology and homology groups.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from config.settings import settings
from src.core import DegenerateParameterError


class MatrixKind(str, Enum):
    COHOMOLOGY_PHI = "cohomology_phi"
    COHOMOLOGY_PSI = "cohomology_psi"
    COHOMOLOGY_MIXED = "cohomology_mixed"
    HOMOLOGY = "homology"

    @property
    def diagonal(self) -> bool:
        return self is not MatrixKind.COHOMOLOGY_MIXED


@dataclass(frozen=True)
class IntersectionMatrix:
    """(m+1) x (m+1) matrix C (cohomology) or H (homology)."""

    kind: MatrixKind
    entries: np.ndarray

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    def diagonal_product(self) -> complex:
        return complex(np.prod(np.diag(self.entries)))


def diagonal_matrix(kind: MatrixKind, values: Sequence[complex]) -> IntersectionMatrix:
    """Diagonal matrix with exact zeros off the diagonal."""
    return IntersectionMatrix(kind=kind, entries=np.diag(np.asarray(values, dtype=np.complex128)))


def numeric_determinant(matrix: IntersectionMatrix) -> complex:
    """LU determinant via numpy."""
    return complex(np.linalg.det(matrix.entries))


def inverse(matrix: IntersectionMatrix) -> np.ndarray:
    """Reciprocal diagonal for the diagonal kinds, dense inverse for the mixed pairing."""
    if not matrix.kind.diagonal:
        return np.linalg.inv(matrix.entries)
    diag = np.diag(matrix.entries)
    small = np.flatnonzero(np.abs(diag) < settings.integer_tolerance)
    if small.size:
        raise DegenerateParameterError(
            f"{matrix.kind.value} matrix: diagonal entry {int(small[0])} vanishes"
        )
    return np.diag(1.0 / diag)
