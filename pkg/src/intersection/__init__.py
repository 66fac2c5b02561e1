"""
Intersection numbers, intersection matrices and their consistency oracles.
"""

from .cohomology import CocycleRef, Family, cohomology_matrix, cohomology_pairing, det_c_closed_form, epsilon
from .homology import homology_denominator_factors, homology_matrix, homology_self
from .matrix import IntersectionMatrix, MatrixKind, diagonal_matrix, inverse, numeric_determinant
from .oracles import determinant_check, subset_sum_oracle

__all__ = [
    'CocycleRef',
    'Family',
    'IntersectionMatrix',
    'MatrixKind',
    'cohomology_matrix',
    'cohomology_pairing',
    'det_c_closed_form',
    'determinant_check',
    'diagonal_matrix',
    'epsilon',
    'homology_denominator_factors',
    'homology_matrix',
    'homology_self',
    'inverse',
    'numeric_determinant',
    'subset_sum_oracle',
]
