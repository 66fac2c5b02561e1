"""
Period values, the twisted period relation and verification reports.
"""

from .periods import PeriodRow, check_x, dual_period_entry, gamma_prefactor, period_entry, period_row, x_max
from .relations import TprTerm, corollary_residual, tpr_residual_00, tpr_terms
from .reports import Identity, VerificationReport

__all__ = [
    'Identity',
    'PeriodRow',
    'TprTerm',
    'VerificationReport',
    'check_x',
    'corollary_residual',
    'dual_period_entry',
    'gamma_prefactor',
    'period_entry',
    'period_row',
    'tpr_residual_00',
    'tpr_terms',
    'x_max',
]
