"""
Tanh-sinh cube quadrature and the integral-representation checks.
"""

from .checks import beta_product_check, euler_integral_check
from .tanh_sinh import CubeIntegrand, TanhSinhRule, cube_integral, level_sequence, separable_product, tanh_sinh_rule

__all__ = [
    'CubeIntegrand',
    'TanhSinhRule',
    'beta_product_check',
    'cube_integral',
    'euler_integral_check',
    'level_sequence',
    'separable_product',
    'tanh_sinh_rule',
]
