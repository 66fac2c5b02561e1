"""
Tests for the complex Gamma machinery and elementary helpers.
"""

import cmath
import math

import mpmath
import numpy as np
import pytest
import scipy.special
from hypothesis import assume, given
from hypothesis import strategies as st

from src.core import (
    GammaOverflowError,
    PoleError,
    gamma,
    is_near_integer,
    is_near_nonpositive_integer,
    log_gamma,
    pochhammer,
    product,
    two_pi_i_power,
    unit_circle_exp,
)

finite = dict(allow_nan=False, allow_infinity=False)
complex_points = st.builds(
    complex,
    st.floats(min_value=-6.0, max_value=6.0, **finite),
    st.floats(min_value=-4.0, max_value=4.0, **finite),
)


def _away_from_poles(z: complex) -> bool:
    return not is_near_nonpositive_integer(z, 1e-2)


class TestLogGamma:
    @pytest.mark.parametrize(
        "z",
        [0.5, 1.0, 2.5, 10.0, 0.3 + 0.2j, 1.5 - 2.0j, 7.0 + 3.0j, -0.5 + 0.1j, -2.7 - 0.4j, -5.3 + 2.0j, 0.1 - 0.01j],
    )
    def test_matches_scipy_principal_branch(self, z):
        expected = complex(scipy.special.loggamma(z))
        assert abs(log_gamma(z) - expected) < 1e-10 * max(1.0, abs(expected))

    @given(complex_points)
    def test_imaginary_part_agrees_with_scipy(self, z):
        assume(_away_from_poles(z) and z.imag != 0.0)
        expected = complex(scipy.special.loggamma(z))
        assert abs(log_gamma(z) - expected) < 1e-9 * max(1.0, abs(expected))

    def test_negative_real_axis_returns_upper_side(self):
        # log Gamma(-0.5 + i0) = log Gamma(0.5) - log(-0.5 + i0) = log(2 sqrt(pi)) - i pi
        value = log_gamma(-0.5)
        assert value.real == pytest.approx(math.log(2.0 * math.sqrt(math.pi)), rel=1e-13)
        assert value.imag == pytest.approx(-math.pi, rel=1e-13)
        assert log_gamma(-1.5).imag == pytest.approx(-2.0 * math.pi, rel=1e-13)

    @pytest.mark.parametrize("z", [-1 + 300j, -1 - 300j, 0.2 + 50j, -7.5 - 120j, -0.5 + 1000j, -3.3 + 25j])
    def test_large_imaginary_part_on_the_reflected_side(self, z):
        expected = complex(mpmath.loggamma(z))
        assert abs(log_gamma(z) - expected) <= 1e-12 * abs(expected)

    @pytest.mark.parametrize("z", [0.0, -1.0, -3.0, -3.0 + 1e-10, -7.0 - 1e-11j])
    def test_poles_raise(self, z):
        with pytest.raises(PoleError) as info:
            log_gamma(z)
        assert info.value.argument == complex(z)


class TestGamma:
    def test_known_values(self):
        assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
        assert gamma(5) == pytest.approx(24.0, rel=1e-14)
        assert gamma(-0.5) == pytest.approx(-2.0 * math.sqrt(math.pi), rel=1e-13)

    @given(complex_points)
    def test_recurrence(self, z):
        assume(_away_from_poles(z) and _away_from_poles(z + 1))
        lhs = gamma(z + 1)
        rhs = z * gamma(z)
        assert abs(lhs - rhs) <= 1e-10 * max(abs(lhs), abs(rhs))

    @given(complex_points)
    def test_reflection(self, z):
        assume(_away_from_poles(z) and _away_from_poles(1 - z))
        assume(abs(z.imag) < 3.0)
        lhs = gamma(z) * gamma(1 - z)
        rhs = math.pi / cmath.sin(math.pi * z)
        assert abs(lhs - rhs) <= 1e-10 * abs(rhs)

    def test_overflow_raises(self):
        with pytest.raises(GammaOverflowError):
            gamma(200.0)

    def test_underflow_returns_zero(self):
        assert gamma(-200.5) == 0j

    def test_large_imaginary_part(self):
        z = -1 + 300j
        np.testing.assert_allclose(gamma(z), complex(mpmath.gamma(z)), rtol=1e-10)
        assert gamma(-1 + 600j) == 0j

    def test_overflow_is_builtin_overflow(self):
        with pytest.raises(OverflowError):
            gamma(171.7)


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(0.3 + 0.1j, 0) == 1

    def test_factorial(self):
        assert pochhammer(1, 10) == math.factorial(10)

    def test_zero_upper_parameter_vanishes(self):
        assert pochhammer(-2, 3) == 0
        assert pochhammer(-2, 2) == 2

    @given(complex_points, st.integers(min_value=0, max_value=30))
    def test_recurrence(self, c, n):
        lhs = pochhammer(c, n + 1)
        rhs = pochhammer(c, n) * (c + n)
        assert abs(lhs - rhs) <= 1e-12 * max(abs(lhs), abs(rhs), 1e-300)

    def test_agrees_with_gamma_ratio(self):
        c = 0.7 + 0.2j
        assert pochhammer(c, 6) == pytest.approx(gamma(c + 6) / gamma(c), rel=1e-12)

    def test_negative_n_raises(self):
        with pytest.raises(ValueError):
            pochhammer(1.0, -1)


class TestElementaryHelpers:
    def test_unit_circle_exp_integers_are_exactly_one(self):
        assert unit_circle_exp(1.0) == 1
        assert unit_circle_exp(-3.0) == 1

    def test_unit_circle_exp_large_shift(self):
        np.testing.assert_allclose(unit_circle_exp(1e6 + 0.25), 1j, atol=1e-12)
        np.testing.assert_allclose(unit_circle_exp(0.5), -1.0, atol=1e-15)

    def test_unit_circle_exp_imaginary_part_scales(self):
        assert abs(unit_circle_exp(0.2 + 0.1j)) == pytest.approx(math.exp(-2 * math.pi * 0.1), rel=1e-14)

    @pytest.mark.parametrize("n", range(9))
    def test_two_pi_i_power(self, n):
        value = two_pi_i_power(n)
        np.testing.assert_allclose(value, (2j * math.pi) ** n, rtol=1e-14)
        # one of the components is exactly zero
        assert value.real == 0 or value.imag == 0

    def test_is_near_integer(self):
        assert is_near_integer(3.0 + 1e-10)
        assert is_near_integer(-2.0 + 1e-10j)
        assert not is_near_integer(3.0 + 1e-3)
        assert not is_near_integer(3.0 + 1e-3j)
        assert is_near_integer(0.96, delta=0.05)

    def test_is_near_nonpositive_integer(self):
        assert is_near_nonpositive_integer(0.0)
        assert is_near_nonpositive_integer(-4.0)
        assert not is_near_nonpositive_integer(1.0)

    def test_product(self):
        assert product([]) == 1
        assert product([2, 1j, 3]) == 6j
