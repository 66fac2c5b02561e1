"""
Tests for the period formulas, the twisted period relation and its quadratic form.
"""

import cmath
import math

import numpy as np
import pytest
import scipy.special

from src.core import BranchError, DegenerateParameterError, GammaOverflowError, HypergeometricError, gamma
from src.intersection import CocycleRef, Family, cohomology_pairing
from src.parameters import ParameterSet, negate
from src.periods import (
    Identity,
    VerificationReport,
    corollary_residual,
    dual_period_entry,
    gamma_prefactor,
    period_entry,
    period_row,
    tpr_residual_00,
    tpr_terms,
    x_max,
)


class TestXMax:
    def test_values(self):
        assert x_max(1) == pytest.approx(1 / 3)
        assert x_max(2) == pytest.approx(0.25)
        assert x_max(4) == pytest.approx(27 / 192)

    def test_invalid_m(self):
        with pytest.raises(ValueError):
            x_max(0)


class TestGammaPrefactor:
    def test_k0_is_euler_beta(self, gauss_params):
        assert gamma_prefactor(0, gauss_params) == pytest.approx(scipy.special.beta(0.45, 0.25), rel=1e-12)

    def test_k1_m1(self, gauss_params):
        a0, a1, b1 = 0.3, 0.45, 0.7
        expected = cmath.exp(-1j * math.pi * (b1 - a1 - 1)) * gamma(b1 - 1) * gamma(1 - a0) / gamma(b1 - a0)
        assert gamma_prefactor(1, gauss_params) == pytest.approx(expected, rel=1e-13)

    def test_phase_has_unit_modulus_for_real_parameters(self, gauss_params):
        magnitude = abs(scipy.special.gamma(-0.3) * scipy.special.gamma(0.7) / scipy.special.gamma(0.4))
        assert abs(gamma_prefactor(1, gauss_params)) == pytest.approx(magnitude, rel=1e-12)

    def test_m2_product(self):
        p = ParameterSet.create(a=[0.2, 0.35, 0.6], b_tail=[0.8, 1.4])
        expected = scipy.special.beta(0.35, 0.45) * scipy.special.beta(0.6, 0.8)
        assert gamma_prefactor(0, p) == pytest.approx(expected, rel=1e-12)
        # k = 2: phase, Gamma(b_2 - 1) Gamma(1 - a_0) / Gamma(b_2 - a_0), and the j = 1 factor
        phase = cmath.exp(-1j * math.pi * (1.4 - 0.6 - 1))
        expected_2 = (
            phase
            * scipy.special.gamma(0.4) * scipy.special.gamma(0.8) / scipy.special.gamma(1.2)
            * scipy.special.gamma(0.35 - 1.4 + 1) * scipy.special.gamma(0.8 - 0.35) / scipy.special.gamma(0.8 - 1.4 + 1)
        )
        assert gamma_prefactor(2, p) == pytest.approx(expected_2, rel=1e-12)

    def test_underflowing_denominator(self):
        # Gamma(b_1) and Gamma(b_1 - a_1) both underflow to 0 this far up the imaginary axis
        p = ParameterSet.create(a=[0.3, 0.45], b_tail=[0.7 + 700j])
        with pytest.raises(GammaOverflowError, match=r"Gamma\(b_1\)") as info:
            gamma_prefactor(0, p)
        assert isinstance(info.value, HypergeometricError)


class TestPeriods:
    def test_gauss_euler_integral(self, gauss_params):
        expected = scipy.special.beta(0.45, 0.25) * scipy.special.hyp2f1(0.45, 0.3, 0.7, 0.2)
        assert period_entry(0, gauss_params, 0.2) == pytest.approx(expected, rel=1e-12)

    def test_small_x_limit(self, generic_params):
        p = generic_params(2, 1)
        assert period_entry(0, p, 1e-12) == pytest.approx(gamma_prefactor(0, p), rel=1e-10)

    def test_dual_entry_uses_negated_parameters(self, generic_params):
        p = generic_params(2, 5)
        for k in range(3):
            assert dual_period_entry(k, p, 0.1) == period_entry(k, negate(p), 0.1)

    def test_dual_of_dual(self, generic_params):
        p = generic_params(2, 5)
        assert dual_period_entry(1, negate(p), 0.1) == period_entry(1, p, 0.1)

    @pytest.mark.parametrize("x", [0.0, -0.1, 0.3, 0.1 + 0.01j])
    def test_x_outside_range(self, generic_params, x):
        with pytest.raises(BranchError):
            period_entry(0, generic_params(2, 0), x)

    def test_rows(self, generic_params):
        p = generic_params(3, 2)
        row = period_row(p, 0.1)
        dual = period_row(p, 0.1, dual=True)
        assert len(row.entries) == 4 and not row.dual and row.x == 0.1
        assert dual.dual
        assert row.entries[3] == period_entry(3, p, 0.1)
        assert dual.entries[0] == dual_period_entry(0, p, 0.1)
        assert row.tail_bound >= 0


class TestReport:
    def test_residuals(self):
        report = VerificationReport.compare(Identity.TPR_00, m=2, lhs=1.0, rhs=1.0 + 1e-9, tol=1e-8, x=0.1)
        assert report.abs_residual == pytest.approx(1e-9)
        assert report.rel_residual == pytest.approx(1e-9 / (1.0 + 1e-9))
        assert report.passed

    def test_zero_sides(self):
        report = VerificationReport.compare(Identity.BETA_PRODUCT, m=1, lhs=0, rhs=0, tol=1e-8)
        assert report.rel_residual == 0 and report.passed

    def test_failure(self):
        assert not VerificationReport.compare(Identity.COROLLARY_52, m=1, lhs=1, rhs=2, tol=1e-8).passed

    def test_json_layout(self):
        report = VerificationReport.compare(Identity.TPR_00, m=2, lhs=1 + 2j, rhs=1 + 2j, tol=1e-8, x=0.1)
        document = report.with_seed(4).to_json_dict()
        assert document == {
            "identity": "tpr_00",
            "m": 2,
            "x": 0.1,
            "lhs": [1.0, 2.0],
            "rhs": [1.0, 2.0],
            "abs_residual": 0.0,
            "rel_residual": 0.0,
            "tol": 1e-8,
            "pass": True,
            "seed": 4,
        }


class TestTwistedPeriodRelation:
    def test_m1(self, generic_params):
        report = tpr_residual_00(generic_params(1, 0), 0.2)
        assert report.identity == Identity.TPR_00
        assert report.rel_residual <= 1e-8 and report.passed

    def test_m1_real_parameters(self, gauss_params):
        assert tpr_residual_00(gauss_params, 0.2).rel_residual <= 1e-10

    @pytest.mark.parametrize("m, x", [(2, 0.1), (3, 0.05), (3, 0.1), (4, 0.05), (4, 0.1)])
    def test_random_parameters(self, generic_params, m, x):
        for seed in range(3):
            report = tpr_residual_00(generic_params(m, seed), x)
            assert report.rel_residual <= 1e-8, f"seed {seed}: {report.rel_residual:.3e}"

    def test_left_side_is_the_phi0_pairing(self, generic_params):
        p = generic_params(2, 1)
        report = tpr_residual_00(p, 0.1)
        assert report.lhs == cohomology_pairing(CocycleRef(Family.PHI, 0), CocycleRef(Family.PHI, 0), p)

    def test_right_side_is_x_independent(self, generic_params):
        p = generic_params(3, 6)
        near = tpr_residual_00(p, 0.05).rhs
        far = tpr_residual_00(p, x_max(3)).rhs
        assert abs(near - far) <= 1e-8 * abs(near)

    def test_terms(self, generic_params):
        p = generic_params(2, 3)
        terms = tpr_terms(p, 0.1)
        assert [t.k for t in terms] == [0, 1, 2]
        total = 0j
        for term in terms:
            total += term.value
        assert total == tpr_residual_00(p, 0.1).rhs

    def test_x_beyond_construction_range(self, generic_params):
        with pytest.raises(BranchError):
            tpr_residual_00(generic_params(2, 0), 0.3)


class TestQuadraticIdentity:
    def test_gauss_case(self, gauss_params):
        report = corollary_residual(gauss_params, 0.2)
        assert report.identity == Identity.COROLLARY_52
        assert report.lhs == pytest.approx(0.7 / 0.45)
        assert report.rel_residual <= 1e-10

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_random_parameters(self, generic_params, m):
        for seed in range(3):
            report = corollary_residual(generic_params(m, seed), 0.1)
            assert report.rel_residual <= 1e-9, f"seed {seed}: {report.rel_residual:.3e}"

    def test_small_x_limit(self, generic_params):
        report = corollary_residual(generic_params(2, 2), 1e-9)
        assert report.rel_residual <= 1e-8

    def test_matches_normalized_period_relation(self, generic_params):
        p = generic_params(2, 4)
        tpr = tpr_residual_00(p, 0.1)
        corollary = corollary_residual(p, 0.1)
        scale = corollary.lhs / tpr.lhs
        np.testing.assert_allclose(tpr.rhs * scale, corollary.rhs, rtol=1e-8)

    @pytest.mark.parametrize("b1", [1.0, -1.0, 1e-12])
    def test_degenerate_b(self, b1):
        p = ParameterSet.create(a=[0.3, 0.45], b_tail=[b1])
        with pytest.raises(DegenerateParameterError):
            corollary_residual(p, 0.1)
