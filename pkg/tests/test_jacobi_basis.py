"""Jacobi polynomials on x >= 1, their norms and the orthonormal basis."""

import math

import numpy as np
import pytest

from tra_spectra.exceptions import ConstraintViolation, DomainError, PoleError
from tra_spectra.models import BasisSpec, JacobiRegime, PotentialFamily
from tra_spectra.special import (
    basis_eval,
    jacobi_derivative,
    jacobi_eval,
    jacobi_norm_sq,
    jacobi_norm_sq_reflected,
    jacobi_norm_sq_sine,
    jacobi_ode_residual,
    jacobi_polynomials,
    jacobi_recurrence_coeffs,
    jacobi_series,
    log_jacobi_norm_sq,
    orthonormal_jacobi,
    quadrature_gram,
)


@pytest.fixture
def regime():
    return JacobiRegime(mu=0.7, nu=-15.3, N=4)


# ------------------------------------------------------------------------------
# Values
# ------------------------------------------------------------------------------

class TestValues:

    def test_first_degree(self):
        assert jacobi_eval(1, JacobiRegime(0.5, -12.0, 2), 2.0) == pytest.approx(-3.25)

    def test_degree_zero_is_one(self, regime):
        assert np.all(jacobi_eval(0, regime, np.array([1.0, 4.0, 30.0])) == 1.0)

    @pytest.mark.parametrize("x", [1.0, 1.5, 3.0, 7.0])
    def test_recursion_matches_series(self, regime, x):
        for n in range(regime.N + 1):
            assert jacobi_eval(n, regime, x) == pytest.approx(jacobi_series(n, regime, x), rel=1e-9, abs=1e-12)

    def test_x_below_one_rejected(self, regime):
        with pytest.raises(DomainError):
            jacobi_eval(1, regime, 0.5)

    def test_degree_above_N_rejected(self, regime):
        with pytest.raises(DomainError):
            jacobi_eval(regime.N + 1, regime, 2.0)

    def test_regime_violation(self):
        with pytest.raises(ConstraintViolation):
            jacobi_eval(1, JacobiRegime(0.5, -3.0, 2), 2.0)

    def test_raw_recursion_shape(self):
        values = jacobi_polynomials(5, 0.5, -20.0, np.linspace(1.0, 2.0, 7))
        assert values.shape == (6, 7)


# ------------------------------------------------------------------------------
# Norms
# ------------------------------------------------------------------------------

class TestNorms:

    def test_three_forms_agree(self, regime):
        for n in range(regime.N + 1):
            h = jacobi_norm_sq(n, regime)
            assert h > 0.0
            assert jacobi_norm_sq_sine(n, regime) == pytest.approx(h, rel=1e-10)
            assert jacobi_norm_sq_reflected(n, regime) == pytest.approx(h, rel=1e-10)

    def test_integer_nu_needs_log_form(self):
        regime = JacobiRegime(0.5, -15.0, 3)
        assert math.isfinite(log_jacobi_norm_sq(2, regime))
        with pytest.raises(PoleError):
            jacobi_norm_sq_sine(2, regime)

    def test_large_basis_stays_finite(self):
        regime = JacobiRegime(3.2, -210.0, 100)
        assert all(math.isfinite(log_jacobi_norm_sq(n, regime)) for n in (0, 50, 100))


# ------------------------------------------------------------------------------
# Orthonormal recursion and basis
# ------------------------------------------------------------------------------

class TestOrthonormal:

    def test_coefficients_in_regime(self, regime):
        for n in range(regime.N):
            _, d_n = jacobi_recurrence_coeffs(n, regime.mu, regime.nu)
            assert d_n < 0.0

    def test_scaled_values_match_direct(self, regime):
        x = np.array([1.2, 2.0, 5.0])
        values, log_scale = orthonormal_jacobi(regime, x)
        raw = jacobi_polynomials(regime.N, regime.mu, regime.nu, x)
        for n in range(regime.N + 1):
            expected = raw[n] / math.sqrt(jacobi_norm_sq(n, regime))
            np.testing.assert_allclose(values[n] * np.exp(log_scale), expected, rtol=1e-10)

    def test_rescaling_keeps_values_finite(self):
        regime = JacobiRegime(3.2, -210.0, 100)
        values, log_scale = orthonormal_jacobi(regime, np.array([50.0, 1e4]))
        assert np.all(np.isfinite(values))
        assert np.all(np.isfinite(log_scale))

    def test_basis_vanishes_at_one(self, regime):
        spec = BasisSpec.for_family(regime, PotentialFamily.A)
        assert basis_eval(2, spec, 1.0) == 0.0


# ------------------------------------------------------------------------------
# Properties
# ------------------------------------------------------------------------------

class TestProperties:

    def test_differential_equation(self, regime):
        x = np.array([1.5, 3.0, 10.0])
        for n in range(regime.N + 1):
            assert np.max(jacobi_ode_residual(n, regime, x)) <= 1e-6

    def test_derivative_relation(self, regime):
        x = np.array([1.5, 3.0, 10.0])
        h = 1e-4
        for n in range(1, regime.N + 1):
            stencil = [jacobi_polynomials(n, regime.mu, regime.nu, x + o * h)[n] for o in (-2, -1, 1, 2)]
            numeric = (stencil[0] - 8.0 * stencil[1] + 8.0 * stencil[2] - stencil[3]) / (12.0 * h)
            exact = jacobi_derivative(n, regime, x)
            assert np.max(np.abs(numeric - exact) / np.maximum(1.0, np.abs(exact))) <= 1e-8

    def test_derivative_domain(self, regime):
        with pytest.raises(DomainError):
            jacobi_derivative(1, regime, 1.0)

    def test_quadrature_orthonormality(self):
        gram = quadrature_gram(JacobiRegime(1.2, -12.7, 3))
        np.testing.assert_allclose(gram, np.eye(4), atol=1e-8)
