"""Nonconventional Wilson polynomials and the bound-state condition."""

import math

import numpy as np
import pytest

from tra_spectra.exceptions import DomainError, NoBoundStateError, PoleError, RadicandError
from tra_spectra.models import PotentialFamily, PotentialSpec, WilsonParams
from tra_spectra.physics import derive_params, finite_series_nu
from tra_spectra.special import (
    bound_state_condition,
    bound_state_energies,
    highest_level,
    k_max_from_wilson,
    params_from_physics,
    wilson_coefficients,
    wilson_conventional_recursion,
    wilson_tilde_recursion,
    wilson_tilde_values,
)


# ------------------------------------------------------------------------------
# Parameters
# ------------------------------------------------------------------------------

class TestParams:

    def test_scattering_branch(self, reference_params):
        wp = params_from_physics(reference_params, 4.0)
        assert wp.a == pytest.approx(complex((reference_params.mu + 1) / 2, 2.0))
        assert wp.b == wp.a.conjugate()
        assert wp.c == wp.d

    def test_bound_branch_is_real(self, reference_params):
        wp = params_from_physics(reference_params, -4.0)
        assert wp.a.imag == 0.0 and wp.b.imag == 0.0
        assert (wp.a + wp.b).real == pytest.approx(reference_params.mu + 1.0)

    def test_z_does_not_depend_on_energy(self, reference_params):
        assert params_from_physics(reference_params, 1.0).z_sq == params_from_physics(reference_params, 9.0).z_sq

    def test_family_b_rejected(self, family_b_spec):
        with pytest.raises(DomainError):
            params_from_physics(derive_params(family_b_spec, 4), 1.0)

    def test_bound_level_sits_at_z_minus_b(self, reference_params):
        z = math.sqrt(reference_params.z_sq)
        for k in range(5):
            wp = params_from_physics(reference_params, bound_state_condition(reference_params, k))
            assert z == pytest.approx(k + wp.b.real, abs=1e-12)
            assert wp.b.real > wp.a.real


# ------------------------------------------------------------------------------
# Recursion
# ------------------------------------------------------------------------------

class TestRecursion:

    def test_pole(self):
        with pytest.raises(PoleError):
            wilson_coefficients(0, WilsonParams(0j, 0j, 0j, 0j, 1.0))

    def test_negative_radicand(self):
        wp = WilsonParams(0.5 + 0j, 0.5 + 0j, -0.25 + 0j, -0.25 + 0j, 1.0)
        with pytest.raises(RadicandError):
            wilson_coefficients(0, wp)

    def test_tilde_is_alternating_conventional(self, reference_params):
        wp = params_from_physics(reference_params, 2.5)
        tilde = wilson_tilde_recursion(10, wp)
        conventional = wilson_conventional_recursion(10, wp, -wp.z_sq.real)
        signs = (-1.0) ** np.arange(11)
        np.testing.assert_allclose(tilde, signs * conventional, rtol=1e-12)

    def test_both_paths_agree(self, reference_params):
        wp = params_from_physics(reference_params, 2.0)
        values, _ = wilson_tilde_values(10, wp)
        reference = wilson_tilde_recursion(10, wp)
        scale = np.max(np.abs(reference))
        np.testing.assert_allclose(values, reference, rtol=1e-8, atol=1e-8 * scale)

    def test_chain_stops_in_finite_series_basis(self, reference_spec):
        mu = math.sqrt(0.25 + reference_spec.v0)
        p = derive_params(reference_spec, 4, finite_series_nu(mu, reference_spec.vs))
        for k in range(5):
            values = wilson_tilde_recursion(8, params_from_physics(p, bound_state_condition(p, k)))
            assert np.all(values[k + 1:] == 0.0)
            assert np.all(values[: k + 1] != 0.0)


# ------------------------------------------------------------------------------
# Bound states
# ------------------------------------------------------------------------------

class TestBoundStates:

    def test_reference_levels(self, reference_params, reference_exact_eps):
        assert k_max_from_wilson(reference_params) == 4
        np.testing.assert_allclose(bound_state_energies(reference_params), reference_exact_eps, atol=1e-11)

    def test_level_beyond_k_max(self, reference_params):
        with pytest.raises(NoBoundStateError):
            bound_state_condition(reference_params, 5)

    def test_free_particle_has_none(self, zero_spec):
        p = derive_params(zero_spec, 3)
        assert k_max_from_wilson(p) == -1
        assert bound_state_energies(p) == []


    def test_zero_energy_threshold_excluded(self):
        p = derive_params(PotentialSpec(PotentialFamily.A, v0=0.0, vs=-6.0), 3)
        assert k_max_from_wilson(p) == 0
        assert bound_state_energies(p) == pytest.approx([-1.0])

    @pytest.mark.parametrize("bound, expected", [(4.42, 4), (1.0, 0), (0.5, 0), (0.0, -1), (-2.0, -1)])
    def test_highest_level_is_strictly_below(self, bound, expected):
        assert highest_level(bound) == expected
