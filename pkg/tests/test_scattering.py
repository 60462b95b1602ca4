"""Continuum phase shift."""

import cmath
import math

import mpmath
import numpy as np
import pytest

from tra_spectra.exceptions import DomainError
from tra_spectra.physics import derive_params, phase_shift, phase_shift_curve, phase_shift_for


def _reference(mu: float, A: float, eps: float) -> float:
    """-2 Im ln Gamma((mu+1)/2 - z + i sqrt(eps)) at 30 digits."""
    with mpmath.workdps(30):
        z = mpmath.sqrt(mpmath.mpf(mu) ** 2 - 2 * mpmath.mpf(A)) / 2
        w = (mpmath.mpf(mu) + 1) / 2 - z + 1j * mpmath.sqrt(eps)
        return float(-2 * mpmath.im(mpmath.loggamma(w)))


def _same_angle(a: float, b: float) -> float:
    return abs(cmath.exp(1j * a) - cmath.exp(1j * b))


@pytest.fixture
def params(reference_spec):
    return derive_params(reference_spec, 0)


class TestPhaseShift:

    @pytest.mark.parametrize("eps", [1e-3, 0.5, 3.0, 25.0, 400.0])
    def test_matches_mpmath(self, params, eps):
        assert _same_angle(phase_shift(params, eps), _reference(params.mu, params.A, eps)) <= 1e-11

    def test_continuous_branch_matches_log_gamma(self, params):
        eps = 7.5
        assert phase_shift(params, eps, continuous=True) == pytest.approx(
            _reference(params.mu, params.A, eps), abs=1e-11
        )

    def test_imaginary_z(self):
        from tra_spectra.models import PotentialFamily, PotentialSpec

        p = derive_params(PotentialSpec(PotentialFamily.A, v0=2.0, vs=5.0), 0)
        assert p.z_sq < 0.0
        assert math.isfinite(phase_shift(p, 1.0))

    def test_free_particle_low_energy(self, zero_spec):
        p = derive_params(zero_spec, 0)
        assert abs(phase_shift(p, 1e-10)) < 1e-4

    def test_z_sign_changes_result(self, params):
        assert _same_angle(phase_shift(params, 2.0, z_sign=1), phase_shift(params, 2.0, z_sign=-1)) > 1e-3

    def test_family_b_equals_partner(self, family_b_spec):
        assert phase_shift_for(family_b_spec, 3.0) == pytest.approx(
            phase_shift_for(family_b_spec.equivalent_family_a(), 3.0), abs=1e-14
        )

    @pytest.mark.parametrize("eps", [0.0, -1.0])
    def test_needs_positive_energy(self, params, eps):
        with pytest.raises(DomainError):
            phase_shift(params, eps)

    def test_bad_z_sign(self, params):
        with pytest.raises(DomainError):
            phase_shift(params, 1.0, z_sign=2)


class TestCurve:

    def test_unwrapped_has_no_jumps(self, params):
        grid = np.linspace(0.01, 200.0, 400)
        curve = phase_shift_curve(params, grid, unwrap=True)
        assert curve.unwrapped
        assert np.max(np.abs(np.diff(curve.delta))) < math.pi
        offsets = (curve.delta - curve.delta_principal) / (2.0 * math.pi)
        np.testing.assert_allclose(offsets, np.round(offsets), atol=1e-9)

    def test_principal_range(self, params):
        curve = phase_shift_curve(params, np.linspace(0.01, 200.0, 100))
        assert np.all(np.abs(curve.delta) <= 2.0 * math.pi)

    def test_grid_must_increase(self, params):
        with pytest.raises(DomainError):
            phase_shift_curve(params, [2.0, 1.0])

    def test_grid_must_be_positive(self, params):
        with pytest.raises(DomainError):
            phase_shift_curve(params, [0.0, 1.0])
