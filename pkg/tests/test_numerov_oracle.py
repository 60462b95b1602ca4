"""Numerov shooting as an independent check of the closed-form spectrum."""

import numpy as np
import pytest

from tra_spectra.exceptions import DomainError
from tra_spectra.models import ShootingConfig
from tra_spectra.physics import REFERENCE_SPEC, numerov_integrate, shoot_spectrum


class TestArguments:

    def test_positive_energy_rejected(self):
        with pytest.raises(DomainError):
            numerov_integrate(REFERENCE_SPEC, 0.5)

    def test_step_too_large(self):
        with pytest.raises(ValueError):
            numerov_integrate(REFERENCE_SPEC, -1.0, ShootingConfig(h=0.1))

    def test_bad_bracket(self):
        with pytest.raises(ValueError):
            ShootingConfig(energy_bracket=(-1.0, 1.0)).check()

    def test_mismatch_is_normalized(self):
        value = numerov_integrate(REFERENCE_SPEC, -3.0)
        assert -1.0 <= value <= 1.0


@pytest.mark.slow
class TestShooting:

    def test_reproduces_closed_form(self, reference_exact_eps):
        energies = shoot_spectrum(REFERENCE_SPEC, n_levels=5)
        assert energies.size == 5
        eps = 2.0 * energies / REFERENCE_SPEC.lam ** 2
        np.testing.assert_allclose(eps, reference_exact_eps, atol=1e-6)

    def test_bracket_limits_levels(self, reference_exact_eps):
        # the two deepest levels only, as absolute energies
        cfg = ShootingConfig(energy_bracket=(-10.5, -4.0), scan_points=60)
        energies = shoot_spectrum(REFERENCE_SPEC, cfg)
        np.testing.assert_allclose(2.0 * energies, reference_exact_eps[:2], atol=1e-6)
