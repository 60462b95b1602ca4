"""Closed-form and matrix spectra, and the convergence table."""

import warnings

import numpy as np
import pytest

from tra_spectra.exceptions import DomainError, NoPlateauWarning, RegimeWarning
from tra_spectra.models import BRootPolicy, NuPolicy, PotentialFamily, PotentialSpec, UnitConvention
from tra_spectra.physics import (
    REFERENCE_COLUMNS,
    REFERENCE_SPEC,
    convergence_table,
    derive_params,
    exact_levels,
    exact_spectrum,
    map_b_to_a,
    numeric_spectrum,
)


# ------------------------------------------------------------------------------
# Exact spectrum
# ------------------------------------------------------------------------------

class TestExactSpectrum:

    def test_reference_levels(self, reference_params, reference_exact_eps):
        levels, k_max = exact_spectrum(reference_params)
        assert k_max == 4
        np.testing.assert_allclose(levels, reference_exact_eps, atol=1e-11)

    def test_basis_independent(self, reference_spec, reference_exact_eps):
        np.testing.assert_allclose(exact_levels(reference_spec), reference_exact_eps, atol=1e-11)

    def test_family_b_own_variables(self, family_b_spec):
        p_b = derive_params(family_b_spec, 4)
        own, k_max = exact_spectrum(p_b)
        mapped, _ = exact_spectrum(map_b_to_a(p_b))
        partner = exact_levels(family_b_spec)
        assert k_max == 0
        np.testing.assert_allclose(own, partner, atol=1e-12)
        np.testing.assert_allclose(mapped, partner, atol=1e-12)

    def test_no_bound_state_is_not_an_error(self, zero_spec):
        levels = exact_levels(zero_spec)
        assert levels.size == 0

    def test_repulsive(self):
        assert exact_levels(PotentialSpec(PotentialFamily.A, v0=5.0, vs=10.0)).size == 0

    def test_zero_energy_level_is_not_bound(self):
        # k_max bound lands exactly on 1: only k = 0 is strictly below it
        levels = exact_levels(PotentialSpec(PotentialFamily.A, v0=0.0, vs=-6.0))
        np.testing.assert_allclose(levels, [-1.0], atol=1e-14)
        assert np.all(levels < 0.0)

    def test_family_b_threshold_has_no_level(self):
        assert exact_levels(PotentialSpec(PotentialFamily.B, v0=6.0, vs=2.0)).size == 0


# ------------------------------------------------------------------------------
# Matrix spectrum
# ------------------------------------------------------------------------------

class TestNumericSpectrum:

    @pytest.fixture(scope="class")
    def result(self):
        return numeric_spectrum(REFERENCE_SPEC, 100)

    def test_level_count(self, result):
        assert result.level_count == 5
        assert result.k_max == 4

    def test_convergence_by_level(self, result, reference_exact_eps):
        diffs = np.abs(result.numeric - reference_exact_eps)
        assert np.all(diffs[:3] <= 1e-8)
        assert diffs[3] <= 1e-6
        assert diffs[4] <= 5e-3

    def test_tabulated_column(self, result):
        column = np.array(REFERENCE_COLUMNS[100])
        np.testing.assert_allclose(-result.numeric[:4], column[:4], atol=1e-6)

    def test_converted_units(self, result):
        half = result.converted(UnitConvention.HALF_LAMBDA2)
        plain = result.converted(UnitConvention.DIMENSIONLESS)
        np.testing.assert_array_equal(half["numeric"], -result.numeric)
        np.testing.assert_array_equal(plain["exact"], result.exact)

    def test_small_basis_warns(self, reference_spec):
        with pytest.warns(RegimeWarning):
            result = numeric_spectrum(reference_spec, 0)
        assert result.numeric.size < result.exact.size

    def test_family_b_through_exchange(self, family_b_spec):
        with pytest.warns(RegimeWarning, match="free-nu"):
            result = numeric_spectrum(family_b_spec, 4)
        assert result.exact.size == 1
        assert result.eig.negated_pencil
        # the negative-root basis stalls a few percent away from the exact level
        assert abs(result.numeric[0] - result.exact[0]) > 1e-2

    def test_family_b_free_nu_converges(self, family_b_spec):
        table = convergence_table(family_b_spec, [10, 30], b_root_policy=BRootPolicy.FREE_NU)
        assert table.exact[0] == pytest.approx(-0.25382, abs=1e-5)
        assert table.is_monotone()
        assert table.abs_diff(30)[0] < table.abs_diff(10)[0]
        assert table.abs_diff(30)[0] <= 1e-3


# ------------------------------------------------------------------------------
# Convergence table
# ------------------------------------------------------------------------------

class TestConvergenceTable:

    def test_errors_shrink_with_N(self, reference_spec):
        table = convergence_table(reference_spec, [10, 30, 50, 100])
        assert table.is_monotone()
        assert table.abs_diff(100)[0] <= 1e-8

    def test_threads(self, reference_spec):
        serial = convergence_table(reference_spec, [10, 20])
        threaded = convergence_table(reference_spec, [10, 20], workers=2)
        for N in (10, 20):
            np.testing.assert_array_equal(serial.numeric[N], threaded.numeric[N])

    def test_explicit_policy_needs_nu(self, reference_spec):
        with pytest.raises(DomainError):
            convergence_table(reference_spec, [10], nu_policy=NuPolicy.EXPLICIT)

    def test_explicit_policy(self, reference_spec):
        table = convergence_table(reference_spec, [10], nu_policy=NuPolicy.EXPLICIT, nu=-30.0)
        assert table.nu_used[10] == -30.0

    def test_scan_policy(self, reference_spec, reference_exact_eps):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NoPlateauWarning)
            table = convergence_table(reference_spec, [30], nu_policy=NuPolicy.SCAN)
        assert table.cell(30, 0) == pytest.approx(reference_exact_eps[0], abs=1e-8)

    def test_empty_spectrum(self, zero_spec):
        table = convergence_table(zero_spec, [10])
        assert table.exact.size == 0
        assert table.rows() == []
