"""Potential, parameter derivation, matrices and the algebraic identities."""

import math

import numpy as np
import pytest

from tra_spectra.exceptions import ConstraintViolation, DomainError, PoleError
from tra_spectra.models import BRootPolicy, PotentialFamily, PotentialSpec
from tra_spectra.physics import (
    alternate_signs,
    general_q_symmetry_defect,
    pencil_matrix,
    build_matrices,
    build_matrices_b,
    default_nu,
    derive_params,
    exchange_map,
    f_closure_check,
    diagonal_identity_check,
    cn_identity_check,
    map_b_to_a,
    plateau_range,
    potential_value,
    potential_value_cosh_form,
    r_from_pencil,
    recursion_coeffs,
)
from tra_spectra.solvers import generalized_eig


# ------------------------------------------------------------------------------
# Potentials
# ------------------------------------------------------------------------------

class TestPotential:

    @pytest.mark.parametrize("spec", [
        PotentialSpec(PotentialFamily.A, v0=10.0, vs=-80.0),
        PotentialSpec(PotentialFamily.B, v0=120.0, vs=20.0, lam=0.7),
    ])
    def test_two_forms_agree(self, spec):
        r = np.linspace(0.05, 8.0, 50)
        np.testing.assert_allclose(potential_value(spec, r), potential_value_cosh_form(spec, r), rtol=1e-12)

    def test_family_b_equals_its_family_a_partner(self, family_b_spec):
        r = np.linspace(0.1, 6.0, 30)
        np.testing.assert_allclose(
            potential_value(family_b_spec, r),
            potential_value(family_b_spec.equivalent_family_a(), r),
            rtol=1e-12,
        )

    def test_scalar_in_scalar_out(self, reference_spec):
        assert isinstance(potential_value(reference_spec, 1.0), float)

    def test_origin_rejected(self, reference_spec):
        with pytest.raises(DomainError):
            potential_value(reference_spec, np.array([0.0, 1.0]))


# ------------------------------------------------------------------------------
# Parameters
# ------------------------------------------------------------------------------

class TestDeriveParams:

    def test_family_a(self, reference_spec):
        p = derive_params(reference_spec, N=10)
        assert p.mu == pytest.approx(math.sqrt(10.25))
        assert p.nu == pytest.approx(default_nu(p.mu, 10))
        assert p.A == -80.0
        assert p.family is PotentialFamily.A

    def test_explicit_nu(self, reference_spec):
        assert derive_params(reference_spec, 10, -30.0).nu == -30.0

    def test_default_nu_inside_plateau_range(self):
        lo, hi = plateau_range(3.2, 50)
        assert lo < default_nu(3.2, 50) < hi

    def test_nu_too_large(self, reference_spec):
        with pytest.raises(ConstraintViolation):
            derive_params(reference_spec, 10, -10.0)

    def test_reality(self):
        with pytest.raises(ConstraintViolation):
            derive_params(PotentialSpec(PotentialFamily.A, v0=-1.0, vs=0.0), 5)

    def test_family_b_negative_root(self, family_b_spec):
        p = derive_params(family_b_spec, N=4)
        assert p.family is PotentialFamily.B
        assert p.nu == pytest.approx(-math.sqrt(120.25))
        assert p.A == -20.0
        assert -1.0 < p.mu < -9.0 - p.nu

    def test_family_b_interval_empty(self, family_b_spec):
        with pytest.raises(ConstraintViolation):
            derive_params(family_b_spec, N=10)

    def test_family_b_free_nu(self, family_b_spec):
        p = derive_params(family_b_spec, N=10, b_root_policy=BRootPolicy.FREE_NU)
        assert p.family is PotentialFamily.A
        assert p.mu == pytest.approx(math.sqrt(0.25 + 80.0))
        assert p.A == -20.0

    def test_recursion_coefficient_sign(self, reference_params):
        for n in range(reference_params.N):
            assert recursion_coeffs(reference_params, n)[1] < 0.0
        with pytest.raises(DomainError):
            recursion_coeffs(reference_params, reference_params.N + 1)


# ------------------------------------------------------------------------------
# Matrices
# ------------------------------------------------------------------------------

class TestMatrices:

    def test_shapes(self, reference_params):
        T, R = build_matrices(reference_params)
        assert T.size == R.size == 11
        assert T.offdiag.size == 10

    def test_R_positive_definite(self, reference_params):
        _, R = build_matrices(reference_params)
        assert np.linalg.eigvalsh(R.to_dense()).min() > 0.0

    def test_family_b_params_rejected(self, family_b_spec):
        with pytest.raises(DomainError):
            build_matrices(derive_params(family_b_spec, 4))

    def test_assembled_rows_give_minus_T_plus_eps_R(self, reference_params):
        T, R = build_matrices(reference_params)
        eps = -3.7
        M = pencil_matrix(reference_params, eps)
        np.testing.assert_allclose(M.to_dense(), -T.to_dense() + eps * R.to_dense(), rtol=1e-12, atol=1e-10)

    def test_R_rederived(self, reference_params):
        _, R = build_matrices(reference_params)
        rebuilt = r_from_pencil(reference_params)
        np.testing.assert_allclose(rebuilt.diag, R.diag, rtol=1e-10)
        np.testing.assert_allclose(rebuilt.offdiag, R.offdiag, rtol=1e-10)


# ------------------------------------------------------------------------------
# Exchange map
# ------------------------------------------------------------------------------

class TestExchange:

    def test_involution(self, reference_params):
        twice = exchange_map(exchange_map(reference_params))
        assert (twice.mu, twice.nu, twice.A) == (reference_params.mu, reference_params.nu, reference_params.A)
        assert twice.family is PotentialFamily.A

    def test_map_flags_origin(self, family_b_spec):
        mapped = map_b_to_a(derive_params(family_b_spec, 4))
        assert mapped.family is PotentialFamily.A
        assert mapped.mapped_from_b

    def test_map_rejects_family_a(self, reference_params):
        with pytest.raises(DomainError):
            map_b_to_a(reference_params)

    def test_alternate_signs(self):
        np.testing.assert_array_equal(alternate_signs(np.ones(4)), [1.0, -1.0, 1.0, -1.0])

    def test_direct_and_mapped_pencils_agree(self, family_b_spec):
        p_b = derive_params(family_b_spec, 4)
        direct = generalized_eig(*build_matrices_b(p_b))
        mapped = generalized_eig(*build_matrices(map_b_to_a(p_b)))
        np.testing.assert_allclose(direct.eigenvalues, mapped.eigenvalues, rtol=1e-10, atol=1e-10)

        flipped = alternate_signs(mapped.eigenvectors)
        for j in range(flipped.shape[1]):
            a, b = direct.eigenvectors[:, j], flipped[:, j]
            gap = min(np.linalg.norm(a - b), np.linalg.norm(a + b)) / np.linalg.norm(a)
            assert gap <= 1e-8


# ------------------------------------------------------------------------------
# Identities
# ------------------------------------------------------------------------------

class TestIdentities:

    def test_random_draws(self):
        rng = np.random.default_rng(7)
        for _ in range(300):
            n = int(rng.integers(0, 40))
            mu = float(rng.uniform(-0.9, 12.0))
            nu = float(rng.uniform(-2 * n - mu - 60.0, -2 * n - mu - 1.5))
            chi = float(rng.uniform(-50.0, 50.0))
            assert diagonal_identity_check(n, mu, nu, chi, scaled=True) <= 1e-11
            assert cn_identity_check(n, mu, nu, scaled=True) <= 1e-11

    def test_pole(self):
        with pytest.raises(PoleError):
            diagonal_identity_check(1, 0.5, -2.5, 1.0)

    @pytest.mark.parametrize("n", [0, 3, 17])
    def test_closure(self, n):
        assert f_closure_check(n, 2.3, -40.1, -5.5) <= 1e-10

    @pytest.mark.parametrize("q", [0.0, 1.0, 2.5])
    def test_general_q_defect(self, q):
        from tra_spectra.special import jacobi_recurrence_coeffs

        n, mu, nu = 4, 1.7, -30.2
        d_n = jacobi_recurrence_coeffs(n, mu, nu)[1]
        expected = (q - 1.0) * (2 * n + mu + nu + 2) * d_n
        assert general_q_symmetry_defect(n, mu, nu, q, eps=-2.0) == pytest.approx(expected, abs=1e-10)
