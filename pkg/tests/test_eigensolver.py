"""Generalized eigensolver strategies, the factory, inertia counts and the nu scan."""

import warnings

import numpy as np
import pytest

from tra_spectra.exceptions import ConstraintViolation, DomainError, NoPlateauWarning, SolverFallbackWarning
from tra_spectra.models import PlateauConfig, SolverConfig, SolverMethod, SymTridiagonal
from tra_spectra.physics import build_matrices, plateau_range
from tra_spectra.solvers import (
    BisectionSolver,
    CongruenceSolver,
    SolverFactory,
    generalized_eig,
    plateau_scan,
    sturm_count,
)


@pytest.fixture
def reference_pencil(reference_params):
    return build_matrices(reference_params)


# ------------------------------------------------------------------------------
# generalized_eig
# ------------------------------------------------------------------------------

class TestGeneralizedEig:

    def test_diagonal_pencil(self):
        result = generalized_eig(SymTridiagonal([2.0, 3.0], [0.0]), SymTridiagonal([1.0, 1.0], [0.0]))
        np.testing.assert_allclose(result.eigenvalues, [2.0, 3.0])
        assert result.method is SolverMethod.CONGRUENCE
        assert not result.fallback

    def test_matches_scipy(self, reference_pencil):
        from scipy import linalg

        T, R = reference_pencil
        result = generalized_eig(T, R)
        reference = linalg.eigh(T.to_dense(), R.to_dense(), eigvals_only=True)
        np.testing.assert_allclose(result.eigenvalues, reference, rtol=1e-9, atol=1e-9)

    def test_eigenvectors(self, reference_pencil):
        T, R = reference_pencil
        result = generalized_eig(T, R)
        vectors = result.eigenvectors
        gram = vectors.T @ R.to_dense() @ vectors
        np.testing.assert_allclose(gram, np.eye(T.size), atol=1e-8)
        assert np.max(result.backward_errors) <= 1e-10
        assert result.inertia_consistent

    def test_sign_convention(self, reference_pencil):
        vectors = generalized_eig(*reference_pencil).eigenvectors
        for column in vectors.T:
            assert column[np.argmax(np.abs(column))] > 0.0

    def test_negative_definite_R(self):
        T = SymTridiagonal([2.0, 6.0], [0.5])
        R = SymTridiagonal([1.0, 2.0], [0.1])
        plain = generalized_eig(T, R)
        negated = generalized_eig(-T, -R)
        assert negated.negated_pencil
        np.testing.assert_allclose(negated.eigenvalues, plain.eigenvalues, rtol=1e-12)

    def test_indefinite_R_falls_back(self):
        T = SymTridiagonal([1.0, 2.0, 3.0], [0.0, 0.0])
        R = SymTridiagonal([1.0, -1.0, 2.0], [0.0, 0.0])
        with pytest.warns(SolverFallbackWarning):
            result = generalized_eig(T, R)
        assert result.method is SolverMethod.BISECTION
        assert result.fallback
        np.testing.assert_allclose(result.eigenvalues, [-2.0, 1.0, 1.5], atol=1e-10)

    def test_ill_conditioned_R_falls_back(self, reference_pencil):
        T, R = reference_pencil
        reference = generalized_eig(T, R).negative
        with pytest.warns(SolverFallbackWarning):
            result = generalized_eig(T, R, config=SolverConfig(max_condition=1.0))
        np.testing.assert_allclose(result.negative, reference, rtol=1e-8)

    def test_size_mismatch(self):
        with pytest.raises(DomainError):
            generalized_eig(SymTridiagonal([1.0], []), SymTridiagonal([1.0, 1.0], [0.0]))

    def test_values_only(self, reference_pencil):
        result = generalized_eig(*reference_pencil, want_vectors=False)
        assert result.eigenvectors is None


# ------------------------------------------------------------------------------
# Factory and inertia
# ------------------------------------------------------------------------------

class TestFactory:

    def test_create(self):
        assert isinstance(SolverFactory.create(SolverMethod.CONGRUENCE), CongruenceSolver)
        assert isinstance(SolverFactory.create(SolverMethod.BISECTION), BisectionSolver)

    def test_available(self):
        assert set(SolverFactory.available_methods()) == {SolverMethod.CONGRUENCE, SolverMethod.BISECTION}

    def test_strategies_agree(self, reference_pencil):
        T, R = reference_pencil
        congruence, _ = CongruenceSolver().solve(T, R, want_vectors=False)
        bisection, _ = BisectionSolver().solve(T, R, want_vectors=False)
        np.testing.assert_allclose(bisection[bisection < 0.0], congruence[congruence < 0.0], rtol=1e-8)


class TestSturmCount:

    def test_matches_eigenvalue_count(self, reference_pencil):
        T, R = reference_pencil
        eigenvalues = generalized_eig(T, R, want_vectors=False).eigenvalues
        for sigma in (-30.0, -5.0, 0.0, 2.0):
            assert sturm_count(T, R, sigma) == int(np.sum(eigenvalues < sigma))

    def test_above_everything(self, reference_pencil):
        T, R = reference_pencil
        top = generalized_eig(T, R, want_vectors=False).eigenvalues[-1]
        assert sturm_count(T, R, top + 1.0) == T.size


# ------------------------------------------------------------------------------
# Plateau scan
# ------------------------------------------------------------------------------

class TestPlateauScan:

    def test_deep_level_has_widest_plateau(self, reference_spec):
        mu = np.sqrt(10.25)
        lo, hi = plateau_range(mu, 100)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NoPlateauWarning)
            report = plateau_scan(reference_spec, 100, np.linspace(lo, hi, 41))
        assert report.eigenvalues.shape == (41, 5)
        assert report.plateaus[0].found
        assert report.plateaus[0].width >= 3
        assert report.plateaus[0].width >= report.plateaus[4].width

    def test_threads_give_same_table(self, reference_spec):
        lo, hi = plateau_range(np.sqrt(10.25), 20)
        grid = np.linspace(lo, hi, 9)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NoPlateauWarning)
            serial = plateau_scan(reference_spec, 20, grid)
            threaded = plateau_scan(reference_spec, 20, grid, config=PlateauConfig(workers=3))
        np.testing.assert_array_equal(serial.eigenvalues, threaded.eigenvalues)

    def test_grid_outside_regime(self, reference_spec):
        with pytest.raises(ConstraintViolation):
            plateau_scan(reference_spec, 10, [-30.0, -10.0])

    def test_empty_grid(self, reference_spec):
        with pytest.raises(ConstraintViolation):
            plateau_scan(reference_spec, 10, [])
