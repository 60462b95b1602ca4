"""
╔══════════════════════════════════════════════════════════════════════════════╗
║  Solvers: eigensolver.py                                                     ║
║  generalized_eig - the public entry point for T f = eps R f                  ║
╚══════════════════════════════════════════════════════════════════════════════╝

Decision sequence:

    R eigenvalues (tridiagonal, cheap)
        │
        ├── all negative ──► solve (-T, -R) instead, flag negated_pencil
        │
        ├── indefinite, or cond(R) > max_condition
        │       └──► BisectionSolver + SolverFallbackWarning
        │
        └── otherwise ──► CongruenceSolver

Afterwards every result gets the same treatment: ascending eigenvalues,
largest-magnitude component of each vector made positive, backward errors,
and (when R is positive definite) an inertia cross-check at sigma = 0.
"""

import logging
import warnings
from typing import Optional

import numpy as np
from scipy import linalg

from .base import sturm_count
from .factory import SolverFactory
from ..exceptions import DomainError, SolverFallbackWarning
from ..models import GeneralizedEigResult, SolverConfig, SolverMethod, SymTridiagonal

logger = logging.getLogger(__name__)


def r_spectrum(R: SymTridiagonal) -> np.ndarray:
    """Ascending eigenvalues of R."""
    if R.size == 1:
        return R.diag.copy()
    return linalg.eigvalsh_tridiagonal(R.diag, R.offdiag)


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    for j in range(vectors.shape[1]):
        column = vectors[:, j]
        if column.size and column[np.argmax(np.abs(column))] < 0.0:
            vectors[:, j] = -column
    return vectors


def backward_errors(T: SymTridiagonal, R: SymTridiagonal, eigenvalues: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    """||(T - eps R) f|| / ((||T|| + |eps| ||R||) ||f||) for every pair."""
    t_norm, r_norm = T.norm(), R.norm()
    errors = np.empty(eigenvalues.size)
    for j, eps in enumerate(eigenvalues):
        f = vectors[:, j]
        residual = T.matvec(f) - eps * R.matvec(f)
        scale = (t_norm + abs(eps) * r_norm) * np.linalg.norm(f)
        errors[j] = np.linalg.norm(residual) / scale if scale > 0.0 else 0.0
    return errors


def generalized_eig(
    T: SymTridiagonal,
    R: SymTridiagonal,
    want_vectors: bool = True,
    config: Optional[SolverConfig] = None,
) -> GeneralizedEigResult:
    """
    All N+1 eigenpairs of T f = eps R f.

    Args:
        T, R: symmetric tridiagonal pencil of equal size
        want_vectors: compute eigenvectors (R-orthonormal columns)
        config: solver knobs; defaults to SolverConfig()

    Returns:
        GeneralizedEigResult (see models.results)

    Example:
        >>> T = SymTridiagonal([2.0, 3.0], [0.0])
        >>> R = SymTridiagonal([1.0, 1.0], [0.0])
        >>> generalized_eig(T, R).eigenvalues
        array([2., 3.])
    """
    config = config or SolverConfig()
    if T.size != R.size:
        raise DomainError(f"T and R differ in size: {T.size} vs {R.size}")
    if T.size == 0:
        raise DomainError("empty pencil")

    r_eigs = r_spectrum(R)
    negated = False
    if r_eigs[-1] < 0.0:
        T, R = -T, -R
        r_eigs = -r_eigs[::-1]
        negated = True
        logger.debug("R is negative definite; solving the negated pencil")

    positive_definite = r_eigs[0] > 0.0
    condition = float(r_eigs[-1] / r_eigs[0]) if positive_definite else float("inf")

    method = SolverMethod.CONGRUENCE
    fallback = False
    if not positive_definite or condition > config.max_condition:
        method = SolverMethod.BISECTION
        fallback = True
        reason = "indefinite" if not positive_definite else f"ill-conditioned (cond = {condition:.3g})"
        message = f"R is {reason}; falling back to determinant bisection"
        logger.warning(message)
        warnings.warn(message, SolverFallbackWarning, stacklevel=2)

    solver = SolverFactory.create(method, config)
    eigenvalues, vectors = solver.solve(T, R, want_vectors=want_vectors)

    errors = None
    if vectors is not None:
        vectors = _fix_signs(vectors)
        errors = backward_errors(T, R, eigenvalues, vectors)

    inertia_ok = None
    if config.verify_inertia and positive_definite:
        below_zero = sturm_count(T, R, 0.0)
        inertia_ok = below_zero == int(np.sum(eigenvalues < 0.0))
        if not inertia_ok:
            logger.warning(
                "inertia mismatch: %d pivots below zero vs %d negative eigenvalues",
                below_zero, int(np.sum(eigenvalues < 0.0)),
            )

    logger.debug(
        "generalized_eig: n=%d method=%s cond=%.3g negated=%s",
        T.size, method.name, condition, negated,
    )
    return GeneralizedEigResult(
        eigenvalues=eigenvalues,
        eigenvectors=vectors,
        method=method,
        condition_diag=condition,
        negated_pencil=negated,
        fallback=fallback,
        backward_errors=errors,
        inertia_consistent=inertia_ok,
    )
