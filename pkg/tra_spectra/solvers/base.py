"""
Base class for generalized eigensolvers of T f = eps R f.

📚 CONCEPT: Strategy Pattern

The same pencil (T, R) can be solved in different ways:
- Congruence: factor R = U^T U and diagonalize U^-T T U^-1
- Bisection: follow sign changes of det(T - eps R) and refine each root

The GeneralizedEigenSolver ABC fixes the interface; generalized_eig picks
the strategy from the conditioning of R.
"""

from abc import ABC, abstractmethod
from typing import Optional, Tuple

import numpy as np

from ..models import SolverConfig, SolverMethod, SymTridiagonal


# ==============================================================================
# LDL^T PIVOTS
# ==============================================================================

def ldl_pivots(diag: np.ndarray, offdiag: np.ndarray) -> np.ndarray:
    """
    Pivots d_i of the LDL^T factorization of a symmetric tridiagonal matrix,

        d_0 = a_0,   d_i = a_i - b_{i-1}^2 / d_{i-1}.

    diag may carry a leading batch axis (shape (n,) or (n, batch)); an exact
    zero pivot is nudged to a tiny negative number so the sweep continues.
    """
    diag = np.asarray(diag, dtype=float)
    offdiag = np.asarray(offdiag, dtype=float)
    pivots = np.empty_like(diag)
    magnitude = np.max(np.abs(diag), axis=0)
    if offdiag.size:
        magnitude = magnitude + np.max(np.abs(offdiag), axis=0)
    scale = np.finfo(float).eps * magnitude + np.finfo(float).tiny
    pivots[0] = diag[0]
    for i in range(1, diag.shape[0]):
        previous = np.where(pivots[i - 1] == 0.0, -scale, pivots[i - 1])
        pivots[i - 1] = previous
        pivots[i] = diag[i] - offdiag[i - 1] ** 2 / previous
    pivots[-1] = np.where(pivots[-1] == 0.0, -scale, pivots[-1])
    return pivots


def sturm_count(T: SymTridiagonal, R: SymTridiagonal, sigma: float) -> int:
    """
    Number of negative LDL^T pivots of T - sigma R.

    By Sylvester's law of inertia this is the number of eigenvalues of the
    pencil below sigma when R is positive definite.
    """
    shifted = T.shifted(R, sigma)
    return int(np.sum(ldl_pivots(shifted.diag, shifted.offdiag) < 0.0))


# ==============================================================================
# ABSTRACT CLASS: GeneralizedEigenSolver
# ==============================================================================

class GeneralizedEigenSolver(ABC):
    """
    Interface of every solver strategy.

    Solvers receive a pencil whose R has already been oriented (negated when
    negative definite) and return raw eigenpairs; generalized_eig adds the
    sign convention, backward errors and inertia checks.
    """

    def __init__(self, config: Optional[SolverConfig] = None):
        self.config = config or SolverConfig()

    # -------------------------------------------------------------------------
    # Abstract Properties
    # -------------------------------------------------------------------------

    @property
    @abstractmethod
    def name(self) -> str:
        """Display name (e.g., 'Congruence reduction')."""
        pass

    @property
    @abstractmethod
    def method(self) -> SolverMethod:
        pass

    # -------------------------------------------------------------------------
    # Abstract Method: solve
    # -------------------------------------------------------------------------

    @abstractmethod
    def solve(
        self,
        T: SymTridiagonal,
        R: SymTridiagonal,
        want_vectors: bool = True,
    ) -> Tuple[np.ndarray, Optional[np.ndarray]]:
        """
        Args:
            T, R: the pencil, same size
            want_vectors: also return eigenvectors (columns)

        Returns:
            (ascending eigenvalues, eigenvectors or None)
        """
        pass

    def __str__(self) -> str:
        return self.name
