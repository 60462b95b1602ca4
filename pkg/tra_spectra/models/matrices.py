"""
Symmetric tridiagonal matrices.

Only the diagonal and one off-diagonal are stored, so symmetry holds by
construction. T and R of the eigenvalue equation T f = eps R f are both
SymTridiagonal.
"""

from dataclasses import dataclass

import numpy as np


@dataclass
class SymTridiagonal:
    """
    Attributes:
        diag: length n array
        offdiag: length n-1 array, offdiag[i] = M[i, i+1] = M[i+1, i]
    """
    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        self.diag = np.asarray(self.diag, dtype=float)
        self.offdiag = np.asarray(self.offdiag, dtype=float)
        if self.diag.ndim != 1 or self.offdiag.ndim != 1:
            raise ValueError("diag and offdiag must be one-dimensional")
        if self.offdiag.size != max(self.diag.size - 1, 0):
            raise ValueError(
                f"offdiag must have length {max(self.diag.size - 1, 0)}, "
                f"got {self.offdiag.size}"
            )

    @property
    def size(self) -> int:
        return int(self.diag.size)

    def to_dense(self) -> np.ndarray:
        return (
            np.diag(self.diag)
            + np.diag(self.offdiag, 1)
            + np.diag(self.offdiag, -1)
        )

    def to_banded_upper(self) -> np.ndarray:
        """Upper banded storage (2, n) as used by scipy.linalg.cholesky_banded."""
        ab = np.zeros((2, self.size))
        ab[0, 1:] = self.offdiag
        ab[1, :] = self.diag
        return ab

    def shifted(self, other: "SymTridiagonal", sigma: float) -> "SymTridiagonal":
        """self - sigma * other."""
        return SymTridiagonal(self.diag - sigma * other.diag, self.offdiag - sigma * other.offdiag)

    def __neg__(self) -> "SymTridiagonal":
        return SymTridiagonal(-self.diag, -self.offdiag)

    def alternate_signs(self) -> "SymTridiagonal":
        """S M S with S = diag((-1)^n): flips the off-diagonal."""
        return SymTridiagonal(self.diag.copy(), -self.offdiag)

    def matvec(self, vector: np.ndarray) -> np.ndarray:
        vector = np.asarray(vector, dtype=float)
        out = self.diag * vector
        out[:-1] += self.offdiag * vector[1:]
        out[1:] += self.offdiag * vector[:-1]
        return out

    def norm(self) -> float:
        """Spectral norm."""
        return float(np.linalg.norm(self.to_dense(), 2)) if self.size else 0.0
