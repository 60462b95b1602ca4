"""
╔══════════════════════════════════════════════════════════════════════════════╗
║  Models: results.py                                                          ║
║  Value objects returned by the solvers and physics modules                   ║
╚══════════════════════════════════════════════════════════════════════════════╝

This module contains:
• GeneralizedEigResult - eigenpairs of T f = eps R f plus diagnostics
• SpectrumResult / ConvergenceTable - exact vs numerical bound-state levels
• LevelPlateau / PlateauReport - outcome of a nu-plateau scan
• PhaseShiftCurve - delta(eps) on a grid
• WavefunctionSample / ResidualReport / TruncationReport - bound-state psi
• CheckStatus / CheckResult - one record of the verification suite

📚 These are plain records. The code that fills them lives in the physics,
   special and solvers subpackages; renderers in reporting turn them into
   CSV, JSON and text.
"""

from dataclasses import dataclass, field
from enum import Enum, auto
from typing import Dict, List, Optional

import numpy as np

from .config import SolverMethod, UnitConvention


# ==============================================================================
# EIGENSOLVER
# ==============================================================================

@dataclass
class GeneralizedEigResult:
    """
    Attributes:
        eigenvalues: ascending
        eigenvectors: columns are f-vectors, R-orthonormal (f^T R f' = delta)
            when R is positive definite; for a negated pencil the
            normalization is with respect to -R
        method: which algorithm produced the result
        condition_diag: condition number estimate of R
        negated_pencil: True when R was negative definite and (-T, -R) was solved
        fallback: True when bisection replaced the congruence method
        backward_errors: ||(T - eps R) f|| / ((||T|| + |eps| ||R||) ||f||) per pair
        inertia_consistent: LDL^T count at sigma = 0 matches the number of
            negative eigenvalues (None when not checked)
    """
    eigenvalues: np.ndarray
    eigenvectors: Optional[np.ndarray]
    method: SolverMethod
    condition_diag: float
    negated_pencil: bool = False
    fallback: bool = False
    backward_errors: Optional[np.ndarray] = None
    inertia_consistent: Optional[bool] = None

    @property
    def negative(self) -> np.ndarray:
        return self.eigenvalues[self.eigenvalues < 0.0]


# ==============================================================================
# SPECTRA
# ==============================================================================

@dataclass
class SpectrumResult:
    """
    Exact and numerical bound-state levels in dimensionless eps = 2E/lambda^2.

    exact[k] and numeric[k] both refer to level k (k = 0 deepest).
    """
    exact: np.ndarray
    numeric: np.ndarray
    k_max: int
    N_used: int
    nu_used: float
    per_level_abs_diff: np.ndarray
    mu_used: float = float("nan")
    eig: Optional[GeneralizedEigResult] = None

    @property
    def level_count(self) -> int:
        return int(self.numeric.size)

    def converted(self, units: UnitConvention) -> Dict[str, np.ndarray]:
        """exact/numeric in the requested convention (-eps for half-lambda2)."""
        sign = -1.0 if units is UnitConvention.HALF_LAMBDA2 else 1.0
        return {"exact": sign * self.exact, "numeric": sign * self.numeric}


@dataclass
class ConvergenceTable:
    """Levels x basis sizes, plus the closed-form column."""
    N_list: List[int]
    exact: np.ndarray
    numeric: Dict[int, np.ndarray]
    nu_used: Dict[int, float]

    def cell(self, N: int, level: int) -> float:
        values = self.numeric[N]
        return float(values[level]) if level < values.size else float("nan")

    def abs_diff(self, N: int) -> np.ndarray:
        values = self.numeric[N]
        count = min(values.size, self.exact.size)
        return np.abs(values[:count] - self.exact[:count])

    def is_monotone(self, slack: float = 1e-10) -> bool:
        """|numeric - exact| does not grow with N (N_list order) for any level."""
        ordered = sorted(self.N_list)
        for level in range(self.exact.size):
            previous = float("inf")
            for N in ordered:
                diff = abs(self.cell(N, level) - self.exact[level])
                if np.isnan(diff):
                    continue
                if diff > previous + slack:
                    return False
                previous = diff
        return True

    def rows(self, units: UnitConvention = UnitConvention.HALF_LAMBDA2) -> List[Dict[str, float]]:
        """One dict per level: n, one column per N, exact."""
        sign = -1.0 if units is UnitConvention.HALF_LAMBDA2 else 1.0
        rows = []
        for level in range(self.exact.size):
            row: Dict[str, float] = {"n": level}
            for N in self.N_list:
                row[f"N={N}"] = sign * self.cell(N, level)
            row["exact"] = sign * float(self.exact[level])
            rows.append(row)
        return rows


# ==============================================================================
# PLATEAU SCAN
# ==============================================================================

@dataclass
class LevelPlateau:
    """Longest stable nu-interval for one level (indices into the grid)."""
    level: int
    start: int
    stop: int                  # inclusive
    nu_mid: float
    value_mid: float
    spread: float
    found: bool

    @property
    def width(self) -> int:
        return self.stop - self.start + 1 if self.found else 0


@dataclass
class PlateauReport:
    nu_grid: np.ndarray
    eigenvalues: np.ndarray    # shape (len(nu_grid), levels), nan where absent
    plateaus: List[LevelPlateau]
    rel_tol: float

    def midpoint_spectrum(self) -> np.ndarray:
        return np.array([p.value_mid for p in self.plateaus])


# ==============================================================================
# SCATTERING
# ==============================================================================

@dataclass
class PhaseShiftCurve:
    """
    delta(eps) on an ascending grid. eps is numerically E in units lambda^2/2.
    """
    eps: np.ndarray
    delta: np.ndarray
    unwrapped: bool
    delta_principal: Optional[np.ndarray] = None
    lam: float = 1.0

    @property
    def energies(self) -> np.ndarray:
        """E in units lambda^2/2 (numerically equal to eps)."""
        return self.eps

    @property
    def energies_absolute(self) -> np.ndarray:
        """E with hbar = m = 1."""
        return self.eps * self.lam ** 2 / 2.0


# ==============================================================================
# WAVEFUNCTIONS
# ==============================================================================

@dataclass
class WavefunctionSample:
    """psi_k on a radial grid (r in units 1/lambda)."""
    r: np.ndarray
    psi: np.ndarray
    level: int
    normalized: bool
    eps: float = float("nan")
    terms: int = 0


@dataclass
class ResidualReport:
    value: float
    degenerate: bool = False
    truncation_estimate: float = 0.0


@dataclass
class TruncationReport:
    """How much the printed finite sum changes when carried to n = N."""
    level: int
    relative_change: float
    max_tail_coefficient: float
    within_tolerance: bool


# ==============================================================================
# VERIFICATION
# ==============================================================================

class CheckStatus(Enum):
    PASS = auto()
    FAIL = auto()
    SKIP = auto()


@dataclass
class CheckResult:
    """
    One record produced by the verification suite.

    Like a frame of a film: the suite yields these one at a time so the CLI
    can print progress, and run_full() gathers them for the JSON verdict.
    """
    name: str
    status: CheckStatus
    detail: str = ""
    metrics: Dict[str, float] = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    def __str__(self) -> str:
        return f"[{self.status.name}] {self.name}: {self.detail}"
