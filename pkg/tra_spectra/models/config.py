"""
Switches and configuration objects.

Contains:
- Enums for the policy choices (family-B root, nu selection, series, units,
  solver method)
- Dataclass configs bundling numerical knobs with sensible defaults
"""

from dataclasses import dataclass
from enum import Enum, auto
from typing import Optional, Tuple


# ==============================================================================
# ENUMS
# ==============================================================================

class BRootPolicy(Enum):
    """
    How the family-B basis parameters are chosen.

    Family B fixes only nu^2 = 1/4 + 2V0/lambda^2, and nu must also
    satisfy mu + nu < -2N - 1.
    """
    NEGATIVE_ROOT = "negative-root"    # nu = -sqrt(1/4 + 2V0/lambda^2), mu free in (-1, -2N-1-nu)
    FREE_NU = "free-nu"                # nu free on the plateau via the identical family-A potential


class NuPolicy(Enum):
    """How the free basis parameter is picked for a numerical spectrum."""
    PLATEAU_MIDPOINT = "plateau-midpoint"   # nu = -2N - mu - 7/2
    EXPLICIT = "explicit"                   # user supplied value
    SCAN = "scan"                           # plateau scan, midpoint value per level


class SeriesPolicy(Enum):
    """Which coefficients feed the wavefunction expansion."""
    PRINTED = "printed"    # W~_n at the exact eps_k, n = 0..k, f_0 = 1, in the basis where that sum is exact
    MATRIX = "matrix"      # R-normalized eigenvector of the N+1 problem, n = 0..N


class UnitConvention(Enum):
    """Output energies as -eps (units -lambda^2/2) or as raw eps."""
    HALF_LAMBDA2 = "half-lambda2"
    DIMENSIONLESS = "dimensionless"


class SolverMethod(Enum):
    CONGRUENCE = auto()    # Cholesky of R, dense symmetric eigensolve
    BISECTION = auto()     # determinant sign changes + inverse iteration


# ==============================================================================
# DATACLASS CONFIGS
# ==============================================================================

@dataclass
class SolverConfig:
    """Knobs of the generalized eigensolver."""
    max_condition: float = 1e12          # above this, R is treated as ill-conditioned
    want_vectors: bool = True
    verify_inertia: bool = True          # cross-check counts with LDL^T inertia
    bisection_points_per_level: int = 64
    bisection_bracket: Optional[Tuple[float, float]] = None
    inverse_iterations: int = 4


@dataclass
class PlateauConfig:
    """Knobs of the nu-plateau scan."""
    rel_tol: float = 1e-9                # max relative spread inside a plateau
    min_points: int = 3
    workers: int = 1                     # >1 solves grid points on a thread pool


@dataclass
class ShootingConfig:
    """
    Numerov shooting settings. Lengths in units of 1/lambda are converted
    by the oracle; energies are absolute.

    r_max=None recomputes the outer boundary per trial energy as
    r_match + tail_lengths / sqrt(2|E|).
    """
    r_min: float = 1e-4
    r_max: Optional[float] = None
    h: float = 1e-3
    energy_bracket: Optional[Tuple[float, float]] = None
    max_bisections: int = 200
    tail_lengths: float = 20.0
    scan_points: int = 200
    energy_tol: float = 1e-10

    def check(self, lam: float = 1.0) -> None:
        if not self.r_min > 0.0:
            raise ValueError(f"r_min must be positive, got {self.r_min}")
        if not self.h > 0.0:
            raise ValueError(f"h must be positive, got {self.h}")
        if lam * self.h >= 0.05:
            raise ValueError(f"step too large: lambda*h = {lam * self.h:g} (need < 0.05)")
        if self.r_max is not None and self.r_max <= self.r_min:
            raise ValueError(f"r_max ({self.r_max}) must exceed r_min ({self.r_min})")
        if self.energy_bracket is not None:
            lo, hi = self.energy_bracket
            if not lo < hi <= 0.0:
                raise ValueError(f"energy bracket must satisfy lo < hi <= 0, got {self.energy_bracket}")


@dataclass
class WavefunctionConfig:
    """Grid and series settings for bound-state wavefunctions."""
    r_max: float = 6.0                   # units 1/lambda
    points: int = 2000
    series: SeriesPolicy = SeriesPolicy.PRINTED
    normalize: bool = False
