"""
╔══════════════════════════════════════════════════════════════════════════════╗
║  Physics: spectra.py                                                         ║
║  Exact and numerical bound-state spectra, and the convergence table          ║
╚══════════════════════════════════════════════════════════════════════════════╝

This module contains:
• exact_spectrum / exact_levels - the closed-form levels
• numeric_spectrum - negative eigenvalues of T f = eps R f
• convergence_table - numeric levels for several basis sizes next to the
  exact ones
• REFERENCE_* - the reference potential and its tabulated convergence columns

📚 CONCEPT: the closed form
   For family A with z^2 = (mu^2 - 2A)/4 the levels are

       eps_k = -(2k + 1 + mu - sqrt(mu^2 - 2A))^2 / 4,
       k = 0 .. k_max,  k_max = floor((sqrt(mu^2 - 2A) - mu - 1) / 2).

   Family B is the same potential as a family-A member (see
   PotentialSpec.equivalent_family_a), which in family-B variables gives

       eps_k = -(2k + 1 + sqrt(nu^2 + 2A) - |nu|)^2 / 4.

📚 Level pairing
   Negative eigenvalues sorted ascending are paired with k = 0, 1, ...
   (deepest first). Positive eigenvalues belong to the discretized
   continuum and are dropped.
"""

import logging
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from .tra_core import build_matrices, derive_params, exchange_map, map_b_to_a, plateau_range
from ..exceptions import DomainError, RegimeWarning
from ..models import (
    BRootPolicy,
    ConvergenceTable,
    NuPolicy,
    PlateauConfig,
    PotentialFamily,
    PotentialSpec,
    SolverConfig,
    SpectrumResult,
    TraParams,
)
from ..solvers import generalized_eig, plateau_scan
from ..special.wilson import highest_level

logger = logging.getLogger(__name__)


# ==============================================================================
# REFERENCE DATA
# ==============================================================================

# V0 = 10, V+ = -80 in units lambda^2/2
REFERENCE_SPEC = PotentialSpec(PotentialFamily.A, v0=10.0, vs=-80.0)

# Energies in units -lambda^2/2, level 0 first
REFERENCE_EXACT = (
    19.564814269481,
    11.718388037498,
    5.871961805514,
    2.025535573531,
    0.179109341547,
)

REFERENCE_COLUMNS: Dict[int, Tuple[float, ...]] = {
    10: (19.564814269470, 11.718388029082, 5.871959151893, 2.025073374517, 0.143562312026),
    30: (19.564814269481, 11.718388037498, 5.871961805297, 2.025533739431, 0.173190908271),
    50: (19.564814269482, 11.718388037498, 5.871961805512, 2.025535451304, 0.176531383396),
    100: (19.564814269481, 11.718388037497, 5.871961805514, 2.025535570742, 0.178285719099),
}

PLATEAU_SCAN_POINTS = 41


# ==============================================================================
# EXACT SPECTRUM
# ==============================================================================

def _family_a_levels(mu: float, A: float) -> Tuple[np.ndarray, int]:
    radicand = mu * mu - 2.0 * A
    if radicand < 0.0:
        return np.empty(0), -1
    root = math.sqrt(radicand)
    k_max = highest_level((root - mu - 1.0) / 2.0)
    levels = [-0.25 * (2 * k + 1 + mu - root) ** 2 for k in range(k_max + 1)]
    return np.array(levels), k_max


def _family_b_levels(nu: float, A: float) -> Tuple[np.ndarray, int]:
    radicand = nu * nu + 2.0 * A
    if radicand < 0.0:
        return np.empty(0), -1
    mu_a = math.sqrt(radicand)
    k_max = highest_level((abs(nu) - mu_a - 1.0) / 2.0)
    levels = [-0.25 * (2 * k + 1 + mu_a - abs(nu)) ** 2 for k in range(k_max + 1)]
    return np.array(levels), k_max


def exact_spectrum(p: TraParams) -> Tuple[np.ndarray, int]:
    """
    Closed-form bound-state levels (eps, deepest first) and k_max.

    An empty array with k_max = -1 means no bound state; that is a valid
    answer, not an error. Mapped family-B parameters are exchanged back
    first since the formula is stated in each family's own variables.

    Example:
        >>> p = derive_params(REFERENCE_SPEC, N=10)
        >>> eps, k_max = exact_spectrum(p)
        >>> k_max, round(-eps[0], 12)
        (4, 19.564814269481)
    """
    if p.mapped_from_b:
        p = exchange_map(p)
    if p.family is PotentialFamily.A:
        return _family_a_levels(p.mu, p.A)
    return _family_b_levels(p.nu, p.A)


def exact_levels(spec: PotentialSpec) -> np.ndarray:
    """exact_spectrum for a potential, independent of any basis choice."""
    spec_a = spec.equivalent_family_a()
    spec_a.check_reality()
    return _family_a_levels(math.sqrt(0.25 + spec_a.v0), spec_a.vs)[0]


# ==============================================================================
# NUMERICAL SPECTRUM
# ==============================================================================

def _pencil_params(
    spec: PotentialSpec,
    N: int,
    nu: Optional[float],
    b_root_policy: BRootPolicy,
) -> Tuple[TraParams, TraParams]:
    """(parameters as derived, family-A parameters the matrices are built from)."""
    derived = derive_params(spec, N, nu, b_root_policy)
    if derived.family is PotentialFamily.B:
        return derived, map_b_to_a(derived)
    return derived, derived


def numeric_spectrum(
    spec: PotentialSpec,
    N: int,
    nu: Optional[float] = None,
    b_root_policy: BRootPolicy = BRootPolicy.NEGATIVE_ROOT,
    solver_config: Optional[SolverConfig] = None,
    want_vectors: bool = False,
) -> SpectrumResult:
    """
    Bound levels from the (N+1)-dimensional matrix problem.

    Args:
        spec: the potential
        N: basis size minus one
        nu: free basis parameter (family A, or family B under FREE_NU);
            for family B under NEGATIVE_ROOT it is the free mu instead.
            None picks the plateau middle.
        b_root_policy: family-B parameter choice
        solver_config: eigensolver knobs
        want_vectors: keep eigenvectors in result.eig

    Raises:
        ConstraintViolation: the basis regime cannot be met
    """
    derived, pencil = _pencil_params(spec, N, nu, b_root_policy)
    T, R = build_matrices(pencil)
    eig = generalized_eig(T, R, want_vectors=want_vectors, config=solver_config)

    numeric = eig.negative
    exact, k_max = exact_spectrum(derived)
    count = min(numeric.size, exact.size)
    diffs = np.abs(numeric[:count] - exact[:count])
    if numeric.size != exact.size:
        message = f"N={N} gives {numeric.size} negative eigenvalues for {exact.size} exact levels"
        logger.warning(message)
        warnings.warn(message, RegimeWarning, stacklevel=2)
    if derived.family is PotentialFamily.B:
        cap = int(math.ceil(-derived.nu / 2.0)) - 1
        worst = float(diffs.max()) if diffs.size else float("nan")
        message = (
            f"negative-root family-B basis is capped at N = {cap} and does not converge to the "
            f"exact levels (worst difference {worst:.3g} at N = {N}); use the free-nu policy"
        )
        logger.warning(message)
        warnings.warn(message, RegimeWarning, stacklevel=2)
    logger.info("spectrum computed for N=%d (nu=%.12g, %d levels)", N, derived.nu, numeric.size)
    return SpectrumResult(
        exact=exact,
        numeric=numeric,
        k_max=k_max,
        N_used=N,
        nu_used=derived.nu,
        per_level_abs_diff=diffs,
        mu_used=derived.mu,
        eig=eig,
    )


# ==============================================================================
# CONVERGENCE TABLE
# ==============================================================================

def _scanned_levels(
    spec: PotentialSpec,
    N: int,
    plateau_config: Optional[PlateauConfig],
    solver_config: Optional[SolverConfig],
) -> Tuple[np.ndarray, float]:
    spec_a = spec.equivalent_family_a()
    lo, hi = plateau_range(math.sqrt(0.25 + spec_a.v0), N)
    report = plateau_scan(
        spec_a, N, np.linspace(lo, hi, PLATEAU_SCAN_POINTS),
        config=plateau_config, solver_config=solver_config,
    )
    values = report.midpoint_spectrum()
    nu_mid = report.plateaus[0].nu_mid if report.plateaus else float("nan")
    return values, nu_mid


def convergence_table(
    spec: PotentialSpec,
    N_list: Sequence[int],
    nu_policy: NuPolicy = NuPolicy.PLATEAU_MIDPOINT,
    nu: Optional[float] = None,
    b_root_policy: BRootPolicy = BRootPolicy.NEGATIVE_ROOT,
    workers: int = 1,
    plateau_config: Optional[PlateauConfig] = None,
    solver_config: Optional[SolverConfig] = None,
) -> ConvergenceTable:
    """
    numeric_spectrum for every N, laid out level by N next to the exact column.

    nu_policy:
        PLATEAU_MIDPOINT - nu = -2N - mu - 7/2 for each N
        EXPLICIT - the same nu for every N (must be given)
        SCAN - a plateau scan per N; each level takes its own plateau midpoint
    """
    if nu_policy is NuPolicy.EXPLICIT and nu is None:
        raise DomainError("the explicit nu policy needs a nu value")
    N_list = list(N_list)

    def run(N: int) -> Tuple[np.ndarray, float]:
        if nu_policy is NuPolicy.SCAN:
            return _scanned_levels(spec, N, plateau_config, solver_config)
        chosen = nu if nu_policy is NuPolicy.EXPLICIT else None
        result = numeric_spectrum(spec, N, chosen, b_root_policy, solver_config)
        return result.numeric, result.nu_used

    if workers > 1 and len(N_list) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(run, N_list))
    else:
        outcomes = [run(N) for N in N_list]

    return ConvergenceTable(
        N_list=N_list,
        exact=exact_levels(spec),
        numeric={N: values for N, (values, _) in zip(N_list, outcomes)},
        nu_used={N: used for N, (_, used) in zip(N_list, outcomes)},
    )


__all__ = [
    "REFERENCE_SPEC",
    "REFERENCE_EXACT",
    "REFERENCE_COLUMNS",
    "exact_spectrum",
    "exact_levels",
    "numeric_spectrum",
    "convergence_table",
]
