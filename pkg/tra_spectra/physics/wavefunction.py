"""
╔══════════════════════════════════════════════════════════════════════════════╗
║  Physics: wavefunction.py                                                    ║
║  Bound-state wavefunctions and their checks against the wave equation       ║
╚══════════════════════════════════════════════════════════════════════════════╝

This module contains:
• series_prefactor / printed_prefactor - the common factor of every basis term
• bound_state_psi / bound_states - psi_k(r) on a radial grid
• schrodinger_residual - how well a sample solves -psi''/2 + V psi = E psi
• truncation_report - does the finite printed sum stay put when extended?
• count_nodes / overlap_matrix / normalize - sample utilities

📚 CONCEPT: the expansion
   With x = cosh(lambda r) every basis term carries

       (x-1)^alpha (x+1)^beta
           = 2^((mu+nu+2)/2) sinh^(mu+1/2)(lambda r/2) cosh^(nu+3/2)(lambda r/2),

   so psi_k(r) = prefactor(r) * sum_n f_n p_n(x) with orthonormal Jacobi
   polynomials p_n. Two coefficient choices (SeriesPolicy):

   PRINTED  f_n = W~_n(z^2) at the exact eps_k, n = 0..k, f_0 = 1
   MATRIX   f_n = R-normalized eigenvector k of T f = eps R f, n = 0..N

📚 CONCEPT: why k+1 terms can be enough
   The recursion couples f_k to f_{k+1} through [(g_k+1)^2 + eps_k] D_k.
   At nu = -1 - sqrt(mu^2 - 2A) that bracket is zero at every exact level,
   so W~_n(eps_k) stops at n = k and the short sum is an exact eigenfunction.
   PRINTED therefore synthesizes in that basis unless nu is given. In any
   other basis the k+1 terms are only a truncation; bound_states warns
   (TruncationWarning) and truncation_report measures how far off it is.

📚 Grids
   r is given in units 1/lambda, i.e. the numbers are lambda r. Radial
   integrals (normalization, overlaps) are in the same variable.

Family B runs through its identical family-A potential throughout.
"""

import logging
import math
import warnings
from typing import List, Optional, Sequence

import numpy as np
from scipy import integrate

from .spectra import exact_levels
from .tra_core import (
    build_matrices,
    derive_params,
    finite_series_nu,
    largest_basis_size,
    potential_value,
)
from ..exceptions import (
    DomainError,
    GridTooCoarseWarning,
    NoBoundStateError,
    TraError,
    TruncationWarning,
)
from ..models import (
    PotentialSpec,
    ResidualReport,
    SeriesPolicy,
    TraParams,
    TruncationReport,
    WavefunctionSample,
)
from ..solvers import generalized_eig
from ..special.jacobi_basis import orthonormal_jacobi
from ..special.wilson import bound_state_condition, params_from_physics, wilson_tilde_recursion

logger = logging.getLogger(__name__)


# ==============================================================================
# PREFACTOR
# ==============================================================================

def _log_prefactor(p: TraParams, r: np.ndarray) -> np.ndarray:
    half = r / 2.0
    return (
        0.5 * (p.mu + p.nu + 2.0) * math.log(2.0)
        + (p.mu + 0.5) * np.log(np.sinh(half))
        + (p.nu + 1.5) * np.log(np.cosh(half))
    )


def series_prefactor(p: TraParams, r) -> np.ndarray:
    """2^((mu+nu+2)/2) sinh^(mu+1/2)(r/2) cosh^(nu+3/2)(r/2), r in units 1/lambda."""
    r = np.asarray(r, dtype=float)
    return np.exp(_log_prefactor(p, r))


def printed_prefactor(p: TraParams, r) -> np.ndarray:
    """sqrt(2^(mu+nu+1)) sqrt(sinh r) sinh^mu(r/2) cosh^(nu+1)(r/2), the same function written differently."""
    r = np.asarray(r, dtype=float)
    return (
        math.sqrt(2.0 ** (p.mu + p.nu + 1.0))
        * np.sqrt(np.sinh(r))
        * np.sinh(r / 2.0) ** p.mu
        * np.cosh(r / 2.0) ** (p.nu + 1.0)
    )


# ==============================================================================
# SERIES
# ==============================================================================

def _check_grid(r_grid) -> np.ndarray:
    r = np.atleast_1d(np.asarray(r_grid, dtype=float))
    if r.ndim != 1 or r.size == 0:
        raise DomainError("r grid must be a non-empty one-dimensional array")
    if not np.all(np.isfinite(r)) or np.any(r <= 0.0):
        raise DomainError(f"r grid must be finite and positive, minimum is {r.min()!r}")
    if r.size > 1 and not np.all(np.diff(r) > 0.0):
        raise DomainError("r grid must be strictly increasing")
    return r


def _synthesize(p: TraParams, coefficients: np.ndarray, r: np.ndarray) -> np.ndarray:
    """prefactor(r) * sum_n c_n p_n(cosh r), all in log space until the end."""
    values, log_scale = orthonormal_jacobi(p.regime, np.cosh(r))
    count = coefficients.size
    partial = coefficients @ values[:count]
    with np.errstate(over="ignore", under="ignore"):
        return partial * np.exp(log_scale + _log_prefactor(p, r))


def _family_a_params(spec: PotentialSpec, N: int, nu: Optional[float]) -> TraParams:
    return derive_params(spec.equivalent_family_a(), N, nu)


def _printed_params(spec: PotentialSpec, N: int, nu: Optional[float]) -> TraParams:
    """Basis of the printed sum: the finite-series nu (N clamped to fit it) unless nu is given."""
    spec_a = spec.equivalent_family_a()
    if nu is None:
        mu = math.sqrt(0.25 + spec_a.v0)
        nu = finite_series_nu(mu, spec_a.vs)
        N = min(N, largest_basis_size(mu, nu))
    return derive_params(spec_a, N, nu)


def _printed_coefficients(p: TraParams, k: int):
    eps_k = bound_state_condition(p, k)
    coefficients = wilson_tilde_recursion(k, params_from_physics(p, eps_k))
    return coefficients, eps_k


def _leftover_coupling(p: TraParams, k: int, eps_k: float) -> float:
    """(g_k+1)^2 + eps_k relative to |eps_k|; zero when k+1 terms are exact."""
    g_next = k + 0.5 * (p.mu + p.nu) + 1.0
    return abs(g_next * g_next + eps_k) / max(1.0, abs(eps_k))


def _warn_truncated(message: str) -> None:
    logger.warning(message)
    warnings.warn(message, TruncationWarning, stacklevel=3)


def bound_states(
    spec: PotentialSpec,
    N: int,
    levels: Sequence[int],
    r_grid,
    series: SeriesPolicy = SeriesPolicy.PRINTED,
    nu: Optional[float] = None,
    normalize: bool = False,
) -> List[WavefunctionSample]:
    """
    psi_k for several levels sharing one basis (and one eigensolve in
    MATRIX mode).

    PRINTED without nu works in the finite-series basis, where each psi_k
    solves the wave equation to rounding. With an explicit nu the k+1-term
    sum is kept as a diagnostic and flagged.

    Raises:
        NoBoundStateError: a level is negative or beyond k_max
        DomainError: bad grid, or k > N for the printed series

    Warns:
        TruncationWarning: a printed sum in a basis where it does not
            terminate, or a MATRIX eigenvalue that misses the exact level
    """
    r = _check_grid(r_grid)
    exact = exact_levels(spec)
    for k in levels:
        if not 0 <= k < exact.size:
            raise NoBoundStateError(f"level k = {k} does not exist (k_max = {exact.size - 1})")
    if len(levels) == 0:
        return []

    samples = []
    if series is SeriesPolicy.PRINTED:
        for k in levels:
            if k > N:
                raise DomainError(f"the printed series for k = {k} needs N >= {k}, got N = {N}")
        p = _printed_params(spec, N, nu)
        for k in levels:
            coefficients, eps_k = _printed_coefficients(p, k)
            leftover = _leftover_coupling(p, k, eps_k)
            if leftover > 1e-9:
                _warn_truncated(
                    f"at nu = {p.nu:.6g} the {k + 1}-term sum for level {k} is a truncation, "
                    f"not an eigenfunction (coupling to n = {k + 1} is {leftover:.3g}); "
                    f"leave nu unset for the finite-series basis nu = -1 - sqrt(mu^2 - 2A)"
                )
            psi = _synthesize(p, coefficients, r)
            samples.append(WavefunctionSample(r=r, psi=psi, level=k, normalized=False,
                                              eps=eps_k, terms=k + 1))
    else:
        p = _family_a_params(spec, N, nu)
        T, R = build_matrices(p)
        eig = generalized_eig(T, R, want_vectors=True)
        negative = int(np.sum(eig.eigenvalues < 0.0))
        for k in levels:
            if k >= negative:
                raise NoBoundStateError(
                    f"level k = {k} has no negative eigenvalue at N = {N} ({negative} found)"
                )
            eps_k = float(eig.eigenvalues[k])
            miss = abs(eps_k - float(exact[k]))
            if miss > 1e-10 * max(1.0, abs(float(exact[k]))):
                _warn_truncated(
                    f"MATRIX level {k} at N = {N} misses the exact eps by {miss:.3g}; "
                    "its eigenvector is truncated too, raise N or use the printed series"
                )
            psi = _synthesize(p, eig.eigenvectors[:, k], r)
            samples.append(WavefunctionSample(r=r, psi=psi, level=k, normalized=False,
                                              eps=eps_k, terms=N + 1))

    logger.debug("synthesized %d wavefunctions (%s, N=%d)", len(samples), series.value, N)
    if normalize:
        samples = [_unit_norm(sample) for sample in samples]
    return samples


def bound_state_psi(
    spec: PotentialSpec,
    N: int,
    k: int,
    r_grid,
    series: SeriesPolicy = SeriesPolicy.PRINTED,
    nu: Optional[float] = None,
    normalize: bool = False,
) -> WavefunctionSample:
    """
    psi_k on r_grid (units 1/lambda), un-normalized unless asked.

    Example:
        >>> sample = bound_state_psi(REFERENCE_SPEC, 100, 0, np.linspace(0.01, 6, 600),
        ...                          series=SeriesPolicy.MATRIX)
        >>> count_nodes(sample.psi)
        0
    """
    return bound_states(spec, N, [k], r_grid, series, nu, normalize)[0]


# ==============================================================================
# CHECKS
# ==============================================================================

def _second_derivative(psi: np.ndarray, h: float, stride: int = 1) -> np.ndarray:
    """Five-point second derivative at the points stride*2 .. n-1-stride*2."""
    s = stride
    n = psi.size
    centre = slice(2 * s, n - 2 * s)
    return (
        -psi[4 * s:]
        + 16.0 * psi[3 * s: n - s]
        - 30.0 * psi[centre]
        + 16.0 * psi[s: n - 3 * s]
        - psi[: n - 4 * s]
    ) / (12.0 * (s * h) ** 2)


def schrodinger_residual(spec: PotentialSpec, sample: WavefunctionSample, eps_k: float) -> ResidualReport:
    """
    max |-psi'' + v psi - eps psi| / max |eps psi| over the interior points,
    in the dimensionless form of -psi''/2 + V psi = E psi (v = 2V/lambda^2).

    The truncation estimate compares the five-point derivative at h and 2h.

    Raises:
        DomainError: the grid is not uniform or has fewer than 9 points

    Warns:
        GridTooCoarseWarning: truncation estimate exceeds the residual
    """
    r, psi = np.asarray(sample.r, dtype=float), np.asarray(sample.psi, dtype=float)
    if r.size < 9:
        raise DomainError(f"residual needs at least 9 grid points, got {r.size}")
    steps = np.diff(r)
    h = float(steps.mean())
    if np.max(np.abs(steps - h)) > 1e-9 * max(h, 1.0):
        raise DomainError("residual needs a uniform grid")

    scale = float(np.max(np.abs(eps_k * psi)))
    if scale == 0.0:
        return ResidualReport(value=0.0, degenerate=True)

    v = 2.0 * potential_value(spec, r / spec.lam) / spec.lam ** 2
    fine = _second_derivative(psi, h)
    inner = slice(2, r.size - 2)
    residual = -fine + (v[inner] - eps_k) * psi[inner]
    value = float(np.max(np.abs(residual))) / scale

    coarse = _second_derivative(psi, h, stride=2)
    # both stencils centred on points 4 .. n-5
    estimate = float(np.max(np.abs(fine[2:-2] - coarse))) / 15.0 / scale
    if estimate > value:
        message = (
            f"finite-difference truncation estimate {estimate:.3g} exceeds the residual "
            f"{value:.3g}; refine the grid (h = {h:g})"
        )
        logger.warning(message)
        warnings.warn(message, GridTooCoarseWarning, stacklevel=2)
    return ResidualReport(value=value, degenerate=False, truncation_estimate=estimate)


def truncation_report(
    spec: PotentialSpec,
    N: int,
    k: int,
    r_grid,
    tol: float = 1e-9,
    nu: Optional[float] = None,
) -> TruncationReport:
    """
    Relative change of the printed sum (n = 0..k) when the same W~_n at
    eps_k are carried on to n = N.

    Uses the basis of bound_states: the finite-series nu when nu is None
    (N is clamped to the largest size that basis allows, and the tail is
    zero), otherwise the given nu. A tail that cannot be computed counts
    as an infinite change.

    Warns:
        TruncationWarning: the change exceeds tol
    """
    r = _check_grid(r_grid)
    if k > N:
        raise DomainError(f"level k = {k} exceeds N = {N}")
    p = _printed_params(spec, N, nu)
    eps_k = bound_state_condition(p, k)
    with np.errstate(over="ignore", invalid="ignore"):
        try:
            coefficients = wilson_tilde_recursion(p.N, params_from_physics(p, eps_k))
        except TraError as exc:
            logger.debug("tail of level %d at nu = %g cannot be computed: %s", k, p.nu, exc)
            coefficients = None
        if coefficients is None:
            change = max_tail = float("inf")
        else:
            printed = _synthesize(p, coefficients[: k + 1], r)
            extended = _synthesize(p, coefficients, r)
            tail = np.abs(coefficients[k + 1:])
            peak = float(np.max(np.abs(printed)))
            change = float(np.max(np.abs(extended - printed))) / peak if peak > 0.0 else 0.0
            max_tail = float(tail.max()) if tail.size else 0.0

    if not np.isfinite(change):
        change = float("inf")
    within = change <= tol
    if not within:
        _warn_truncated(
            f"printed series for level {k} is not truncation-insensitive: extending it to "
            f"N = {p.N} at nu = {p.nu:.6g} changes psi by {change:.3g} "
            f"(max tail coefficient {max_tail:.3g})"
        )
    return TruncationReport(level=k, relative_change=change,
                            max_tail_coefficient=max_tail, within_tolerance=within)


# ==============================================================================
# UTILITIES
# ==============================================================================

def count_nodes(psi, threshold: float = 1e-6) -> int:
    """Sign changes among the points with |psi| > threshold * max|psi|."""
    psi = np.asarray(psi, dtype=float)
    peak = float(np.max(np.abs(psi))) if psi.size else 0.0
    if peak == 0.0:
        return 0
    significant = psi[np.abs(psi) > threshold * peak]
    return int(np.sum(np.signbit(significant[1:]) != np.signbit(significant[:-1])))


def _unit_norm(sample: WavefunctionSample) -> WavefunctionSample:
    norm_sq = float(integrate.trapezoid(sample.psi ** 2, sample.r))
    if norm_sq <= 0.0:
        raise DomainError(f"cannot normalize level {sample.level}: zero norm on the grid")
    return WavefunctionSample(
        r=sample.r, psi=sample.psi / math.sqrt(norm_sq), level=sample.level,
        normalized=True, eps=sample.eps, terms=sample.terms,
    )


def normalize(sample: WavefunctionSample) -> WavefunctionSample:
    """Scale psi to unit trapezoid norm on its own grid."""
    return _unit_norm(sample)


def overlap_matrix(samples: Sequence[WavefunctionSample]) -> np.ndarray:
    """<psi_j|psi_k> / sqrt(<psi_j|psi_j><psi_k|psi_k>) by the trapezoid rule."""
    if not samples:
        return np.zeros((0, 0))
    r = samples[0].r
    for sample in samples[1:]:
        if sample.r.shape != r.shape or not np.array_equal(sample.r, r):
            raise DomainError("overlaps need every sample on the same grid")
    stacked = np.vstack([s.psi for s in samples])
    gram = np.array([[integrate.trapezoid(a * b, r) for b in stacked] for a in stacked])
    norms = np.sqrt(np.diag(gram))
    return gram / np.outer(norms, norms)


__all__ = [
    "series_prefactor",
    "printed_prefactor",
    "bound_state_psi",
    "bound_states",
    "schrodinger_residual",
    "truncation_report",
    "count_nodes",
    "normalize",
    "overlap_matrix",
]
