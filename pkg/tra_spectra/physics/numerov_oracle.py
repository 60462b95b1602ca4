"""
╔══════════════════════════════════════════════════════════════════════════════╗
║  Physics: numerov_oracle.py                                                  ║
║  Bound states by direct integration, sharing no basis or matrix code         ║
╚══════════════════════════════════════════════════════════════════════════════╝

📚 ALGORITHM: Numerov shooting

   psi'' = Q(r) psi with Q = 2 (V(r) - E)   (hbar = m = 1)

   Numerov's three-point rule, f_i = 1 - h^2 Q_i / 12:

       y_{i+1} = ((12 - 10 f_i) y_i - f_{i-1} y_{i-1}) / f_{i+1}

   1. Outward from the origin with y ~ r^s, s = 1/2 + sqrt(1/4 + c), where c
      is the coefficient of the 1/r^2 singularity. The grid starts at the
      first multiple of h not below r_min.
   2. Inward from r_max = r_match + tail_lengths / kappa, kappa = sqrt(2|E|),
      seeded with exp(-kappa (r - r_match)).
   3. Both meet at r_match (the potential minimum); the mismatch is the
      Wronskian of (y, y'/kappa), normalized so it lies in [-1, 1]. It
      vanishes exactly when the two solutions are proportional.
   4. A coarse scan uniform in sqrt|E| brackets sign changes, Brent's method
      refines each one.

   Only potential_value is imported from the rest of the package, so
   agreement with the matrix spectrum is independent evidence.
"""

import logging
import math
import warnings
from collections import deque
from dataclasses import replace
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np
from scipy import optimize

from .tra_core import potential_value
from ..exceptions import DomainError, MissedLevelWarning, OverflowFailure
from ..models import PotentialSpec, ShootingConfig

logger = logging.getLogger(__name__)

_RESCALE_ABOVE = 1e100
_MAX_TAIL_STEPS = 100_000
# default scan stops at eps = -0.01, i.e. E = -0.005 lambda^2
_SHALLOWEST_EPS = -0.01
_MAX_REACH = 300.0            # r_max - r_match never exceeds this many 1/lambda


# ==============================================================================
# GEOMETRY
# ==============================================================================

@lru_cache(maxsize=32)
def _matching_point(spec: PotentialSpec) -> Tuple[float, float]:
    """(r_match, V(r_match)) at the potential minimum, falling back to 1/lambda."""
    lam = spec.lam
    lo, hi = 0.05 / lam, 20.0 / lam
    found = optimize.minimize_scalar(
        lambda r: potential_value(spec, r), bounds=(lo, hi), method="bounded"
    )
    r_match = float(found.x)
    if not found.success or r_match - lo < 1e-3 / lam or hi - r_match < 1e-3 / lam:
        r_match = 1.0 / lam
    return r_match, float(potential_value(spec, r_match))


def _kappa(E: float) -> float:
    if not E < 0.0:
        raise DomainError(f"bound-state shooting needs E < 0, got {E!r}")
    return math.sqrt(-2.0 * E)


# ==============================================================================
# NUMEROV SWEEP
# ==============================================================================

def _sweep(f: np.ndarray, y0: float, y1: float) -> np.ndarray:
    """
    Run the Numerov recursion over f and return the last five values.

    Only two values feed the recursion, so rescaling touches just the
    running pair and the kept window.
    """
    coeff = f.tolist()
    window = deque([y0, y1], maxlen=5)
    previous, current = y0, y1
    for i in range(1, len(coeff) - 1):
        following = ((12.0 - 10.0 * coeff[i]) * current - coeff[i - 1] * previous) / coeff[i + 1]
        previous, current = current, following
        window.append(following)
        magnitude = abs(following)
        if magnitude > _RESCALE_ABOVE:
            previous /= magnitude
            current /= magnitude
            window = deque((v / magnitude for v in window), maxlen=5)
        elif not math.isfinite(following):
            raise OverflowFailure(f"Numerov sweep became non-finite at step {i + 1}")
    if not all(math.isfinite(v) for v in window):
        raise OverflowFailure("Numerov sweep became non-finite")
    return np.array(window)


def _derivative(window: np.ndarray, h: float) -> Tuple[float, float]:
    """Value and fourth-order derivative at the middle of five points."""
    value = window[2]
    slope = (-window[4] + 8.0 * window[3] - 8.0 * window[1] + window[0]) / (12.0 * h)
    return float(value), float(slope)


def numerov_integrate(spec: PotentialSpec, E: float, cfg: Optional[ShootingConfig] = None) -> float:
    """
    Normalized Wronskian mismatch at the matching point, in [-1, 1].

    Args:
        spec: the potential
        E: trial energy (absolute, hbar = m = 1), negative
        cfg: grid settings

    Raises:
        DomainError: E >= 0
        OverflowFailure: the sweep overflowed despite rescaling
    """
    cfg = cfg or ShootingConfig()
    cfg.check(spec.lam)
    kappa = _kappa(E)
    h = cfg.h
    s = spec.origin_exponent()
    r_match, _ = _matching_point(spec)

    # outward: r_i = i h, two points beyond the match
    first = max(1, math.ceil(cfg.r_min / h - 1e-12))
    m = max(int(round(r_match / h)), first + 3)
    r_match = m * h
    r_out = np.arange(first, m + 3) * h
    f_out = 1.0 - h * h * 2.0 * (potential_value(spec, r_out) - E) / 12.0
    out = _sweep(f_out, r_out[0] ** s, r_out[1] ** s)
    y_out, dy_out = _derivative(out, h)

    # inward: from r_max down to two points inside the match
    r_max = cfg.r_max if cfg.r_max is not None else r_match + cfg.tail_lengths / kappa
    r_max = min(r_max, r_match + _MAX_REACH / spec.lam)
    if r_max <= r_match + 4.0 * h:
        raise DomainError(f"r_max = {r_max:g} leaves no room beyond the match point {r_match:g}")
    steps = int(math.ceil((r_max - r_match) / h))
    if steps > _MAX_TAIL_STEPS:
        steps = _MAX_TAIL_STEPS
    h_in = (r_max - r_match) / steps
    r_in = r_match + h_in * np.arange(steps, -3, -1)
    f_in = 1.0 - h_in * h_in * 2.0 * (potential_value(spec, r_in) - E) / 12.0
    seeds = np.exp(-kappa * (r_in[:2] - r_match))
    inward = _sweep(f_in, float(seeds[0]), float(seeds[1]))
    # inward runs towards smaller r, so its slope flips sign
    y_in, dy_in = _derivative(inward, h_in)
    dy_in = -dy_in

    cross = (y_out * dy_in - dy_out * y_in) / kappa
    norm = math.hypot(y_out, dy_out / kappa) * math.hypot(y_in, dy_in / kappa)
    if norm == 0.0:
        raise OverflowFailure("both solutions vanished at the matching point")
    return cross / norm


# ==============================================================================
# SHOOTING
# ==============================================================================

def _energy_window(spec: PotentialSpec, cfg: ShootingConfig) -> Tuple[float, float]:
    if cfg.energy_bracket is not None:
        lo, hi = cfg.energy_bracket
        return float(lo), min(float(hi), -1e-12)
    v_min = float(np.min(potential_value(spec, np.linspace(0.05, 20.0, 400) / spec.lam)))
    hi = _SHALLOWEST_EPS * spec.lam ** 2 / 2.0
    return min(v_min, 2.0 * hi), hi


def scan_mismatch(spec: PotentialSpec, cfg: Optional[ShootingConfig] = None) -> Tuple[np.ndarray, np.ndarray]:
    """(energies ascending, mismatch) on a grid uniform in sqrt|E|."""
    cfg = cfg or ShootingConfig()
    lo, hi = _energy_window(spec, cfg)
    roots = np.linspace(math.sqrt(-lo), math.sqrt(-hi), cfg.scan_points)
    energies = -(roots ** 2)
    mismatch = np.array([numerov_integrate(spec, float(E), cfg) for E in energies])
    logger.debug("mismatch scan over E in [%.6g, %.6g], %d points", lo, hi, energies.size)
    return energies, mismatch


def shoot_spectrum(
    spec: PotentialSpec,
    cfg: Optional[ShootingConfig] = None,
    n_levels: Optional[int] = None,
) -> np.ndarray:
    """
    Bound-state energies (absolute, ascending) found by shooting.

    Warns:
        MissedLevelWarning: fewer than n_levels roots were bracketed
    """
    cfg = cfg or ShootingConfig()
    energies, mismatch = scan_mismatch(spec, cfg)
    xtol = cfg.energy_tol * spec.lam ** 2 / 2.0

    def target(E: float) -> float:
        return numerov_integrate(spec, E, cfg)

    levels = []
    for i in range(energies.size - 1):
        left, right = mismatch[i], mismatch[i + 1]
        if left == 0.0:
            levels.append(float(energies[i]))
        elif left * right < 0.0:
            root = optimize.brentq(target, energies[i], energies[i + 1],
                                   xtol=xtol, maxiter=cfg.max_bisections)
            logger.debug("level bracketed in [%.8g, %.8g] -> %.12g", energies[i], energies[i + 1], root)
            levels.append(root)

    found = np.array(sorted(levels))
    if n_levels is not None and found.size < n_levels:
        message = f"shooting found {found.size} of {n_levels} expected levels"
        logger.warning(message)
        warnings.warn(message, MissedLevelWarning, stacklevel=2)
    return found


def step_halving_study(
    spec: PotentialSpec,
    cfg: Optional[ShootingConfig] = None,
    n_levels: Optional[int] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """Levels at step h and h/2, for the Numerov-order check."""
    cfg = cfg or ShootingConfig()
    coarse = shoot_spectrum(spec, cfg, n_levels)
    fine = shoot_spectrum(spec, replace(cfg, h=cfg.h / 2.0), n_levels)
    return coarse, fine


__all__ = ["numerov_integrate", "scan_mismatch", "shoot_spectrum", "step_halving_study"]
