"""
Continuum phase shift of the family-A potential.

    delta(E) = -2 arg Gamma((mu+1)/2 - z + i sqrt(eps)),   eps = 2E/lambda^2 > 0

with z = +sqrt((mu^2 - 2A)/4), imaginary when the radicand is negative.
The sign in front of z is exposed as z_sign; no overall multiple of pi is
fixed, so values are principal unless a curve is unwrapped.

Family B is handled through its identical family-A potential.
"""

import logging
import math
from typing import Sequence

import numpy as np

from ..exceptions import DomainError
from ..models import PhaseShiftCurve, PotentialFamily, PotentialSpec, TraParams
from ..special.specfun import arg_gamma
from ..special.wilson import params_from_physics
from .tra_core import derive_params

logger = logging.getLogger(__name__)


def _gamma_argument(p: TraParams, eps: float, z_sign: int) -> complex:
    if p.family is not PotentialFamily.A or p.mapped_from_b:
        raise DomainError("the phase shift is stated for unmapped family-A parameters")
    if not eps > 0.0:
        raise DomainError(f"phase shift needs eps > 0, got {eps!r}")
    if z_sign not in (1, -1):
        raise DomainError(f"z_sign must be +1 or -1, got {z_sign!r}")
    z = params_from_physics(p, eps).z
    return complex((p.mu + 1.0) / 2.0, math.sqrt(eps)) - z_sign * z


def phase_shift(p: TraParams, eps: float, z_sign: int = 1, continuous: bool = False) -> float:
    """
    delta at one energy, radians.

    Args:
        p: family-A parameters (only mu and A matter)
        eps: 2E/lambda^2, must be positive
        z_sign: +1 uses z = +sqrt(z^2), -1 the other branch
        continuous: use the analytic log-gamma branch instead of the
            principal argument

    Raises:
        DomainError: eps <= 0, or parameters that are not family A
        PoleError: the Gamma argument is a non-positive integer
    """
    return -2.0 * arg_gamma(_gamma_argument(p, eps, z_sign), continuous=continuous)


def phase_shift_for(spec: PotentialSpec, eps: float, z_sign: int = 1) -> float:
    """phase_shift for a potential of either family."""
    p = derive_params(spec.equivalent_family_a(), N=0)
    return phase_shift(p, eps, z_sign)


def phase_shift_curve(
    p: TraParams,
    eps_grid: Sequence[float],
    unwrap: bool = False,
    z_sign: int = 1,
) -> PhaseShiftCurve:
    """
    delta on a strictly increasing positive grid.

    With unwrap=True, 2 pi jumps between neighbours are removed and the
    principal values are kept in delta_principal.
    """
    eps = np.asarray(eps_grid, dtype=float)
    if eps.ndim != 1:
        raise DomainError("eps grid must be one-dimensional")
    if eps.size and not np.all(eps > 0.0):
        raise DomainError(f"eps grid must be positive, minimum is {eps.min()!r}")
    if eps.size > 1 and not np.all(np.diff(eps) > 0.0):
        raise DomainError("eps grid must be strictly increasing")

    principal = np.array([phase_shift(p, float(e), z_sign) for e in eps])
    logger.debug("phase shift on %d points (unwrap=%s, z_sign=%+d)", eps.size, unwrap, z_sign)
    if not unwrap:
        return PhaseShiftCurve(eps=eps, delta=principal, unwrapped=False,
                               delta_principal=principal, lam=p.lam)
    unwrapped = np.unwrap(principal) if eps.size else principal
    return PhaseShiftCurve(eps=eps, delta=unwrapped, unwrapped=True,
                           delta_principal=principal, lam=p.lam)


__all__ = ["phase_shift", "phase_shift_for", "phase_shift_curve"]
