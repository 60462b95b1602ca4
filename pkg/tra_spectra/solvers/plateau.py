"""
The nu-plateau scan.

For fixed N the free basis parameter nu changes the numerical eigenvalues
only slightly over a range of values. The scan solves the pencil for each
nu on a grid and reports, per bound level, the longest run of consecutive
grid points whose eigenvalues agree to a relative tolerance.
"""

import logging
import warnings
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

import numpy as np

from .eigensolver import generalized_eig
from ..exceptions import ConstraintViolation, NoPlateauWarning
from ..models import (
    BRootPolicy,
    LevelPlateau,
    PlateauConfig,
    PlateauReport,
    PotentialFamily,
    PotentialSpec,
    SolverConfig,
)

logger = logging.getLogger(__name__)


def _negative_levels(spec: PotentialSpec, N: int, nu: float, solver_config: SolverConfig) -> np.ndarray:
    # imported here: physics depends on solvers, not the other way round
    from ..physics.tra_core import build_matrices, derive_params

    params = derive_params(spec, N, nu, BRootPolicy.FREE_NU)
    T, R = build_matrices(params)
    result = generalized_eig(T, R, want_vectors=False, config=solver_config)
    return result.negative


def _longest_run(values: np.ndarray, rel_tol: float):
    """(start, stop, spread) of the longest window with max-min <= rel_tol |mean|."""
    best = None
    size = values.size
    for start in range(size):
        if np.isnan(values[start]):
            continue
        stop = start
        lo = hi = values[start]
        while stop + 1 < size and not np.isnan(values[stop + 1]):
            lo_next = min(lo, values[stop + 1])
            hi_next = max(hi, values[stop + 1])
            window = values[start: stop + 2]
            if hi_next - lo_next > rel_tol * abs(np.mean(window)):
                break
            lo, hi, stop = lo_next, hi_next, stop + 1
        if best is None or stop - start > best[1] - best[0]:
            best = (start, stop, hi - lo)
    return best if best is not None else (0, 0, float("nan"))


def plateau_scan(
    spec: PotentialSpec,
    N: int,
    nu_grid: Sequence[float],
    config: Optional[PlateauConfig] = None,
    solver_config: Optional[SolverConfig] = None,
) -> PlateauReport:
    """
    Solve the pencil at every nu of the grid and locate the plateaus.

    Family B is scanned through its identical family-A potential, where nu
    is the free parameter.

    Raises:
        ConstraintViolation: some grid value has mu + nu >= -2N - 1

    Warns:
        NoPlateauWarning: a level has no stable run of min_points points
    """
    config = config or PlateauConfig()
    solver_config = solver_config or SolverConfig(want_vectors=False)
    grid = np.asarray(sorted(nu_grid), dtype=float)
    if grid.size == 0:
        raise ConstraintViolation("non-empty nu grid", "no grid points given")

    spec_a = spec.equivalent_family_a() if spec.family is PotentialFamily.B else spec
    mu = float(np.sqrt(0.25 + spec_a.v0))
    bound = -2 * N - 1
    if np.any(mu + grid >= bound):
        raise ConstraintViolation(
            "mu + nu < -2N - 1",
            f"grid reaches nu = {grid.max():g} with mu = {mu:.12g}, -2N - 1 = {bound}",
        )

    def solve_one(nu: float) -> np.ndarray:
        return _negative_levels(spec_a, N, float(nu), solver_config)

    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            spectra: List[np.ndarray] = list(pool.map(solve_one, grid))
    else:
        spectra = [solve_one(nu) for nu in grid]

    levels = max((s.size for s in spectra), default=0)
    table = np.full((grid.size, levels), np.nan)
    for i, values in enumerate(spectra):
        table[i, : values.size] = values

    plateaus = []
    for level in range(levels):
        start, stop, spread = _longest_run(table[:, level], config.rel_tol)
        found = stop - start + 1 >= config.min_points
        middle = (start + stop) // 2
        plateau = LevelPlateau(
            level=level,
            start=start,
            stop=stop,
            nu_mid=float(grid[middle]),
            value_mid=float(table[middle, level]),
            spread=float(spread),
            found=found,
        )
        if not found:
            message = (
                f"no plateau of {config.min_points} points for level {level} "
                f"(longest run {stop - start + 1}, rel_tol {config.rel_tol:g})"
            )
            logger.warning(message)
            warnings.warn(message, NoPlateauWarning, stacklevel=2)
        else:
            logger.debug("level %d plateau: nu in [%g, %g], width %d",
                         level, grid[start], grid[stop], plateau.width)
        plateaus.append(plateau)

    return PlateauReport(nu_grid=grid, eigenvalues=table, plateaus=plateaus, rel_tol=config.rel_tol)
