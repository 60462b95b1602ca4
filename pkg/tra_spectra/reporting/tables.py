"""
Result records -> Table.

One builder per command output; renderers never see the result types.
"""

from typing import Dict, List, Sequence

import numpy as np

from .base import Table, table_from_columns
from ..models import (
    CheckResult,
    ConvergenceTable,
    PhaseShiftCurve,
    PlateauReport,
    UnitConvention,
    WavefunctionSample,
)


def _unit_sign(units: UnitConvention) -> float:
    return -1.0 if units is UnitConvention.HALF_LAMBDA2 else 1.0


def convergence_layout(table: ConvergenceTable, units: UnitConvention) -> Table:
    """Levels down, one column per N, the exact column last."""
    rows = table.rows(units)
    columns = ["n"] + [f"N={N}" for N in table.N_list] + ["exact"]
    return Table(
        columns=columns,
        rows=[[row[name] for name in columns] for row in rows],
        title="Bound-state energies",
        metadata={
            "units": units.value,
            "nu_used": {str(N): float(nu) for N, nu in table.nu_used.items()},
            "monotone": table.is_monotone(),
        },
    )


def convergence_diffs(table: ConvergenceTable, units: UnitConvention) -> Table:
    """One row per (level, N) cell with its difference from the exact value."""
    sign = _unit_sign(units)
    rows = []
    for N in table.N_list:
        for level in range(table.exact.size):
            numeric = table.cell(N, level)
            exact = float(table.exact[level])
            rows.append([level, N, sign * numeric, sign * exact, abs(numeric - exact), float(table.nu_used[N])])
    return Table(
        columns=["n", "N", "numeric", "exact", "abs_diff", "nu"],
        rows=rows,
        title="Per-cell differences from the closed form",
        metadata={
            "units": units.value,
            "levels": int(table.exact.size),
            "monotone": table.is_monotone(),
        },
    )


def phase_shift_layout(curve: PhaseShiftCurve) -> Table:
    """eps, E (units lambda^2/2), delta_rad and, when unwrapped, delta_unwrapped."""
    principal = curve.delta_principal if curve.delta_principal is not None else curve.delta
    columns: Dict[str, Sequence] = {
        "eps": curve.eps,
        "E": curve.energies,
        "delta_rad": principal,
    }
    if curve.unwrapped:
        columns["delta_unwrapped"] = curve.delta
    return table_from_columns("Phase shift", columns, unwrapped=curve.unwrapped)


def wavefunction_layout(samples: Sequence[WavefunctionSample]) -> Table:
    """r followed by one psi_k column per level, on the shared grid."""
    if not samples:
        return Table(columns=["r"], rows=[], title="Bound-state wavefunctions")
    columns: Dict[str, Sequence] = {"r": samples[0].r}
    for sample in samples:
        columns[f"psi_{sample.level}"] = sample.psi
    return table_from_columns(
        "Bound-state wavefunctions",
        columns,
        normalized=all(s.normalized for s in samples),
        eps={str(s.level): float(s.eps) for s in samples},
        terms={str(s.level): int(s.terms) for s in samples},
    )


def plateau_layout(report: PlateauReport) -> Table:
    """Eigenvalue of every level at every nu of the scan."""
    levels = report.eigenvalues.shape[1] if report.eigenvalues.ndim == 2 else 0
    columns: Dict[str, Sequence] = {"nu": report.nu_grid}
    for level in range(levels):
        columns[f"level_{level}"] = report.eigenvalues[:, level]
    return table_from_columns("Eigenvalues across the nu scan", columns, rel_tol=report.rel_tol)


def plateau_summary(report: PlateauReport) -> Table:
    rows: List[list] = []
    for plateau in report.plateaus:
        rows.append([
            plateau.level,
            float(report.nu_grid[plateau.start]),
            float(report.nu_grid[plateau.stop]),
            plateau.nu_mid,
            plateau.value_mid,
            plateau.spread,
            plateau.width,
            plateau.found,
        ])
    return Table(
        columns=["level", "nu_start", "nu_stop", "nu_mid", "value_mid", "spread", "width", "found"],
        rows=rows,
        title="Plateaus of computational stability",
        metadata={"rel_tol": report.rel_tol, "grid_points": int(np.size(report.nu_grid))},
    )


def verify_layout(results: Sequence[CheckResult]) -> Table:
    """One row per check; metadata holds the verdict and the metrics."""
    rows = [[r.name, r.status.name, r.seconds, r.detail] for r in results]
    failed = [r.name for r in results if r.status.name == "FAIL"]
    return Table(
        columns=["check", "status", "seconds", "detail"],
        rows=rows,
        title="Verification",
        metadata={
            "passed": not failed,
            "failed": failed,
            "metrics": {r.name: r.metrics for r in results},
        },
    )


__all__ = [
    "convergence_layout",
    "convergence_diffs",
    "phase_shift_layout",
    "wavefunction_layout",
    "plateau_layout",
    "plateau_summary",
    "verify_layout",
]
