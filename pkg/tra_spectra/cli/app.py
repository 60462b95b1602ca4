"""
╔══════════════════════════════════════════════════════════════════════════════╗
║  CLI: app.py                                                                 ║
║  tra-spectra <spectrum|phase-shift|wavefunction|verify|scan-plateau>        ║
╚══════════════════════════════════════════════════════════════════════════════╝

Exit codes:
    0  success (an empty spectrum is a success)
    1  a verification check failed
    2  usage, configuration or constraint error

Data goes to stdout unless --output-dir is given; logs go to stderr.
"""

import argparse
import logging
import math
import sys
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from .. import __version__
from ..exceptions import ConfigError, TraError
from ..models import NuPolicy, PlateauConfig, SeriesPolicy
from ..physics import (
    bound_states,
    convergence_table,
    count_nodes,
    derive_params,
    exact_levels,
    phase_shift_curve,
    plateau_range,
    truncation_report,
)
from ..reporting import (
    JsonRenderer,
    RendererFactory,
    Table,
    convergence_diffs,
    convergence_layout,
    phase_shift_layout,
    plateau_layout,
    plateau_summary,
    verify_layout,
    wavefunction_layout,
)
from ..solvers import plateau_scan
from .config import RunConfig
from .verify import VerificationSuite

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


# ==============================================================================
# ARGUMENT PARSING
# ==============================================================================

def _int_list(text: str) -> List[int]:
    """'10,30,50' -> [10, 30, 50]."""
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return values


def _name_list(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _finite(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"expected a finite number, got {text!r}")
    return value


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)

    general = common.add_argument_group("general")
    general.add_argument("--config", help="JSON file with RunConfig keys; flags override it")
    general.add_argument("--log-level", default="WARNING",
                         choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    general.add_argument("-v", "--verbose", action="count", default=0,
                         help="-v for INFO, -vv for DEBUG")
    general.add_argument("--output-dir", help="write files here instead of printing")
    general.add_argument("--format", help=f"one of {RendererFactory.available_formats()}")
    general.add_argument("--units", help="half-lambda2 (default) or dimensionless")

    potential = common.add_argument_group("potential (strengths in units lambda^2/2)")
    potential.add_argument("--family", help="A or B")
    potential.add_argument("--v0", type=_finite, help="strength of the 1/sinh^2 term")
    strength = potential.add_mutually_exclusive_group()
    strength.add_argument("--vplus", type=_finite, help="V+ of family A")
    strength.add_argument("--vminus", type=_finite, help="V- of family B (implies --family B)")
    potential.add_argument("--lam", type=_finite, help="inverse range lambda")

    basis = common.add_argument_group("basis")
    basis.add_argument("--N", dest="N_list", type=_int_list, help="comma-separated basis sizes")
    basis.add_argument("--nu", type=_finite, help="free basis parameter")
    basis.add_argument("--nu-policy", help="explicit, plateau-midpoint or scan")
    basis.add_argument("--b-root-policy", help="negative-root or free-nu")
    basis.add_argument("--workers", type=int, help="thread pool size")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="tra-spectra",
        description="Bound states, phase shifts and wavefunctions of singular hyperbolic potentials",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    sub.add_parser("spectrum", parents=[common], help="convergence table of the bound-state energies")

    phase = sub.add_parser("phase-shift", parents=[common], help="continuum phase shift on an energy grid")
    phase.add_argument("--eps-min", type=_finite)
    phase.add_argument("--eps-max", type=_finite)
    phase.add_argument("--eps-points", type=int)
    phase.add_argument("--unwrap", action="store_true", default=None)
    phase.add_argument("--z-sign", type=int, choices=[1, -1])

    wave = sub.add_parser("wavefunction", parents=[common], help="bound-state wavefunctions on a radial grid")
    wave.add_argument("--levels", type=_int_list, help="comma-separated levels (default: all)")
    wave.add_argument("--series", help="printed or matrix")
    wave.add_argument("--r-max", type=_finite, help="grid end, units 1/lambda")
    wave.add_argument("--points", type=int)
    wave.add_argument("--normalize", action="store_true", default=None)

    check = sub.add_parser("verify", parents=[common], help="run the self-check suite")
    check.add_argument("--quick", action="store_true", default=None, help="skip the slow checks")
    check.add_argument("--only", type=_name_list,
                       help=f"comma-separated subset of {VerificationSuite.available_checks()}")

    scan = sub.add_parser("scan-plateau", parents=[common], help="eigenvalues across a nu grid")
    scan.add_argument("--nu-min", type=_finite)
    scan.add_argument("--nu-max", type=_finite)
    scan.add_argument("--nu-points", type=int)

    return parser


def _flag_values(args: argparse.Namespace) -> Dict[str, object]:
    """Namespace -> RunConfig keys; unset flags are None and do not override."""
    known = set(RunConfig.field_names())
    values = {key: value for key, value in vars(args).items() if key in known}
    if args.vminus is not None:
        values["vs"] = args.vminus
        if args.family is None:
            values["family"] = "B"
    elif args.vplus is not None:
        values["vs"] = args.vplus
    return values


def load_config(args: argparse.Namespace) -> RunConfig:
    """defaults < --config file < flags, then validated."""
    config = RunConfig.from_json(args.config) if args.config else RunConfig()
    config = config.updated(_flag_values(args))
    config.validate()
    return config


def _configure_logging(level_name: str, verbose: int) -> None:
    level = getattr(logging, level_name)
    if verbose:
        level = min(level, logging.DEBUG if verbose > 1 else logging.INFO)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger().setLevel(level)
    logging.captureWarnings(True)


# ==============================================================================
# OUTPUT
# ==============================================================================

def _emit(table: Table, config: RunConfig, stem: str, format_name: Optional[str] = None) -> None:
    renderer = RendererFactory.create(format_name or config.format)
    if config.output_path is None:
        sys.stdout.write(renderer.render(table))
        return
    path = renderer.write(table, config.output_path / stem)
    logger.info("wrote %s", path)


# ==============================================================================
# COMMANDS
# ==============================================================================

def _explicit_nu(config: RunConfig) -> Optional[float]:
    return config.nu if config.nu_selection is NuPolicy.EXPLICIT else None


def _cmd_spectrum(config: RunConfig) -> int:
    table = convergence_table(
        config.potential,
        config.N_list,
        nu_policy=config.nu_selection,
        nu=config.nu,
        b_root_policy=config.b_root,
        workers=config.workers,
    )
    units = config.unit_convention
    if table.exact.size == 0:
        logger.warning("no bound state for %s", config.potential)
    _emit(convergence_layout(table, units), config, "spectrum")
    if config.output_path is not None:
        path = JsonRenderer().write(convergence_diffs(table, units), config.output_path / "spectrum_diffs")
        logger.info("wrote %s", path)
    if not table.is_monotone():
        logger.warning("an error grows with N; check the basis parameter choice")
    return 0


def _cmd_phase_shift(config: RunConfig) -> int:
    p = derive_params(config.potential.equivalent_family_a(), 0)
    grid = np.linspace(config.eps_min, config.eps_max, config.eps_points)
    curve = phase_shift_curve(p, grid, unwrap=config.unwrap, z_sign=config.z_sign)
    _emit(phase_shift_layout(curve), config, "phase_shift")
    return 0


def _cmd_wavefunction(config: RunConfig) -> int:
    spec = config.potential
    N = int(config.N_list[-1])
    levels = config.levels if config.levels is not None else list(range(exact_levels(spec).size))
    r = np.linspace(config.r_max / config.points, config.r_max, config.points)
    samples = bound_states(spec, N, levels, r, config.series_policy, _explicit_nu(config), config.normalize)
    for sample in samples:
        logger.info("level %d: %d nodes on (0, %g]", sample.level, count_nodes(sample.psi), config.r_max)
        if config.series_policy is SeriesPolicy.PRINTED:
            report = truncation_report(spec, N, sample.level, r, nu=_explicit_nu(config))
            logger.info("level %d: extending the printed sum changes psi by %.3g",
                        sample.level, report.relative_change)
    _emit(wavefunction_layout(samples), config, "wavefunction")
    return 0


def _cmd_verify(config: RunConfig) -> int:
    suite = VerificationSuite(config)
    try:
        passed, records = suite.run_full()
    except ValueError as exc:
        raise ConfigError([str(exc)]) from exc
    for record in records:
        sys.stderr.write(f"{record}\n")
    format_name = "text" if config.format == "text" else "json"
    _emit(verify_layout(records), config, "verify", format_name)
    return 0 if passed else 1


def _cmd_scan_plateau(config: RunConfig) -> int:
    spec_a = config.potential.equivalent_family_a()
    N = int(config.N_list[-1])
    lo, hi = plateau_range(math.sqrt(0.25 + spec_a.v0), N)
    lo = config.nu_min if config.nu_min is not None else lo
    hi = config.nu_max if config.nu_max is not None else hi
    if not lo < hi:
        raise ConfigError([f"nu grid is empty: nu_min = {lo:g}, nu_max = {hi:g}"])
    grid = np.linspace(lo, hi, config.nu_points)
    report = plateau_scan(spec_a, N, grid, config=PlateauConfig(workers=config.workers))
    _emit(plateau_layout(report), config, "plateau_scan")
    _emit(plateau_summary(report), config, "plateau_summary")
    return 0


COMMAND_HANDLERS: Dict[str, Callable[[RunConfig], int]] = {
    "spectrum": _cmd_spectrum,
    "phase-shift": _cmd_phase_shift,
    "wavefunction": _cmd_wavefunction,
    "verify": _cmd_verify,
    "scan-plateau": _cmd_scan_plateau,
}


# ==============================================================================
# ENTRY POINT
# ==============================================================================

def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse, configure, dispatch; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    _configure_logging(args.log_level, args.verbose)
    try:
        config = load_config(args)
        return COMMAND_HANDLERS[config.command](config)
    except ConfigError as exc:
        sys.stderr.write(f"tra-spectra: {exc}\n")
        return 2
    except TraError as exc:
        logger.debug("command failed", exc_info=True)
        sys.stderr.write(f"tra-spectra: {type(exc).__name__}: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
