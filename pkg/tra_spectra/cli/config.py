"""
Run configuration of the command-line application.

A RunConfig starts from defaults (the tabulated reference potential),
is updated from an optional JSON file, then from command-line flags:

    defaults  <  --config file.json  <  flags

validate() gathers every problem before anything runs and raises one
ConfigError listing them all.
"""

import json
import logging
import math
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, List, Optional

from ..exceptions import ConfigError, ConstraintViolation
from ..models import (
    BRootPolicy,
    NuPolicy,
    PotentialFamily,
    PotentialSpec,
    SeriesPolicy,
    UnitConvention,
)
from ..reporting import RendererFactory

logger = logging.getLogger(__name__)

COMMANDS = ("spectrum", "phase-shift", "wavefunction", "verify", "scan-plateau")


@dataclass
class RunConfig:
    """
    Everything one command needs.

    Potential strengths are in units lambda^2/2, so they are also the
    dimensionless couplings (2V0/lambda^2 and 2V_s/lambda^2).
    """
    command: str = "spectrum"

    # --- potential
    family: str = "A"
    v0: float = 10.0
    vs: float = -80.0                    # V+ (family A) or V- (family B)
    lam: float = 1.0

    # --- basis
    N_list: List[int] = field(default_factory=lambda: [10, 30, 50, 100])
    nu: Optional[float] = None
    nu_policy: str = NuPolicy.PLATEAU_MIDPOINT.value
    b_root_policy: Optional[str] = None  # unset: negative-root where it fits every N
    nu_min: Optional[float] = None
    nu_max: Optional[float] = None
    nu_points: int = 41
    workers: int = 1

    # --- phase shift
    eps_min: float = 0.01
    eps_max: float = 50.0
    eps_points: int = 200
    unwrap: bool = False
    z_sign: int = 1

    # --- wavefunction
    levels: Optional[List[int]] = None
    series: str = SeriesPolicy.PRINTED.value
    r_max: float = 6.0
    points: int = 2000
    normalize: bool = False

    # --- verify
    quick: bool = False
    only: List[str] = field(default_factory=list)

    # --- output
    units: str = UnitConvention.HALF_LAMBDA2.value
    output_dir: Optional[str] = None
    format: str = "csv"

    # -------------------------------------------------------------------------
    # Loading
    # -------------------------------------------------------------------------

    @classmethod
    def field_names(cls) -> List[str]:
        return [f.name for f in fields(cls)]

    @classmethod
    def from_json(cls, path: str) -> "RunConfig":
        """Defaults updated with the keys of a JSON object."""
        try:
            with open(path, "r", encoding="utf-8") as handle:
                data = json.load(handle)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError([f"cannot read config file {path}: {exc}"]) from exc
        if not isinstance(data, dict):
            raise ConfigError([f"config file {path} must hold a JSON object"])
        return cls().updated(data, source=str(path))

    def updated(self, values: Dict[str, Any], source: str = "flags") -> "RunConfig":
        """A copy with the given non-None values applied."""
        known = set(self.field_names())
        unknown = sorted(set(values) - known)
        if unknown:
            raise ConfigError([f"unknown key(s) in {source}: {', '.join(unknown)}"])
        merged = {name: getattr(self, name) for name in known}
        merged.update({k: v for k, v in values.items() if v is not None})
        logger.debug("config updated from %s: %s", source, sorted(k for k, v in values.items() if v is not None))
        return RunConfig(**merged)

    # -------------------------------------------------------------------------
    # Typed views
    # -------------------------------------------------------------------------

    @property
    def potential(self) -> PotentialSpec:
        return PotentialSpec(PotentialFamily.parse(self.family), v0=float(self.v0),
                             vs=float(self.vs), lam=float(self.lam))

    @property
    def unit_convention(self) -> UnitConvention:
        return UnitConvention(self.units)

    @property
    def nu_selection(self) -> NuPolicy:
        if self.nu is not None and self.nu_policy == NuPolicy.PLATEAU_MIDPOINT.value:
            return NuPolicy.EXPLICIT
        return NuPolicy(self.nu_policy)

    @property
    def b_root(self) -> BRootPolicy:
        """
        The chosen family-B policy. Unset means negative-root when its mu
        interval is non-empty for every N in N_list, free-nu otherwise.
        """
        if self.b_root_policy is not None:
            return BRootPolicy(self.b_root_policy)
        return BRootPolicy.NEGATIVE_ROOT if self._negative_root_fits() else BRootPolicy.FREE_NU

    def _negative_root_fits(self) -> bool:
        if PotentialFamily.parse(self.family) is not PotentialFamily.B:
            return True
        nu = -math.sqrt(max(0.25 + float(self.v0), 0.0))
        return all(-2.0 * int(N) - 1.0 - nu > -1.0 for N in self.N_list)

    @property
    def series_policy(self) -> SeriesPolicy:
        return SeriesPolicy(self.series)

    @property
    def output_path(self) -> Optional[Path]:
        return Path(self.output_dir) if self.output_dir else None

    # -------------------------------------------------------------------------
    # Validation
    # -------------------------------------------------------------------------

    def validate(self) -> None:
        """
        Raise ConfigError listing every problem found.

        The basis regime (mu + nu < -2N - 1) is checked here for all
        commands except verify, which reports it as a failed check.
        """
        problems: List[str] = []

        def enum_value(enum_cls, value, flag):
            try:
                return enum_cls(value)
            except ValueError:
                problems.append(f"{flag}: {value!r} is not one of {[e.value for e in enum_cls]}")
                return None

        if self.command not in COMMANDS:
            problems.append(f"unknown command {self.command!r}; expected one of {list(COMMANDS)}")

        spec = None
        try:
            spec = self.potential
        except (ValueError, TypeError) as exc:
            problems.append(f"potential: {exc}")
        if spec is not None and not spec.is_real:
            problems.append(f"--v0: 2V0/lambda^2 >= -1/4 required, got {spec.v0:g}")

        if not self.N_list:
            problems.append("--N: at least one basis size is required")
        elif any(int(N) != N or N < 0 for N in self.N_list):
            problems.append(f"--N: basis sizes must be non-negative integers, got {self.N_list}")

        enum_value(UnitConvention, self.units, "--units")
        enum_value(NuPolicy, self.nu_policy, "--nu-policy")
        if self.b_root_policy is not None:
            enum_value(BRootPolicy, self.b_root_policy, "--b-root-policy")
        enum_value(SeriesPolicy, self.series, "--series")
        if self.format not in RendererFactory.available_formats():
            problems.append(f"--format: {self.format!r} is not one of {RendererFactory.available_formats()}")

        if self.nu_policy == NuPolicy.EXPLICIT.value and self.nu is None:
            problems.append("--nu is required with the explicit nu policy")
        if self.workers < 1:
            problems.append(f"--workers must be >= 1, got {self.workers}")
        if self.nu_points < 1:
            problems.append(f"--nu-points must be >= 1, got {self.nu_points}")
        if self.nu_min is not None and self.nu_max is not None and not self.nu_min < self.nu_max:
            problems.append(f"--nu-min ({self.nu_min}) must be below --nu-max ({self.nu_max})")

        if self.command == "phase-shift":
            if not self.eps_min > 0.0:
                problems.append(f"--eps-min must be positive, got {self.eps_min}")
            if not self.eps_max > self.eps_min:
                problems.append(f"--eps-max ({self.eps_max}) must exceed --eps-min ({self.eps_min})")
            if self.eps_points < 1:
                problems.append(f"--eps-points must be >= 1, got {self.eps_points}")
            if self.z_sign not in (1, -1):
                problems.append(f"--z-sign must be 1 or -1, got {self.z_sign}")

        if self.command == "wavefunction":
            if not (self.r_max > 0.0 and math.isfinite(self.r_max)):
                problems.append(f"--r-max must be positive, got {self.r_max}")
            if self.points < 9:
                problems.append(f"--points must be at least 9, got {self.points}")
            if self.levels is not None and any(k < 0 for k in self.levels):
                problems.append(f"--levels must be non-negative, got {self.levels}")

        if not problems and self.b_root_policy is None and not self._negative_root_fits():
            logger.warning(
                "the negative-root family-B basis needs nu < -2N for every N in %s; "
                "using --b-root-policy free-nu", self.N_list,
            )
        if not problems and self.command != "verify":
            problems.extend(self._regime_problems(spec))

        if problems:
            raise ConfigError(problems)

    def _regime_problems(self, spec: PotentialSpec) -> List[str]:
        # imported here: the physics stack is heavy and not needed for --help
        from ..physics.tra_core import derive_params

        found = []
        explicit = self.nu if self.nu_selection is NuPolicy.EXPLICIT else None
        for N in self.N_list:
            try:
                derive_params(spec, int(N), explicit, self.b_root)
            except ConstraintViolation as exc:
                hint = ""
                if spec.family is PotentialFamily.B and self.b_root is BRootPolicy.NEGATIVE_ROOT:
                    hint = " (try --b-root-policy free-nu)"
                found.append(f"N={N}: {exc}{hint}")
        return found


__all__ = ["RunConfig", "COMMANDS"]
