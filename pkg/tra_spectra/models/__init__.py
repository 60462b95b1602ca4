"""
Models subpackage - value types shared by every other subpackage.

• PotentialFamily, PotentialSpec - the physics input
• JacobiRegime, BasisSpec, TraParams, WilsonParams - parameter sets
• SymTridiagonal - T and R of the matrix eigenvalue equation
• policy enums and dataclass configs
• result records
"""

from .potential import PotentialFamily, PotentialSpec
from .params import JacobiRegime, BasisSpec, TraParams, WilsonParams
from .matrices import SymTridiagonal
from .config import (
    BRootPolicy,
    NuPolicy,
    SeriesPolicy,
    UnitConvention,
    SolverMethod,
    SolverConfig,
    PlateauConfig,
    ShootingConfig,
    WavefunctionConfig,
)
from .results import (
    GeneralizedEigResult,
    SpectrumResult,
    ConvergenceTable,
    LevelPlateau,
    PlateauReport,
    PhaseShiftCurve,
    WavefunctionSample,
    ResidualReport,
    TruncationReport,
    CheckStatus,
    CheckResult,
)

__all__ = [
    "PotentialFamily",
    "PotentialSpec",
    "JacobiRegime",
    "BasisSpec",
    "TraParams",
    "WilsonParams",
    "SymTridiagonal",
    "BRootPolicy",
    "NuPolicy",
    "SeriesPolicy",
    "UnitConvention",
    "SolverMethod",
    "SolverConfig",
    "PlateauConfig",
    "ShootingConfig",
    "WavefunctionConfig",
    "GeneralizedEigResult",
    "SpectrumResult",
    "ConvergenceTable",
    "LevelPlateau",
    "PlateauReport",
    "PhaseShiftCurve",
    "WavefunctionSample",
    "ResidualReport",
    "TruncationReport",
    "CheckStatus",
    "CheckResult",
]
