"""
Solvers subpackage - the generalized eigenvalue problem T f = eps R f.

• GeneralizedEigenSolver - strategy interface
• CongruenceSolver, BisectionSolver - the two strategies
• SolverFactory - create a strategy by SolverMethod
• generalized_eig - pick a strategy and post-process the result
• plateau_scan - eigenvalues as the free basis parameter nu varies
"""

from .base import GeneralizedEigenSolver, ldl_pivots, sturm_count
from .congruence import CongruenceSolver
from .bisection import BisectionSolver
from .factory import SolverFactory
from .eigensolver import backward_errors, generalized_eig, r_spectrum
from .plateau import plateau_scan

__all__ = [
    "GeneralizedEigenSolver",
    "CongruenceSolver",
    "BisectionSolver",
    "SolverFactory",
    "generalized_eig",
    "backward_errors",
    "r_spectrum",
    "ldl_pivots",
    "sturm_count",
    "plateau_scan",
]
