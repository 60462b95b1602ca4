"""
Solver Factory for creating eigensolver strategies.

📚 CONCEPT: Factory Pattern

Callers ask for a SolverMethod and get a ready solver; adding a strategy
only needs a new entry in the registry.
"""

from typing import Dict, List, Optional, Type

from .base import GeneralizedEigenSolver
from .bisection import BisectionSolver
from .congruence import CongruenceSolver
from ..models import SolverConfig, SolverMethod


class SolverFactory:
    """Registry of solver strategies keyed by SolverMethod."""

    # Class-level mapping: belongs to the class, shared by every caller
    _solvers: Dict[SolverMethod, Type[GeneralizedEigenSolver]] = {
        SolverMethod.CONGRUENCE: CongruenceSolver,
        SolverMethod.BISECTION: BisectionSolver,
    }

    @classmethod
    def create(cls, method: SolverMethod, config: Optional[SolverConfig] = None) -> GeneralizedEigenSolver:
        """
        Create the solver for a method.

        Raises:
            ValueError: no solver is registered for the method
        """
        solver_class = cls._solvers.get(method)
        if solver_class is None:
            raise ValueError(
                f"No solver registered for method: {method}\n"
                f"Available methods: {[m.name for m in cls._solvers]}"
            )
        return solver_class(config)

    @classmethod
    def register(cls, method: SolverMethod, solver_class: Type[GeneralizedEigenSolver]) -> None:
        """Register (or replace) the strategy used for a method."""
        cls._solvers[method] = solver_class

    @classmethod
    def available_methods(cls) -> List[SolverMethod]:
        return list(cls._solvers.keys())
