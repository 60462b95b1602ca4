"""
╔══════════════════════════════════════════════════════════════════════════════╗
║                                                                              ║
║   Tridiagonal representation spectra of singular hyperbolic potentials       ║
║                                                                              ║
║   Package: tra_spectra                                                       ║
║   Purpose: bound states, phase shifts and wavefunctions of                   ║
║            two families of singular hyperbolic potentials                    ║
║                                                                              ║
╚══════════════════════════════════════════════════════════════════════════════╝

📚 CONCEPT: Tridiagonal representation
══════════════════════════════════════

The wavefunction is expanded in a Jacobi basis in which the wave operator
is tridiagonal. The wave equation becomes a three-term recursion for the
expansion coefficients, and in a finite basis the symmetric tridiagonal
pencil T f = eps R f. Its negative eigenvalues converge to the bound-state
energies, which are also known in closed form.

PACKAGE STRUCTURE:
├── tra_spectra/
│   ├── exceptions.py       # error and warning classes
│   ├── models/             # potentials, parameter sets, matrices, results
│   ├── special/            # log-gamma, Jacobi basis, Wilson polynomials
│   ├── solvers/            # generalized eigensolver strategies, nu scan
│   ├── physics/            # matrices, spectra, phase shift, wavefunctions,
│   │                       # Numerov cross-check
│   ├── reporting/          # CSV / JSON / text renderers
│   └── cli/                # tra-spectra command and the verify suite

IMPORTING FROM THIS PACKAGE:
   from tra_spectra import PotentialSpec, PotentialFamily, numeric_spectrum

   spec = PotentialSpec(PotentialFamily.A, v0=10.0, vs=-80.0)
   numeric_spectrum(spec, N=100).numeric
"""

# ==============================================================================
# CONVENIENT IMPORTS
# ==============================================================================

from .exceptions import (
    TraError,
    DomainError,
    PoleError,
    ConstraintViolation,
    RadicandError,
    NoBoundStateError,
    OverflowFailure,
    ConfigError,
    TraWarning,
)

from .models import (
    PotentialFamily,
    PotentialSpec,
    TraParams,
    BRootPolicy,
    NuPolicy,
    SeriesPolicy,
    UnitConvention,
    SolverConfig,
    ShootingConfig,
)

from .solvers import generalized_eig, plateau_scan

from .physics import (
    derive_params,
    build_matrices,
    exact_spectrum,
    exact_levels,
    numeric_spectrum,
    convergence_table,
    phase_shift,
    phase_shift_curve,
    bound_state_psi,
    shoot_spectrum,
)

__all__ = [
    # Errors
    "TraError",
    "DomainError",
    "PoleError",
    "ConstraintViolation",
    "RadicandError",
    "NoBoundStateError",
    "OverflowFailure",
    "ConfigError",
    "TraWarning",
    # Models
    "PotentialFamily",
    "PotentialSpec",
    "TraParams",
    "BRootPolicy",
    "NuPolicy",
    "SeriesPolicy",
    "UnitConvention",
    "SolverConfig",
    "ShootingConfig",
    # Solvers
    "generalized_eig",
    "plateau_scan",
    # Physics
    "derive_params",
    "build_matrices",
    "exact_spectrum",
    "exact_levels",
    "numeric_spectrum",
    "convergence_table",
    "phase_shift",
    "phase_shift_curve",
    "bound_state_psi",
    "shoot_spectrum",
]

# Package version
__version__ = "1.0.0"
