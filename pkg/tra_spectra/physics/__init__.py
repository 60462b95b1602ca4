"""
Physics subpackage - from a potential to spectra, phase shifts and wavefunctions.

• tra_core - potentials, basis parameters, the matrices T and R, the exchange map
• spectra - exact and numerical bound-state levels, the convergence table
• scattering - the continuum phase shift
• wavefunction - bound-state wavefunctions and their residual checks
• numerov_oracle - independent shooting solver used for verification
"""

from .tra_core import (
    potential_value,
    potential_value_cosh_form,
    default_nu,
    plateau_range,
    finite_series_nu,
    largest_basis_size,
    derive_params,
    recursion_coeffs,
    build_matrices,
    build_matrices_b,
    exchange_map,
    map_b_to_a,
    alternate_signs,
    diagonal_identity_check,
    cn_identity_check,
    f_coefficient,
    f_closure_check,
    general_q_symmetry_defect,
    pencil_matrix,
    r_from_pencil,
)
from .spectra import (
    REFERENCE_SPEC,
    REFERENCE_EXACT,
    REFERENCE_COLUMNS,
    exact_spectrum,
    exact_levels,
    numeric_spectrum,
    convergence_table,
)
from .scattering import phase_shift, phase_shift_for, phase_shift_curve
from .wavefunction import (
    series_prefactor,
    printed_prefactor,
    bound_state_psi,
    bound_states,
    schrodinger_residual,
    truncation_report,
    count_nodes,
    normalize,
    overlap_matrix,
)
from .numerov_oracle import numerov_integrate, scan_mismatch, shoot_spectrum, step_halving_study

__all__ = [
    "potential_value",
    "potential_value_cosh_form",
    "default_nu",
    "plateau_range",
    "finite_series_nu",
    "largest_basis_size",
    "derive_params",
    "recursion_coeffs",
    "build_matrices",
    "build_matrices_b",
    "exchange_map",
    "map_b_to_a",
    "alternate_signs",
    "diagonal_identity_check",
    "cn_identity_check",
    "f_coefficient",
    "f_closure_check",
    "general_q_symmetry_defect",
    "pencil_matrix",
    "r_from_pencil",
    "REFERENCE_SPEC",
    "REFERENCE_EXACT",
    "REFERENCE_COLUMNS",
    "exact_spectrum",
    "exact_levels",
    "numeric_spectrum",
    "convergence_table",
    "phase_shift",
    "phase_shift_for",
    "phase_shift_curve",
    "series_prefactor",
    "printed_prefactor",
    "bound_state_psi",
    "bound_states",
    "schrodinger_residual",
    "truncation_report",
    "count_nodes",
    "normalize",
    "overlap_matrix",
    "numerov_integrate",
    "scan_mismatch",
    "shoot_spectrum",
    "step_halving_study",
]
