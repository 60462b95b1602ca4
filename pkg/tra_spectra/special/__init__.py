"""
Special subpackage - the special functions behind the TRA matrices.

• specfun - Lanczos log-Gamma, Gamma phases, Pochhammer symbols, terminating pFq
• jacobi_basis - finite Jacobi polynomials on x >= 1 and the basis functions
• wilson - the nonconventional Wilson polynomial and the bound-state condition
"""

from .specfun import (
    ln_gamma,
    arg_gamma,
    gamma,
    pochhammer,
    log_pochhammer,
    hypergeometric_pfq_terminating,
    hyp4f3_terminating,
)
from .jacobi_basis import (
    jacobi_polynomials,
    jacobi_values,
    jacobi_eval,
    jacobi_series,
    log_jacobi_norm_sq,
    jacobi_norm_sq,
    jacobi_norm_sq_sine,
    jacobi_norm_sq_reflected,
    jacobi_recurrence_coeffs,
    orthonormal_jacobi,
    basis_values,
    basis_eval,
    jacobi_derivative,
    jacobi_ode_residual,
    quadrature_gram,
)
from .wilson import (
    params_from_physics,
    wilson_coefficients,
    wilson_tilde_recursion,
    wilson_conventional_recursion,
    prefactor_sign_map,
    wilson_prefactor,
    wilson_tilde_hypergeom,
    wilson_tilde_values,
    highest_level,
    k_max_from_wilson,
    bound_state_condition,
    bound_state_energies,
)

__all__ = [
    "ln_gamma",
    "arg_gamma",
    "gamma",
    "pochhammer",
    "log_pochhammer",
    "hypergeometric_pfq_terminating",
    "hyp4f3_terminating",
    "jacobi_polynomials",
    "jacobi_values",
    "jacobi_eval",
    "jacobi_series",
    "log_jacobi_norm_sq",
    "jacobi_norm_sq",
    "jacobi_norm_sq_sine",
    "jacobi_norm_sq_reflected",
    "jacobi_recurrence_coeffs",
    "orthonormal_jacobi",
    "basis_values",
    "basis_eval",
    "jacobi_derivative",
    "jacobi_ode_residual",
    "quadrature_gram",
    "params_from_physics",
    "wilson_coefficients",
    "wilson_tilde_recursion",
    "wilson_conventional_recursion",
    "prefactor_sign_map",
    "wilson_prefactor",
    "wilson_tilde_hypergeom",
    "wilson_tilde_values",
    "highest_level",
    "k_max_from_wilson",
    "bound_state_condition",
    "bound_state_energies",
]
