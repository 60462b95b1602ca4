"""
╔══════════════════════════════════════════════════════════════════════════════╗
║  Physics: tra_core.py                                                        ║
║  Potentials, basis parameters and the tridiagonal matrices T and R           ║
╚══════════════════════════════════════════════════════════════════════════════╝

This module contains:
• potential_value - V(r) for both families (half-angle form)
• derive_params - PotentialSpec -> TraParams (mu, nu, A, basis)
• default_nu / plateau_range / finite_series_nu - choices of the free nu
• recursion_coeffs - C_n, D_n of the basis recursion
• build_matrices / build_matrices_b - T and R with T f = eps R f
• map_b_to_a / exchange_map - (mu, nu, A) -> (nu, mu, -A), f_n -> (-1)^n f_n
• diagonal_identity_check / cn_identity_check / f_closure_check /
  general_q_symmetry_defect / pencil_matrix / r_from_pencil - algebraic self-checks

📚 CONCEPT: the three-term recursion
   Expanding psi = sum_n f_n phi_n makes the wave equation a symmetric
   three-term recursion for f_n. Collecting the eps-free part gives T and
   the part multiplying eps gives R. With g_n = n + (mu+nu)/2 (family A):

       T[n,n]   = 2n(n+mu)/(2n+mu+nu) + (nu+1)^2/2 - mu^2/2 + A - (g_n+1)^2 (C_n+1)
       T[n,n+1] = -(g_n+1)^2 D_n
       R[n,n]   = C_n + 1
       R[n,n+1] = D_n

   Only the diagonal and one off-diagonal are stored, so symmetry is exact.

All quantities are dimensionless: eps = 2E/lambda^2, A = 2V_s/lambda^2
(family A) or -2V_-/lambda^2 (family B).
"""

import logging
import math
from dataclasses import replace
from typing import Optional, Tuple

import numpy as np

from ..exceptions import ConstraintViolation, DomainError, PoleError
from ..models import (
    BasisSpec,
    BRootPolicy,
    JacobiRegime,
    PotentialFamily,
    PotentialSpec,
    SymTridiagonal,
    TraParams,
)
from ..special.jacobi_basis import jacobi_recurrence_coeffs

logger = logging.getLogger(__name__)


# ==============================================================================
# POTENTIALS
# ==============================================================================

def potential_value(spec: PotentialSpec, r):
    """
    V(r) with hbar = m = 1, half-angle form:

        A: V0/sinh^2(lr) + (V+/2)/cosh^2(lr/2)
        B: V0/sinh^2(lr) - (V-/2)/sinh^2(lr/2)

    Accepts a scalar or an array; raises DomainError for r <= 0.
    """
    scalar = np.isscalar(r)
    r = np.atleast_1d(np.asarray(r, dtype=float))
    if np.any(r <= 0.0):
        raise DomainError("the potential is singular at r = 0; r must be positive")
    lam = spec.lam
    value = spec.v0_energy / np.sinh(lam * r) ** 2
    if spec.family is PotentialFamily.A:
        value = value + 0.5 * spec.vs_energy / np.cosh(lam * r / 2.0) ** 2
    else:
        value = value - 0.5 * spec.vs_energy / np.sinh(lam * r / 2.0) ** 2
    return float(value[0]) if scalar else value


def potential_value_cosh_form(spec: PotentialSpec, r):
    """
    The same potential written with cosh(lr) +/- 1:

        A: V0/sinh^2(lr) + V+/(cosh(lr) + 1)
        B: V0/sinh^2(lr) - V-/(cosh(lr) - 1)
    """
    scalar = np.isscalar(r)
    r = np.atleast_1d(np.asarray(r, dtype=float))
    if np.any(r <= 0.0):
        raise DomainError("the potential is singular at r = 0; r must be positive")
    x = np.cosh(spec.lam * r)
    value = spec.v0_energy / (x ** 2 - 1.0)
    if spec.family is PotentialFamily.A:
        value = value + spec.vs_energy / (x + 1.0)
    else:
        value = value - spec.vs_energy / (x - 1.0)
    return float(value[0]) if scalar else value


# ==============================================================================
# BASIS PARAMETERS
# ==============================================================================

def default_nu(mu: float, N: int) -> float:
    """Middle of the stability plateau, nu = -2N - mu - 7/2."""
    return -2.0 * N - mu - 3.5


def plateau_range(mu: float, N: int) -> Tuple[float, float]:
    """The nu-interval [-2N - mu - 11/2, -2N - mu - 3/2] scanned for stability."""
    return -2.0 * N - mu - 5.5, -2.0 * N - mu - 1.5


def finite_series_nu(mu: float, A: float) -> float:
    """
    nu = -1 - sqrt(mu^2 - 2A), the basis in which every bound state is a
    finite sum of k+1 terms.

    Here (g_k + 1)^2 + eps_k = 0 at each exact level, so the coupling between
    f_k and f_{k+1} vanishes and the recursion stops.

    Raises:
        DomainError: mu^2 - 2A < 0 (no real z, no bound state)
    """
    radicand = mu * mu - 2.0 * A
    if radicand < 0.0:
        raise DomainError(f"mu^2 - 2A = {radicand!r} < 0; z is imaginary")
    return -1.0 - math.sqrt(radicand)


def largest_basis_size(mu: float, nu: float) -> int:
    """Largest N with mu + nu < -2N - 1, or -1 when even N = 0 fails."""
    return int(math.ceil((-1.0 - mu - nu) / 2.0)) - 1


def _make_params(mu: float, nu: float, A: float, N: int, family: PotentialFamily, lam: float) -> TraParams:
    basis = BasisSpec.for_family(JacobiRegime(mu, nu, N), family)
    return TraParams(mu=mu, nu=nu, A=A, N=N, family=family, basis=basis, lam=lam)


def derive_params(
    spec: PotentialSpec,
    N: int,
    nu_or_mu_free: Optional[float] = None,
    b_root_policy: BRootPolicy = BRootPolicy.NEGATIVE_ROOT,
) -> TraParams:
    """
    Derive the basis parameters of a potential.

    Family A: mu = +sqrt(1/4 + 2V0/lambda^2), A = 2V+/lambda^2 and the free
    parameter is nu (default: plateau middle).

    Family B, NEGATIVE_ROOT: nu = -sqrt(1/4 + 2V0/lambda^2), A = -2V-/lambda^2
    and the free parameter is mu in (-1, -2N-1-nu) (default: middle of that
    interval). This interval is empty unless nu < -2N.

    Family B, FREE_NU: the identical family-A potential (V0 - 2V-, V+ = -V-)
    is used instead, with nu free.

    Raises:
        ConstraintViolation: reality fails or a basis inequality is violated
    """
    if N < 0:
        raise ConstraintViolation("N >= 0", f"N = {N}")
    spec.check_reality()

    if spec.family is PotentialFamily.A:
        mu = math.sqrt(0.25 + spec.v0)
        nu = default_nu(mu, N) if nu_or_mu_free is None else float(nu_or_mu_free)
        params = _make_params(mu, nu, spec.vs, N, PotentialFamily.A, spec.lam)

    elif b_root_policy is BRootPolicy.FREE_NU:
        logger.debug("family B via the equivalent family-A potential (free nu)")
        return derive_params(spec.equivalent_family_a(), N, nu_or_mu_free)

    else:
        nu = -math.sqrt(0.25 + spec.v0)
        upper = -2.0 * N - 1.0 - nu
        if not upper > -1.0:
            raise ConstraintViolation(
                "-1 < mu < -2N - 1 - nu",
                f"interval is empty for nu = {nu!r}, N = {N}; "
                "use the free-nu policy for this basis size",
            )
        mu = 0.5 * (upper - 1.0) if nu_or_mu_free is None else float(nu_or_mu_free)
        params = _make_params(mu, nu, -spec.vs, N, PotentialFamily.B, spec.lam)

    params.check()
    logger.debug("derived mu=%.12g nu=%.12g A=%.12g N=%d (%s)",
                 params.mu, params.nu, params.A, N, params.family.value)
    return params


def recursion_coeffs(p: TraParams, n: int) -> Tuple[float, float]:
    """(C_n, D_n) for 0 <= n <= N; D_n < 0 throughout the regime."""
    if not 0 <= n <= p.N:
        raise DomainError(f"n = {n} outside 0..N = {p.N}")
    return jacobi_recurrence_coeffs(n, p.mu, p.nu)


def _coefficient_arrays(p: TraParams):
    N = p.N
    c = np.empty(N + 1)
    d = np.empty(N)
    for n in range(N + 1):
        t = 2 * n + p.mu + p.nu
        c[n] = (p.nu ** 2 - p.mu ** 2) / (t * (t + 2.0))
    for n in range(N):
        d[n] = recursion_coeffs(p, n)[1]
    n_idx = np.arange(N + 1, dtype=float)
    g = n_idx + 0.5 * (p.mu + p.nu)
    return n_idx, g, c, d


# ==============================================================================
# MATRICES
# ==============================================================================

def build_matrices(p: TraParams) -> Tuple[SymTridiagonal, SymTridiagonal]:
    """
    T and R of the family-A recursion, size N+1.

    Family-B parameters must first go through map_b_to_a (or use
    build_matrices_b for the direct form).
    """
    if p.family is not PotentialFamily.A:
        raise DomainError("build_matrices takes family-A parameters; map family B first")
    p.check()
    n, g, c, d = _coefficient_arrays(p)
    t = 2.0 * n + p.mu + p.nu

    kinetic = 2.0 * n * (n + p.mu) / t
    t_diag = kinetic + (p.nu + 1.0) ** 2 / 2.0 - p.mu ** 2 / 2.0 + p.A - (g + 1.0) ** 2 * (c + 1.0)
    t_off = -((g[:-1] + 1.0) ** 2) * d
    return SymTridiagonal(t_diag, t_off), SymTridiagonal(c + 1.0, d.copy())


def build_matrices_b(p_B: TraParams) -> Tuple[SymTridiagonal, SymTridiagonal]:
    """
    T and R of the family-B recursion, built directly:

        T[n,n]   = -[2n(n+nu)/(2n+mu+nu) + (g_n+1)^2 (C_n-1) + (mu+1)^2/2 - nu^2/2 - A]
        T[n,n+1] = -(g_n+1)^2 D_n
        R        = (C_n - 1, D_n)

    Used to cross-check the exchange map.
    """
    if p_B.family is not PotentialFamily.B or p_B.mapped_from_b:
        raise DomainError("build_matrices_b takes unmapped family-B parameters")
    p_B.check()
    n, g, c, d = _coefficient_arrays(p_B)
    t = 2.0 * n + p_B.mu + p_B.nu

    t_diag = -(
        2.0 * n * (n + p_B.nu) / t
        + (g + 1.0) ** 2 * (c - 1.0)
        + (p_B.mu + 1.0) ** 2 / 2.0
        - p_B.nu ** 2 / 2.0
        - p_B.A
    )
    t_off = -((g[:-1] + 1.0) ** 2) * d
    return SymTridiagonal(t_diag, t_off), SymTridiagonal(c - 1.0, d.copy())


# ==============================================================================
# EXCHANGE MAP
# ==============================================================================

def exchange_map(p: TraParams) -> TraParams:
    """
    (mu, nu, A) -> (nu, mu, -A) with the family flipped.

    An involution on (mu, nu, A). The image of a family-B set is flagged
    mapped_from_b: its mu need not exceed -1, so its regime is not checked.
    """
    family = PotentialFamily.A if p.family is PotentialFamily.B else PotentialFamily.B
    mapped = _make_params(p.nu, p.mu, -p.A, p.N, family, p.lam)
    return replace(mapped, mapped_from_b=(p.family is PotentialFamily.B))


def map_b_to_a(p_B: TraParams) -> TraParams:
    """Family-B parameters -> the family-A set with the same eigenvalues."""
    if p_B.family is not PotentialFamily.B:
        raise DomainError("map_b_to_a takes family-B parameters")
    return exchange_map(p_B)


def alternate_signs(vector: np.ndarray) -> np.ndarray:
    """f_n -> (-1)^n f_n (rows of a vector or of a matrix of column vectors)."""
    vector = np.asarray(vector, dtype=float)
    signs = np.where(np.arange(vector.shape[0]) % 2 == 0, 1.0, -1.0)
    return vector * (signs if vector.ndim == 1 else signs[:, None])


# ==============================================================================
# ALGEBRAIC SELF-CHECKS
# ==============================================================================

def _check_poles(t: float, forbidden, what: str) -> None:
    for k in forbidden:
        if t == k:
            raise PoleError(f"{what}: 2n+mu+nu = {t:g} makes a denominator vanish")


def diagonal_identity_check(n: int, mu: float, nu: float, chi: float, scaled: bool = False) -> float:
    """
    |LHS - RHS| of

        (n+nu+1)(n+mu+nu+1)[(t+2)^2+chi]/((t+1)(t+2)) + n(n+mu)[t^2+chi]/(t(t+1))
          = -4n(n+mu)/t + 1/2 [1 + (nu^2-mu^2)/(t(t+2))] [(t+2)^2+chi],

    t = 2n+mu+nu. scaled=True divides by max(1, largest term).
    """
    t = 2 * n + mu + nu
    _check_poles(t, (0.0, -1.0, -2.0), "diagonal identity")
    left = (
        (n + nu + 1) * (n + mu + nu + 1) * ((t + 2.0) ** 2 + chi) / ((t + 1.0) * (t + 2.0))
        + n * (n + mu) * (t ** 2 + chi) / (t * (t + 1.0))
    )
    right_terms = (
        -4.0 * n * (n + mu) / t,
        0.5 * (1.0 + (nu ** 2 - mu ** 2) / (t * (t + 2.0))) * ((t + 2.0) ** 2 + chi),
    )
    residual = abs(left - math.fsum(right_terms))
    if scaled:
        residual /= max(1.0, abs(left), *(abs(term) for term in right_terms))
    return residual


def cn_identity_check(n: int, mu: float, nu: float, scaled: bool = False) -> float:
    """
    |LHS - RHS| of

        2(nu-mu) n(n+mu+nu+1) / (t(t+2)) = -2n(n+mu)/t + n(C_n + 1),

    t = 2n+mu+nu.
    """
    t = 2 * n + mu + nu
    _check_poles(t, (0.0, -2.0), "C_n identity")
    left = 2.0 * (nu - mu) * n * (n + mu + nu + 1) / (t * (t + 2.0))
    c_n = (nu ** 2 - mu ** 2) / (t * (t + 2.0))
    right_terms = (-2.0 * n * (n + mu) / t, n * (c_n + 1.0))
    residual = abs(left - math.fsum(right_terms))
    if scaled:
        residual /= max(1.0, abs(left), *(abs(term) for term in right_terms))
    return residual


def f_coefficient(n: int, mu: float, nu: float, eps: float, q: float = 1.0) -> float:
    """F_n = eps + n(n+mu+nu+1) + (mu+nu+1+q)^2 / 4."""
    return eps + n * (n + mu + nu + 1) + 0.25 * (mu + nu + 1.0 + q) ** 2


def f_closure_check(n: int, mu: float, nu: float, eps: float) -> float:
    """
    Largest deviation between the q = 1 neighbour coefficients and their
    closed forms:

        F_n + n              = eps + (g_n + 1)^2
        F_n - (n+mu+nu+1)    = eps + g_n^2

    F_n itself equals eps + (g_n + 1)^2 - n, not eps + (g_n + 1)^2.
    """
    g = n + 0.5 * (mu + nu)
    f_n = f_coefficient(n, mu, nu, eps)
    upper = (f_n + n) - (eps + (g + 1.0) ** 2)
    lower = (f_n - (n + mu + nu + 1)) - (eps + g ** 2)
    return max(abs(upper), abs(lower))


def general_q_symmetry_defect(n: int, mu: float, nu: float, q: float, eps: float = 0.0) -> float:
    """
    (coefficient of phi_{n+1} in row n) - (coefficient of phi_n in row n+1)
    of the general-q relation, i.e. (q - 1)(2n+mu+nu+2) D_n. Zero only at q = 1.
    """
    _, d_n = jacobi_recurrence_coeffs(n, mu, nu)
    forward = (f_coefficient(n, mu, nu, eps, q) + q * n) * d_n
    backward = (f_coefficient(n + 1, mu, nu, eps, q) - q * (n + 1 + mu + nu + 1)) * d_n
    return forward - backward


def pencil_matrix(p: TraParams, eps: float) -> SymTridiagonal:
    """
    M(eps) assembled row by row from the q = 1 relation:

        M[n,n]   = -2n(n+mu)/(2n+mu+nu) + [(g_n+1)^2 + eps](C_n+1) - (nu+1)^2/2 + mu^2/2 - A
        M[n,n+1] = [(g_n+1)^2 + eps] D_n

    so that M(eps) = -T + eps R.
    """
    n, g, c, d = _coefficient_arrays(p)
    t = 2.0 * n + p.mu + p.nu
    diag = (
        -2.0 * n * (n + p.mu) / t
        + ((g + 1.0) ** 2 + eps) * (c + 1.0)
        - (p.nu + 1.0) ** 2 / 2.0
        + p.mu ** 2 / 2.0
        - p.A
    )
    off = ((g[:-1] + 1.0) ** 2 + eps) * d
    return SymTridiagonal(diag, off)


def r_from_pencil(p: TraParams) -> SymTridiagonal:
    """R re-derived as the eps-coefficient of M(eps): M(1) - M(0)."""
    m1 = pencil_matrix(p, 1.0)
    m0 = pencil_matrix(p, 0.0)
    return SymTridiagonal(m1.diag - m0.diag, m1.offdiag - m0.offdiag)


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
]
