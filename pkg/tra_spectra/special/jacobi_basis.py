"""
╔══════════════════════════════════════════════════════════════════════════════╗
║  Special: jacobi_basis.py                                                    ║
║  Jacobi polynomials on x >= 1 and the square-integrable basis built on them  ║
╚══════════════════════════════════════════════════════════════════════════════╝

This module contains:
• jacobi_polynomials / jacobi_eval / jacobi_values - forward three-term recursion
• jacobi_series - the 2F1 form, kept as an independent oracle
• jacobi_norm_sq (+ the sine and reflected forms) - squared weighted norms
• jacobi_recurrence_coeffs / orthonormal_jacobi - the orthonormal recursion
• basis_eval / basis_values - phi_n(x) = c_n (x-1)^alpha (x+1)^beta P_n(x)
• jacobi_derivative / jacobi_ode_residual / quadrature_gram - property helpers

📚 CONCEPT: the finite family
   With mu > -1 and mu + nu < -2N - 1 the weight (x-1)^mu (x+1)^nu decays
   fast enough on [1, inf) for P_0 .. P_N only. Every public entry point
   therefore checks n <= N.

📚 CONCEPT: overflow-safe evaluation
   For N ~ 100 the norms contain Gamma(200+) and P_n(x) grows like x^n, so
   both are carried in log space. The orthonormal recursion
       x p_n = C_n p_n + D_n p_{n+1} + D_{n-1} p_{n-1}
   runs with a per-point log scale that absorbs large magnitudes.
"""

import logging
import math
from typing import Tuple, Union

import numpy as np
from scipy import integrate
from scipy.special import gammaln, gammasgn

from .specfun import hypergeometric_pfq_terminating, pochhammer
from ..exceptions import DomainError, PoleError, ConstraintViolation, RadicandError
from ..models import BasisSpec, JacobiRegime

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

_RESCALE_ABOVE = 1e150


# ==============================================================================
# HELPERS
# ==============================================================================

def _check_degree(n: int, regime: JacobiRegime) -> None:
    if not 0 <= n <= regime.N:
        raise DomainError(f"degree n = {n} outside 0..N = {regime.N}")


def _check_x(x: np.ndarray) -> None:
    if np.any(~np.isfinite(x)) or np.any(x < 1.0):
        raise DomainError(f"x must be finite and >= 1, got min {np.min(x)!r}")


def _signed_log_gamma(value: float) -> Tuple[float, float]:
    """(ln|Gamma(value)|, sign Gamma(value))."""
    if value <= 0.0 and value == math.floor(value):
        raise PoleError(f"Gamma has a pole at {value:g}")
    return float(gammaln(value)), float(gammasgn(value))


# ==============================================================================
# POLYNOMIAL VALUES
# ==============================================================================

def jacobi_polynomials(n_max: int, mu: float, nu: float, x: ArrayLike) -> np.ndarray:
    """
    P_0 .. P_{n_max} of parameters (mu, nu) at every x by the recursion

        x P_n = C_n P_n + a_n P_{n-1} + b_n P_{n+1}

    No regime or domain restrictions: this is the raw recursion and also
    serves reflected arguments (x < -1, swapped parameters).

    Returns:
        array of shape (n_max + 1, len(x))
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    values = np.empty((n_max + 1, x.size))
    values[0] = 1.0
    if n_max == 0:
        return values
    values[1] = ((mu + nu + 2.0) * x + mu - nu) / 2.0

    for n in range(1, n_max):
        t = 2 * n + mu + nu
        if t * (t + 1.0) * (t + 2.0) == 0.0:
            raise PoleError(f"Jacobi recursion denominator vanishes at n = {n}")
        c_n = (nu ** 2 - mu ** 2) / (t * (t + 2.0))
        a_n = 2.0 * (n + mu) * (n + nu) / (t * (t + 1.0))
        b_n = 2.0 * (n + 1) * (n + mu + nu + 1) / ((t + 1.0) * (t + 2.0))
        values[n + 1] = ((x - c_n) * values[n] - a_n * values[n - 1]) / b_n
    return values


def jacobi_values(regime: JacobiRegime, x: ArrayLike) -> np.ndarray:
    """P_0 .. P_N at every x >= 1, shape (N+1, len(x))."""
    regime.check()
    x = np.atleast_1d(np.asarray(x, dtype=float))
    _check_x(x)
    return jacobi_polynomials(regime.N, regime.mu, regime.nu, x)


def jacobi_eval(n: int, regime: JacobiRegime, x: ArrayLike) -> ArrayLike:
    """
    P_n^(mu,nu)(x) by forward recursion seeded with P_0 = 1 and
    P_1 = [(mu+nu+2) x + mu - nu] / 2.

    Raises:
        DomainError: x < 1 or n outside 0..N
        ConstraintViolation: regime inequalities do not hold

    Example:
        >>> jacobi_eval(1, JacobiRegime(0.5, -12.0, 2), 2.0)
        -3.25
    """
    regime.check()
    _check_degree(n, regime)
    scalar = np.isscalar(x)
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    _check_x(xs)
    values = jacobi_polynomials(n, regime.mu, regime.nu, xs)[n]
    return float(values[0]) if scalar else values


def jacobi_series(n: int, regime: JacobiRegime, x: float) -> float:
    """
    P_n from its terminating 2F1:

        P_n(x) = (mu+1)_n / n! * 2F1(-n, n+mu+nu+1; mu+1 | (1-x)/2)
    """
    _check_degree(n, regime)
    mu, nu = regime.mu, regime.nu
    prefactor = pochhammer(mu + 1.0, n) / math.factorial(n)
    series = hypergeometric_pfq_terminating(n, [n + mu + nu + 1.0], [mu + 1.0], (1.0 - x) / 2.0)
    return prefactor * series.real


# ==============================================================================
# NORMS
# ==============================================================================

def log_jacobi_norm_sq(n: int, regime: JacobiRegime) -> float:
    """
    ln h_n with

        h_n = -2^s / (2n+s) * Gamma(n+mu+1) Gamma(-n-mu-nu) / (n! Gamma(-n-nu)),
        s = mu + nu + 1.

    In the regime every Gamma argument is positive and 2n+s < 0, so this
    form is manifestly positive and free of the sine ratio, which is 0/0
    for integer nu.
    """
    regime.check()
    _check_degree(n, regime)
    mu, nu = regime.mu, regime.nu
    s = mu + nu + 1.0
    log_abs = 0.0
    sign = -1.0 if 2 * n + s > 0 else 1.0
    log_abs += s * math.log(2.0) - math.log(abs(2 * n + s))
    for argument, power in ((n + mu + 1.0, 1), (-n - mu - nu, 1), (-n - nu, -1)):
        log_gamma, gamma_sign = _signed_log_gamma(argument)
        log_abs += power * log_gamma
        sign *= gamma_sign
    log_abs -= math.lgamma(n + 1.0)
    if sign <= 0.0:
        raise ConstraintViolation(
            "h_n > 0", f"norm of P_{n} is non-positive for mu = {mu!r}, nu = {nu!r}"
        )
    return log_abs


def jacobi_norm_sq(n: int, regime: JacobiRegime) -> float:
    """
    Squared weighted norm of P_n on [1, inf):

        int_1^inf (x-1)^mu (x+1)^nu P_n P_m dx = h_n delta_nm.

    May overflow to inf for large N; use log_jacobi_norm_sq there.
    """
    return math.exp(log_jacobi_norm_sq(n, regime))


def _norm_from_parts(parts, sign: float) -> float:
    log_abs = 0.0
    for argument, power in parts:
        log_gamma, gamma_sign = _signed_log_gamma(argument)
        log_abs += power * log_gamma
        if power % 2:
            sign *= gamma_sign
    return sign * math.exp(log_abs)


def jacobi_norm_sq_sine(n: int, regime: JacobiRegime) -> float:
    """
    The sine form:
        2^s/(2n+s) Gamma(n+mu+1) Gamma(n+nu+1) / (n! Gamma(n+mu+nu+1))
            * sin(pi nu) / sin(pi (mu+nu+1))

    Raises PoleError for integer nu, where the form is 0/0.
    """
    _check_degree(n, regime)
    mu, nu = regime.mu, regime.nu
    s = mu + nu + 1.0
    ratio = math.sin(math.pi * nu) / math.sin(math.pi * s)
    value = _norm_from_parts(
        [(n + mu + 1.0, 1), (n + nu + 1.0, 1), (n + mu + nu + 1.0, -1), (n + 1.0, -1)],
        1.0,
    )
    return 2.0 ** s / (2 * n + s) * value * ratio


def jacobi_norm_sq_reflected(n: int, regime: JacobiRegime) -> float:
    """
    The reflected form:
        (-1)^(n+1) 2^s/(2n+s) Gamma(n+mu+1) Gamma(n+nu+1) Gamma(-n-mu-nu)
            / (n! Gamma(-nu) Gamma(nu+1))
    """
    _check_degree(n, regime)
    mu, nu = regime.mu, regime.nu
    s = mu + nu + 1.0
    value = _norm_from_parts(
        [
            (n + mu + 1.0, 1),
            (n + nu + 1.0, 1),
            (-n - mu - nu, 1),
            (n + 1.0, -1),
            (-nu, -1),
            (nu + 1.0, -1),
        ],
        (-1.0) ** (n + 1),
    )
    return 2.0 ** s / (2 * n + s) * value


# ==============================================================================
# ORTHONORMAL RECURSION
# ==============================================================================

def jacobi_recurrence_coeffs(n: int, mu: float, nu: float) -> Tuple[float, float]:
    """
    (C_n, D_n) of the orthonormal recursion:

        C_n = (nu^2 - mu^2) / ((2n+mu+nu)(2n+mu+nu+2))
        D_n = 2/(2n+mu+nu+2) * sqrt((n+1)(n+mu+1)(n+nu+1)(n+mu+nu+1)
                                    / ((2n+mu+nu+1)(2n+mu+nu+3)))

    Raises:
        PoleError: a denominator vanishes
        RadicandError: the D_n radicand is negative
    """
    t = 2 * n + mu + nu
    if t * (t + 1.0) * (t + 2.0) * (t + 3.0) == 0.0:
        raise PoleError(f"2n+mu+nu = {t!r} makes a recursion denominator vanish (n = {n})")
    c_n = (nu ** 2 - mu ** 2) / (t * (t + 2.0))
    radicand = (n + 1) * (n + mu + 1) * (n + nu + 1) * (n + mu + nu + 1) / ((t + 1.0) * (t + 3.0))
    if radicand < 0.0:
        raise RadicandError("D_n", n, radicand)
    d_n = 2.0 / (t + 2.0) * math.sqrt(radicand)
    return c_n, d_n


def orthonormal_jacobi(regime: JacobiRegime, x: ArrayLike) -> Tuple[np.ndarray, np.ndarray]:
    """
    p_n = P_n / sqrt(h_n) for n = 0..N as (values, log_scale):

        p_n(x_j) = values[n, j] * exp(log_scale[j])

    Magnitudes above 1e150 are folded into log_scale as the recursion runs.
    """
    regime.check()
    x = np.atleast_1d(np.asarray(x, dtype=float))
    _check_x(x)
    N, mu, nu = regime.N, regime.mu, regime.nu

    values = np.zeros((N + 1, x.size))
    values[0] = 1.0
    log_scale = np.full(x.size, -0.5 * log_jacobi_norm_sq(0, regime))

    previous_d = 0.0
    rescales = 0
    for n in range(N):
        c_n, d_n = jacobi_recurrence_coeffs(n, mu, nu)
        lower = values[n - 1] if n > 0 else 0.0
        values[n + 1] = ((x - c_n) * values[n] - previous_d * lower) / d_n
        previous_d = d_n

        magnitude = np.abs(values[n + 1])
        large = magnitude > _RESCALE_ABOVE
        if np.any(large):
            values[: n + 2, large] /= magnitude[large]
            log_scale[large] += np.log(magnitude[large])
            rescales += 1

    if rescales:
        logger.debug("orthonormal Jacobi recursion rescaled %d times (N=%d)", rescales, N)
    return values, log_scale


# ==============================================================================
# BASIS FUNCTIONS
# ==============================================================================

def basis_values(spec: BasisSpec, x: ArrayLike) -> np.ndarray:
    """
    phi_0 .. phi_N at every x >= 1, shape (N+1, len(x)), with
    c_n = 1/sqrt(h_n) so that phi_n = (x-1)^alpha (x+1)^beta p_n.
    phi_n(1) = 0 since alpha > 0.
    """
    spec.check()
    x = np.atleast_1d(np.asarray(x, dtype=float))
    values, log_scale = orthonormal_jacobi(spec.regime, x)
    with np.errstate(divide="ignore"):
        log_prefactor = spec.alpha * np.log(x - 1.0) + spec.beta * np.log(x + 1.0)
    return values * np.exp(log_prefactor + log_scale)


def basis_eval(n: int, spec: BasisSpec, x: ArrayLike) -> ArrayLike:
    """phi_n(x) = c_n (x-1)^alpha (x+1)^beta P_n^(mu,nu)(x)."""
    _check_degree(n, spec.regime)
    scalar = np.isscalar(x)
    values = basis_values(spec, x)[n]
    return float(values[0]) if scalar else values


# ==============================================================================
# PROPERTY HELPERS
# ==============================================================================

def jacobi_derivative(n: int, regime: JacobiRegime, x: ArrayLike) -> np.ndarray:
    """
    P_n'(x) from the differential relation

        (x^2-1) P_n' = 2(n+mu+nu+1) [ (nu-mu) n / ((2n+mu+nu)(2n+mu+nu+2)) P_n
                                      - (n+mu)(n+nu) / ((2n+mu+nu)(2n+mu+nu+1)) P_{n-1}
                                      + n(n+1) / ((2n+mu+nu+1)(2n+mu+nu+2)) P_{n+1} ]

    for x > 1.
    """
    _check_degree(n, regime)
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x <= 1.0):
        raise DomainError("the differential relation is used for x > 1 only")
    mu, nu = regime.mu, regime.nu
    if n == 0:
        return np.zeros_like(x)
    polys = jacobi_polynomials(n + 1, mu, nu, x)
    t = 2 * n + mu + nu
    bracket = (
        (nu - mu) * n / (t * (t + 2.0)) * polys[n]
        - (n + mu) * (n + nu) / (t * (t + 1.0)) * polys[n - 1]
        + n * (n + 1) / ((t + 1.0) * (t + 2.0)) * polys[n + 1]
    )
    return 2.0 * (n + mu + nu + 1) * bracket / (x ** 2 - 1.0)


def jacobi_ode_residual(n: int, regime: JacobiRegime, x: ArrayLike, h: float = 1e-3) -> np.ndarray:
    """
    Relative residual of

        (x^2-1) P'' + [(mu+nu+2) x + mu - nu] P' - n(n+mu+nu+1) P = 0

    with P' and P'' from five-point central differences of step h,
    scaled by the largest of the three terms.
    """
    _check_degree(n, regime)
    x = np.atleast_1d(np.asarray(x, dtype=float))
    mu, nu = regime.mu, regime.nu
    offsets = np.array([-2.0, -1.0, 0.0, 1.0, 2.0]) * h
    samples = np.stack([jacobi_polynomials(n, mu, nu, x + o)[n] for o in offsets])
    p = samples[2]
    dp = (samples[0] - 8.0 * samples[1] + 8.0 * samples[3] - samples[4]) / (12.0 * h)
    d2p = (-samples[0] + 16.0 * samples[1] - 30.0 * samples[2] + 16.0 * samples[3] - samples[4]) / (12.0 * h ** 2)

    terms = np.stack([
        (x ** 2 - 1.0) * d2p,
        ((mu + nu + 2.0) * x + mu - nu) * dp,
        -n * (n + mu + nu + 1.0) * p,
    ])
    scale = np.maximum(np.max(np.abs(terms), axis=0), np.finfo(float).tiny)
    return np.abs(terms.sum(axis=0)) / scale


def quadrature_gram(regime: JacobiRegime, rel_tol: float = 1e-12) -> np.ndarray:
    """
    G[n, m] = int_1^inf (x-1)^mu (x+1)^nu P_n P_m dx / sqrt(h_n h_m)
    by adaptive quadrature after x = cosh t.

    The upper limit is set where the slowest-decaying integrand has fallen
    below 1e-16 of its scale, capped where cosh t would overflow.
    """
    regime.check()
    N, mu, nu = regime.N, regime.mu, regime.nu
    norms = np.array([log_jacobi_norm_sq(n, regime) for n in range(N + 1)])
    log2 = math.log(2.0)

    def log_weight(t: float) -> float:
        # (cosh t - 1) = 2 sinh^2(t/2), (cosh t + 1) = 2 cosh^2(t/2)
        return (
            mu * (log2 + 2.0 * math.log(math.sinh(t / 2.0)))
            + nu * (log2 + 2.0 * math.log(math.cosh(t / 2.0)))
            + math.log(math.sinh(t))
        )

    gram = np.empty((N + 1, N + 1))
    for n in range(N + 1):
        for m in range(n, N + 1):
            decay = -(mu + nu + n + m + 1.0)
            t_max = min(700.0, max(10.0, 40.0 / decay))

            def integrand(t: float, n=n, m=m) -> float:
                if t == 0.0:
                    return 0.0
                polys = jacobi_polynomials(max(n, m), mu, nu, math.cosh(t))
                return math.exp(log_weight(t)) * polys[n, 0] * polys[m, 0]

            value, _ = integrate.quad(integrand, 0.0, t_max, limit=400, epsabs=0.0, epsrel=rel_tol)
            gram[n, m] = gram[m, n] = value / math.exp(0.5 * (norms[n] + norms[m]))
    return gram


__all__ = [
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
]
