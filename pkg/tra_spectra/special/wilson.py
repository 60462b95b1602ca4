"""
╔══════════════════════════════════════════════════════════════════════════════╗
║  Special: wilson.py                                                          ║
║  The nonconventional Wilson polynomial W~_n(z^2; a, b, c, d)                 ║
╚══════════════════════════════════════════════════════════════════════════════╝

This module contains:
• params_from_physics - (a, b, c, d, z^2) from TraParams and eps
• wilson_coefficients - A_n, C_n and s_n of the normalized recursion
• wilson_tilde_recursion - W~_0 .. W~_n by forward recursion (ground truth)
• wilson_conventional_recursion - W_n of the conventional recursion
• prefactor_sign_map / wilson_tilde_hypergeom - the 4F3 representation
• bound_state_condition / k_max_from_wilson - the discrete spectrum

📚 CONCEPT: two recursions, one polynomial
   The normalized Wilson polynomial obeys
       x^2 W_n = (A_n + C_n - a^2) W_n - s_n W_{n+1} - s_{n-1} W_{n-1},
   and its nonconventional partner W~_n(z^2) = (-1)^n W_n(-z^2) obeys
       z^2 W~_n = -(A_n + C_n - a^2) W~_n - s_n W~_{n+1} - s_{n-1} W~_{n-1}.
   Matching the second one to the matrix recursion gives f_n = f_0 W~_n.

📚 CONCEPT: the 4F3 form
       W~_n = (-1)^n k_n 4F3(-n, n+S-1, a+z, a-z; a+b, a+c, a+d | 1)
   with S = a+b+c+d and k_{n+1} = k_n A_n / s_n. The magnitude of k_n comes
   from Pochhammer symbols in log space; only its phase is taken from the
   ratio A_n / s_n (the "sign map").
"""

import cmath
import logging
import math
from typing import List, Tuple

import numpy as np

from .specfun import hyp4f3_terminating, log_pochhammer
from ..exceptions import DomainError, NoBoundStateError, PoleError, RadicandError
from ..models import PotentialFamily, TraParams, WilsonParams

logger = logging.getLogger(__name__)


# ==============================================================================
# PARAMETERS
# ==============================================================================

def params_from_physics(p: TraParams, eps: float) -> WilsonParams:
    """
    a = (mu+1)/2 + i sqrt(eps), b = (mu+1)/2 - i sqrt(eps), c = d = (nu+1)/2,
    z^2 = (mu^2 - 2A)/4.

    For eps < 0 the branch i sqrt(eps) = -sqrt|eps| makes a and b real;
    a + b = mu + 1 always. z^2 does not depend on eps.
    """
    if p.family is not PotentialFamily.A:
        raise DomainError("Wilson parameters follow the family-A recursion; map family B first")
    half = (p.mu + 1.0) / 2.0
    if eps < 0.0:
        shift = complex(-math.sqrt(-eps), 0.0)
    else:
        shift = complex(0.0, math.sqrt(eps))
    c = complex((p.nu + 1.0) / 2.0, 0.0)
    return WilsonParams(a=half + shift, b=half - shift, c=c, d=c, z_sq=p.z_sq)


# ==============================================================================
# RECURSION COEFFICIENTS
# ==============================================================================

def _check_poles(n: int, wp: WilsonParams) -> None:
    S = wp.total
    for shift in (-2.0, -1.0, 0.0, 1.0):
        if 2 * n + S + shift == 0:
            raise PoleError(f"Wilson recursion denominator 2n+S{shift:+g} vanishes at n = {n}")


def _coupling_vanishes(n: int, wp: WilsonParams) -> bool:
    """True when n+b+c or n+b+d is zero to rounding, i.e. s_n = 0 exactly."""
    scale = 1.0 + n + abs(wp.b) + abs(wp.c) + abs(wp.d)
    return min(abs(n + wp.b + wp.c), abs(n + wp.b + wp.d)) <= 1e-12 * scale


def wilson_coefficients(n: int, wp: WilsonParams) -> Tuple[complex, complex, float]:
    """
    (A_n, C_n, s_n) with S = a+b+c+d:

        A_n = (n+S-1)(n+a+b)(n+a+c)(n+a+d) / ((2n+S-1)(2n+S))
        C_n = n(n+b+c-1)(n+b+d-1)(n+c+d-1) / ((2n+S-2)(2n+S-1))
        s_n = sqrt((n+1)(n+a+b)(n+c+d)(n+a+c)(n+a+d)(n+b+c)(n+b+d)(n+S-1)
                   / ((2n+S-1)(2n+S+1))) / (2n+S)

    Raises:
        PoleError: a denominator vanishes at this n
        RadicandError: the s_n radicand is negative
    """
    a, b, c, d = wp.a, wp.b, wp.c, wp.d
    S = wp.total
    _check_poles(n, wp)

    A_n = (n + S - 1) * (n + a + b) * (n + a + c) * (n + a + d) / ((2 * n + S - 1) * (2 * n + S))
    C_n = n * (n + b + c - 1) * (n + b + d - 1) * (n + c + d - 1) / ((2 * n + S - 2) * (2 * n + S - 1))
    radicand = (
        (n + 1) * (n + a + b) * (n + c + d) * (n + a + c) * (n + a + d)
        * (n + b + c) * (n + b + d) * (n + S - 1)
        / ((2 * n + S - 1) * (2 * n + S + 1))
    )
    if radicand.real < 0.0:
        raise RadicandError("s_n", n, radicand)
    s_n = math.sqrt(radicand.real) / (2 * n + S).real
    return A_n, C_n, s_n


def _diagonal(n: int, wp: WilsonParams) -> Tuple[float, float]:
    """(A_n + C_n - a^2, s_n); the first entry is symmetric in a, b, c, d, hence real."""
    A_n, C_n, s_n = wilson_coefficients(n, wp)
    return (A_n + C_n - wp.a ** 2).real, s_n


# ==============================================================================
# RECURSIONS
# ==============================================================================

def wilson_tilde_recursion(n_max: int, wp: WilsonParams) -> np.ndarray:
    """
    W~_0 .. W~_{n_max} from

        W~_{n+1} = -[(z^2 + A_n + C_n - a^2) W~_n + s_{n-1} W~_{n-1}] / s_n,

    seeded with W~_0 = 1.

    When n+b+c or n+b+d vanishes at some n = k the chain decouples there:
    W~_0 .. W~_k is a finite series and every later entry is left at 0.

    Raises:
        PoleError: s_n vanishes for any other reason (message names n)
    """
    z_sq = complex(wp.z_sq).real
    values = np.zeros(n_max + 1)
    values[0] = 1.0
    previous_s = 0.0
    for n in range(n_max):
        _check_poles(n, wp)
        if _coupling_vanishes(n, wp):
            logger.debug("Wilson chain terminates at n = %d of %d", n, n_max)
            break
        diag, s_n = _diagonal(n, wp)
        if s_n == 0.0:
            raise PoleError(f"s_n vanishes at n = {n}; W~_{n + 1} is undefined")
        lower = values[n - 1] if n > 0 else 0.0
        values[n + 1] = -((z_sq + diag) * values[n] + previous_s * lower) / s_n
        previous_s = s_n
    return values


def wilson_conventional_recursion(n_max: int, wp: WilsonParams, x_sq: float) -> np.ndarray:
    """
    W_0 .. W_{n_max} of the conventional normalized recursion at argument x^2:

        W_{n+1} = [(A_n + C_n - a^2 - x^2) W_n - s_{n-1} W_{n-1}] / s_n
    """
    values = np.zeros(n_max + 1)
    values[0] = 1.0
    previous_s = 0.0
    for n in range(n_max):
        diag, s_n = _diagonal(n, wp)
        if s_n == 0.0:
            raise PoleError(f"s_n vanishes at n = {n}")
        lower = values[n - 1] if n > 0 else 0.0
        values[n + 1] = ((diag - x_sq) * values[n] - previous_s * lower) / s_n
        previous_s = s_n
    return values


# ==============================================================================
# HYPERGEOMETRIC REPRESENTATION
# ==============================================================================

def _log_rho(n: int, wp: WilsonParams) -> complex:
    """
    ln k_n^2 with

        k_n^2 = (2n+S-1)/(n+S-1) (a+b)_n (a+c)_n (a+d)_n (S)_n
                / ((b+c)_n (b+d)_n (c+d)_n n!)

    determined up to 2 pi i.
    """
    a, b, c, d = wp.a, wp.b, wp.c, wp.d
    S = wp.total
    if n == 0:
        return 0j
    value = cmath.log(2 * n + S - 1) - cmath.log(n + S - 1) - math.lgamma(n + 1.0)
    for upper in (a + b, a + c, a + d, S):
        value += log_pochhammer(upper, n)
    for lower in (b + c, b + d, c + d):
        value -= log_pochhammer(lower, n)
    return value


def prefactor_sign_map(n_max: int, wp: WilsonParams) -> np.ndarray:
    """
    Unit phases u_0 .. u_{n_max} of k_n from k_{n+1} = k_n A_n / s_n.

    For real parameters these are +/-1 and fix the sign of the square root
    sqrt(k_n^2) that the 4F3 form needs.
    """
    phases = np.ones(n_max + 1, dtype=complex)
    for n in range(n_max):
        A_n, _, s_n = wilson_coefficients(n, wp)
        ratio = A_n / s_n
        if ratio == 0:
            raise PoleError(f"A_n vanishes at n = {n}; the prefactor is zero from here on")
        phases[n + 1] = phases[n] * ratio / abs(ratio)
    return phases


def wilson_prefactor(n: int, wp: WilsonParams) -> complex:
    """
    k_n from Pochhammer symbols with the phase chosen by the sign map.

    Raises:
        RadicandError: k_n^2 is real and negative for real parameters, or
            neither root agrees with the sign map
    """
    log_rho = _log_rho(n, wp)
    rho = cmath.exp(log_rho)
    real_parameters = all(complex(v).imag == 0.0 for v in (wp.a, wp.b, wp.c, wp.d))
    if real_parameters and rho.real < 0.0 and abs(rho.imag) <= 1e-12 * abs(rho):
        raise RadicandError("Wilson prefactor", n, rho)

    root = cmath.exp(0.5 * log_rho)
    phase = prefactor_sign_map(n, wp)[n]
    alignment = (root * phase.conjugate()) / abs(root)
    if alignment.real < 0.0:
        root, alignment = -root, -alignment
    if abs(alignment.imag) > 1e-6:
        raise RadicandError("Wilson prefactor phase", n, alignment)
    return root


def wilson_tilde_hypergeom(n: int, wp: WilsonParams) -> complex:
    """
    W~_n = (-1)^n k_n 4F3(-n, n+S-1, a+z, a-z; a+b, a+c, a+d | 1).

    Complex in general; real to rounding for conjugate-pair parameters.
    Callers fall back to wilson_tilde_recursion on RadicandError.
    """
    a, b, c, d = wp.a, wp.b, wp.c, wp.d
    S = wp.total
    z = wp.z
    series = hyp4f3_terminating(n, (n + S - 1, a + z, a - z), (a + b, a + c, a + d))
    return (-1) ** n * wilson_prefactor(n, wp) * series


def wilson_tilde_values(n_max: int, wp: WilsonParams) -> Tuple[np.ndarray, str]:
    """
    W~_0 .. W~_{n_max} by the 4F3 path where its prefactor is defined,
    otherwise by the recursion. Returns (values, path).
    """
    try:
        values = np.array([wilson_tilde_hypergeom(n, wp).real for n in range(n_max + 1)])
        return values, "hypergeometric"
    except RadicandError as exc:
        logger.debug("4F3 prefactor unavailable (%s); using the recursion", exc)
        return wilson_tilde_recursion(n_max, wp), "recursion"


# ==============================================================================
# BOUND STATES
# ==============================================================================

def highest_level(bound: float) -> int:
    """
    Largest integer k with k < bound, or -1.

    The inequality is strict: k = bound would put the level at eps = 0,
    the continuum threshold.
    """
    return int(math.ceil(bound)) - 1 if bound > 0.0 else -1


def k_max_from_wilson(p: TraParams) -> int:
    """
    Largest k with k < z - (mu+1)/2 = (sqrt(mu^2 - 2A) - mu - 1)/2;
    -1 when there is no bound state (including imaginary z).
    """
    if p.z_sq < 0.0:
        return -1
    return highest_level(math.sqrt(p.z_sq) - (p.mu + 1.0) / 2.0)


def bound_state_condition(p: TraParams, k: int) -> float:
    """
    eps_k from z = k + b, where b = (mu+1)/2 + sqrt|eps_k| is the b of
    params_from_physics at eps_k:

        eps_k = -(k + (mu+1)/2 - z)^2 = -(2k + 1 + mu - sqrt(mu^2 - 2A))^2 / 4

    Raises:
        NoBoundStateError: k < 0 or k > k_max
    """
    if p.family is not PotentialFamily.A or p.mapped_from_b:
        raise DomainError("the bound-state condition is stated for family-A parameters")
    k_max = k_max_from_wilson(p)
    if not 0 <= k <= k_max:
        raise NoBoundStateError(f"level k = {k} does not exist (k_max = {k_max})")
    return -((k + (p.mu + 1.0) / 2.0 - math.sqrt(p.z_sq)) ** 2)


def bound_state_energies(p: TraParams) -> List[float]:
    """eps_0 .. eps_kmax, deepest first."""
    return [bound_state_condition(p, k) for k in range(k_max_from_wilson(p) + 1)]


__all__ = [
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
