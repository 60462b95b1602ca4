"""
╔══════════════════════════════════════════════════════════════════════════════╗
║  Special: specfun.py                                                         ║
║  Scalar special functions: log-gamma, arg-gamma, Pochhammer, pFq sums        ║
╚══════════════════════════════════════════════════════════════════════════════╝

This module contains:
• ln_gamma - complex log-gamma, principal branch unless asked (Lanczos g=7, n=9)
• arg_gamma - argument of Gamma, principal by default
• pochhammer / log_pochhammer - rising factorials
• hypergeometric_pfq_terminating / hyp4f3_terminating - finite pFq sums

📚 CONCEPT: Lanczos approximation
   For Re z >= 1/2,
       Gamma(z) = sqrt(2 pi) t^(z - 1/2) e^(-t) A(z),   t = z + g - 1/2,
   with A(z) a short partial-fraction sum. Its logarithm is taken term by
   term so nothing overflows. For Re z < 1/2 we shift up with
       ln Gamma(z) = ln Gamma(z + m) - sum_{k<m} Log(z + k),
   which keeps the result on the same branch as the usual loggamma
   (analytic off the negative real axis).

All sums go through math.fsum, real and imaginary parts separately.
Every function here is pure and thread-safe.
"""

import cmath
import math
from numbers import Number
from typing import Iterable, Sequence, Union

from ..exceptions import DomainError, PoleError

ComplexLike = Union[complex, float, int]


# ==============================================================================
# LANCZOS COEFFICIENTS (g = 7, n = 9)
# ==============================================================================

_LANCZOS_G = 7.0
_LANCZOS_C0 = 0.99999999999980993
_LANCZOS_COEFFS = (
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)


def _as_complex(zc: ComplexLike) -> complex:
    if not isinstance(zc, Number):
        raise DomainError(f"expected a number, got {type(zc).__name__}")
    z = complex(zc)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite argument {z!r}")
    return z


def _is_pole(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def _complex_fsum(values: Iterable[complex]) -> complex:
    values = list(values)
    return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))


def _lanczos_real(x: float) -> float:
    """ln Gamma(x) for real x >= 1/2."""
    y = x - 1.0
    series = _LANCZOS_C0
    for i, coefficient in enumerate(_LANCZOS_COEFFS):
        series += coefficient / (y + i + 1.0)
    t = y + _LANCZOS_G + 0.5
    return math.fsum((_HALF_LOG_TWO_PI, (y + 0.5) * math.log(t), -t, math.log(series)))


def _lanczos_complex(z: complex) -> complex:
    """ln Gamma(z) for Re z >= 1/2 (analytic branch)."""
    y = z - 1.0
    series = complex(_LANCZOS_C0)
    for i, coefficient in enumerate(_LANCZOS_COEFFS):
        series += coefficient / (y + i + 1.0)
    t = y + _LANCZOS_G + 0.5
    return _complex_fsum((complex(_HALF_LOG_TWO_PI), (y + 0.5) * cmath.log(t), -t, cmath.log(series)))


# ==============================================================================
# LOG-GAMMA AND ARG-GAMMA
# ==============================================================================

def ln_gamma(zc: ComplexLike, principal: bool = True) -> complex:
    """
    Complex log-gamma on the principal branch, Im in (-pi, pi].

    Args:
        zc: any number except 0, -1, -2, ...
        principal: False returns the analytic branch instead, continuous off
            the negative real axis (what phase unwrapping reconstructs)

    Returns:
        ln Gamma(zc); Im = 0 exactly for real positive zc.

    Raises:
        PoleError: zc is a non-positive integer

    Example:
        >>> ln_gamma(5)
        (3.1780538303479458+0j)      # ln 24
    """
    z = _as_complex(zc)
    if _is_pole(z):
        raise PoleError(f"Gamma has a pole at {z.real:g}")

    if z.imag == 0.0 and z.real > 0.0:
        x = z.real
        if x >= 0.5:
            return complex(_lanczos_real(x), 0.0)
        return complex(_lanczos_real(x + 1.0) - math.log(x), 0.0)

    if z.real >= 0.5:
        result = _lanczos_complex(z)
    else:
        shift = int(math.ceil(0.5 - z.real))
        logs = [cmath.log(z + k) for k in range(shift)]
        result = _lanczos_complex(z + shift) - _complex_fsum(logs)

    if principal:
        result = complex(result.real, _wrap_angle(result.imag))
    return result


def _wrap_angle(theta: float) -> float:
    """Map theta into (-pi, pi]."""
    wrapped = math.remainder(theta, 2.0 * math.pi)
    if wrapped <= -math.pi:
        wrapped += 2.0 * math.pi
    return wrapped


def arg_gamma(zc: ComplexLike, continuous: bool = False) -> float:
    """
    Argument of Gamma(zc).

    By default the principal value in (-pi, pi]. continuous=True returns the
    imaginary part of the analytic log-gamma instead, which is what phase
    unwrapping would reconstruct.
    """
    return ln_gamma(zc, principal=not continuous).imag


def gamma(zc: ComplexLike) -> complex:
    """Gamma(zc) = exp(ln_gamma(zc))."""
    return cmath.exp(ln_gamma(zc))


# ==============================================================================
# POCHHAMMER SYMBOLS
# ==============================================================================

def pochhammer(a: ComplexLike, n: int):
    """
    Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.

    Evaluated as a left-to-right product so that
    pochhammer(a, n+1) == pochhammer(a, n) * (a + n) holds bit for bit.
    """
    if n < 0 or int(n) != n:
        raise DomainError(f"Pochhammer index must be a non-negative integer, got {n!r}")
    result = 1.0 if not isinstance(a, complex) else complex(1.0)
    for k in range(int(n)):
        result *= a + k
    return result


def log_pochhammer(a: ComplexLike, n: int) -> complex:
    """
    sum_{k<n} Log(a + k), a logarithm of (a)_n determined up to 2 pi i.

    The 2 pi i ambiguity is harmless for magnitudes and is resolved by the
    caller when a square root of a product is taken.
    """
    if n < 0 or int(n) != n:
        raise DomainError(f"Pochhammer index must be a non-negative integer, got {n!r}")
    z = complex(a)
    logs = []
    for k in range(int(n)):
        factor = z + k
        if factor == 0:
            raise PoleError(f"(a)_n with a = {z!r}, n = {n} has a zero factor")
        logs.append(cmath.log(factor))
    return _complex_fsum(logs) if logs else 0j


# ==============================================================================
# TERMINATING HYPERGEOMETRIC SUMS
# ==============================================================================

def hypergeometric_pfq_terminating(
    n: int,
    numerators: Sequence[ComplexLike],
    denominators: Sequence[ComplexLike],
    argument: ComplexLike = 1.0,
) -> complex:
    """
    pFq(-n, numerators; denominators | argument) as a finite sum of n+1 terms.

    The leading numerator parameter -n is implicit. Terms are generated by
    their ratio and accumulated with compensated summation.

    Raises:
        PoleError: some denominator parameter d has d + k = 0 for a k < n
    """
    if n < 0 or int(n) != n:
        raise DomainError(f"degree must be a non-negative integer, got {n!r}")
    n = int(n)
    nums = [complex(p) for p in numerators]
    dens = [complex(q) for q in denominators]
    x = complex(argument)

    for q in dens:
        for k in range(n):
            if abs(q + k) <= 1e-14 * max(1.0, abs(q)):
                raise PoleError(
                    f"denominator parameter {q!r} reaches zero at k = {k} (n = {n})"
                )

    term = complex(1.0)
    terms = [term]
    for k in range(n):
        ratio = complex(k - n)
        for p in nums:
            ratio *= p + k
        for q in dens:
            ratio /= q + k
        term = term * ratio * x / (k + 1)
        terms.append(term)
    return _complex_fsum(terms)


def hyp4f3_terminating(
    n: int,
    numerators: Sequence[ComplexLike],
    denominators: Sequence[ComplexLike],
) -> complex:
    """
    4F3(-n, p1, p2, p3; q1, q2, q3 | 1).

    Args:
        n: degree; the series has n+1 terms
        numerators: the three parameters after -n
        denominators: the three lower parameters
    """
    if len(numerators) != 3 or len(denominators) != 3:
        raise DomainError("4F3 takes three numerator and three denominator parameters after -n")
    return hypergeometric_pfq_terminating(n, numerators, denominators, 1.0)
