"""
╔══════════════════════════════════════════════════════════════════════════════╗
║  exceptions.py                                                               ║
║  Error and warning types raised across tra_spectra                           ║
╚══════════════════════════════════════════════════════════════════════════════╝

Every error derives from TraError, which is itself a ValueError, so callers
that only know "bad numbers went in" can still catch it the usual way:

    try:
        params = derive_params(spec, N=10)
    except ValueError as exc:
        ...

Warnings derive from TraWarning (a UserWarning) so they can be filtered or
escalated with the standard `warnings` machinery.
"""

from typing import Iterable, List


# ==============================================================================
# ERRORS
# ==============================================================================

class TraError(ValueError):
    """Root of every error raised by this package."""


class DomainError(TraError):
    """An argument lies outside the domain of the operation (x < 1, r <= 0, ...)."""


class PoleError(TraError):
    """A Gamma function or Pochhammer denominator hit a pole."""


class ConstraintViolation(TraError):
    """
    A parameter inequality of the basis or the potential does not hold.

    The message always names the inequality and the offending values, e.g.
    "mu + nu < -2N - 1 violated: mu + nu = -20.5, -2N - 1 = -21".
    """

    def __init__(self, inequality: str, detail: str = ""):
        self.inequality = inequality
        message = f"{inequality} violated"
        if detail:
            message += f": {detail}"
        super().__init__(message)


class RadicandError(TraError):
    """A square-root radicand that must be non-negative came out negative."""

    def __init__(self, what: str, n: int, value: complex):
        self.what = what
        self.n = n
        self.value = value
        super().__init__(f"negative radicand in {what} at n={n}: {value!r}")


class NoBoundStateError(TraError):
    """A level index was requested that the potential does not support."""


class OverflowFailure(TraError):
    """Numerov integration overflowed even after rescaling."""


class ConfigError(TraError):
    """
    Invalid command-line configuration; carries every problem found.
    """

    def __init__(self, problems: Iterable[str]):
        self.problems: List[str] = list(problems)
        bullet_list = "\n".join(f"  - {p}" for p in self.problems)
        super().__init__(f"invalid configuration:\n{bullet_list}")


# ==============================================================================
# WARNINGS
# ==============================================================================

class TraWarning(UserWarning):
    """Root of the package's warning classes."""


class NoPlateauWarning(TraWarning):
    """No stable nu-interval of the required length was found for a level."""


class MissedLevelWarning(TraWarning):
    """The shooting scan found fewer levels than the closed form predicts."""


class GridTooCoarseWarning(TraWarning):
    """Finite-difference truncation error exceeds the measured residual."""


class SolverFallbackWarning(TraWarning):
    """The congruence solver handed over to determinant bisection."""


class TruncationWarning(TraWarning):
    """The finite wavefunction series is sensitive to its upper limit."""


class RegimeWarning(TraWarning):
    """Parameters are legal but sit where results are known to be fragile."""
