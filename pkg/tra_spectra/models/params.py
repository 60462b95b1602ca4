"""
╔══════════════════════════════════════════════════════════════════════════════╗
║  Models: params.py                                                           ║
║  Basis and polynomial parameter sets                                         ║
╚══════════════════════════════════════════════════════════════════════════════╝

This module contains:
• JacobiRegime - (mu, nu, N) of the finite Jacobi family on x >= 1
• BasisSpec - a regime plus the prefactor exponents (alpha, beta)
• TraParams - everything the recursion and matrices need
• WilsonParams - (a, b, c, d) and z^2 of the nonconventional Wilson polynomial

📚 The finite Jacobi family
   With mu > -1 and mu + nu < -2N - 1, the polynomials P_0 .. P_N are
   orthogonal on [1, inf) under (x-1)^mu (x+1)^nu. Only N+1 of them are
   square integrable, so every object here carries N.
"""

import math
from dataclasses import dataclass, replace

from .potential import PotentialFamily
from ..exceptions import ConstraintViolation


# ==============================================================================
# DATACLASS: JacobiRegime
# ==============================================================================

@dataclass(frozen=True)
class JacobiRegime:
    """Jacobi parameters and the largest admissible degree N."""
    mu: float
    nu: float
    N: int

    def check(self) -> None:
        """Raise ConstraintViolation naming the first violated inequality."""
        if self.N < 0:
            raise ConstraintViolation("N >= 0", f"N = {self.N}")
        if not self.mu > -1.0:
            raise ConstraintViolation("mu > -1", f"mu = {self.mu!r}")
        bound = -2 * self.N - 1
        if not self.mu + self.nu < bound:
            raise ConstraintViolation(
                "mu + nu < -2N - 1",
                f"mu + nu = {self.mu + self.nu!r}, -2N - 1 = {bound}",
            )

    @property
    def is_valid(self) -> bool:
        try:
            self.check()
        except ConstraintViolation:
            return False
        return True


# ==============================================================================
# DATACLASS: BasisSpec
# ==============================================================================

@dataclass(frozen=True)
class BasisSpec:
    """
    The basis phi_n(x) = c_n (x-1)^alpha (x+1)^beta P_n^(mu,nu)(x).

    Family A uses 2 alpha = mu + 1/2, 2 beta = nu + 3/2; family B swaps the
    half-integers: 2 alpha = mu + 3/2, 2 beta = nu + 1/2.
    """
    regime: JacobiRegime
    alpha: float
    beta: float

    @classmethod
    def for_family(cls, regime: JacobiRegime, family: PotentialFamily) -> "BasisSpec":
        if family is PotentialFamily.A:
            return cls(regime, alpha=(regime.mu + 0.5) / 2.0, beta=(regime.nu + 1.5) / 2.0)
        return cls(regime, alpha=(regime.mu + 1.5) / 2.0, beta=(regime.nu + 0.5) / 2.0)

    def check(self) -> None:
        self.regime.check()
        if not self.alpha > 0.0:
            raise ConstraintViolation("alpha > 0", f"alpha = {self.alpha!r}")

    @property
    def mu(self) -> float:
        return self.regime.mu

    @property
    def nu(self) -> float:
        return self.regime.nu

    @property
    def N(self) -> int:
        return self.regime.N


# ==============================================================================
# DATACLASS: TraParams
# ==============================================================================

@dataclass(frozen=True)
class TraParams:
    """
    Dimensionless parameters of one TRA problem.

    Attributes:
        mu, nu: Jacobi parameters
        A: dimensionless coupling, 2V+/lambda^2 (family A) or -2V-/lambda^2 (family B)
        N: basis size minus one
        family: which recursion the parameters belong to
        basis: the basis these parameters define
        mapped_from_b: True for the formal family-A image of a family-B set.
            Its (mu, nu) are the swapped family-B values, so mu > -1 need
            not hold and the regime is checked on the family-B side.
        lam: range scale carried along for unit conversions
    """
    mu: float
    nu: float
    A: float
    N: int
    family: PotentialFamily
    basis: BasisSpec
    mapped_from_b: bool = False
    lam: float = 1.0

    @property
    def regime(self) -> JacobiRegime:
        return self.basis.regime

    @property
    def z_sq(self) -> float:
        """Wilson argument z^2 = (mu^2 - 2A)/4 of the family-A recursion."""
        return (self.mu ** 2 - 2.0 * self.A) / 4.0

    def check(self) -> None:
        if not self.mapped_from_b:
            self.basis.check()

    def with_nu(self, nu: float) -> "TraParams":
        regime = replace(self.regime, nu=nu)
        return replace(self, nu=nu, basis=BasisSpec.for_family(regime, self.family))

    def with_mu(self, mu: float) -> "TraParams":
        regime = replace(self.regime, mu=mu)
        return replace(self, mu=mu, basis=BasisSpec.for_family(regime, self.family))


# ==============================================================================
# DATACLASS: WilsonParams
# ==============================================================================

@dataclass(frozen=True)
class WilsonParams:
    """
    Parameters of the nonconventional Wilson polynomial W~_n(z^2; a, b, c, d).

    For the potentials here b is the partner of a (b = conj(a) when a is
    complex) and c = d is real. z_sq may be negative, in which case z is
    purely imaginary.
    """
    a: complex
    b: complex
    c: complex
    d: complex
    z_sq: complex

    @property
    def total(self) -> complex:
        """a + b + c + d."""
        return self.a + self.b + self.c + self.d

    @property
    def z(self) -> complex:
        """The branch z = +sqrt(z^2) (imaginary when z^2 < 0)."""
        zs = complex(self.z_sq)
        if zs.imag == 0.0 and zs.real >= 0.0:
            return complex(math.sqrt(zs.real), 0.0)
        if zs.imag == 0.0:
            return complex(0.0, math.sqrt(-zs.real))
        return zs ** 0.5

    def with_z_sq(self, z_sq: complex) -> "WilsonParams":
        return replace(self, z_sq=z_sq)

    def check_nonconventional(self, N: int) -> None:
        """Re(a+b) > 0 or < -2N; Re(a+c) < -N + 1/2; Re(a+d) < -N + 1/2."""
        ab = (self.a + self.b).real
        if not (ab > 0.0 or ab < -2 * N):
            raise ConstraintViolation("Re(a+b) > 0 or Re(a+b) < -2N", f"Re(a+b) = {ab!r}")
        for name, value in (("a+c", self.a + self.c), ("a+d", self.a + self.d)):
            if not value.real < -N + 0.5:
                raise ConstraintViolation(
                    f"Re({name}) < -N + 1/2", f"Re({name}) = {value.real!r}, N = {N}"
                )

    def is_conjugate_paired(self, tol: float = 1e-14) -> bool:
        """(a, b) and (c, d) are conjugate pairs up to tol."""
        return (
            abs(self.a - complex(self.b).conjugate()) <= tol * max(1.0, abs(self.a))
            and abs(self.c - complex(self.d).conjugate()) <= tol * max(1.0, abs(self.c))
        )


__all__ = ["JacobiRegime", "BasisSpec", "TraParams", "WilsonParams"]
