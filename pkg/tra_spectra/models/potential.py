"""
╔══════════════════════════════════════════════════════════════════════════════╗
║  Models: potential.py                                                        ║
║  The physics input: which potential family and how strong                    ║
╚══════════════════════════════════════════════════════════════════════════════╝

This module contains:
• PotentialFamily (Enum) - the two singular hyperbolic families
• PotentialSpec (dataclass) - strengths V0, V+/- and the range scale lambda

Unit convention
    Strengths are stored in units of lambda^2/2, which is how the tabulated
    reference spectrum quotes them. In these units the dimensionless
    couplings used everywhere else are simply

        2 V0 / lambda^2 = v0        A = +vs (family A)   A = -vs (family B)

    and an absolute energy E corresponds to eps = 2E/lambda^2.

Family A:  V(r) = V0/sinh^2(lambda r) + (V+/2)/cosh^2(lambda r/2)
Family B:  V(r) = V0/sinh^2(lambda r) - (V-/2)/sinh^2(lambda r/2)
"""

import math
from dataclasses import dataclass
from enum import Enum

from ..exceptions import ConstraintViolation


# ==============================================================================
# ENUM: PotentialFamily
# ==============================================================================

class PotentialFamily(Enum):
    """Which of the two potentials is meant."""
    A = "A"    # V0/sinh^2 + (V+/2)/cosh^2(half angle)
    B = "B"    # V0/sinh^2 - (V-/2)/sinh^2(half angle)

    @classmethod
    def parse(cls, text: str) -> "PotentialFamily":
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise ValueError(
                f"Unknown potential family: {text!r}\n"
                f"Available families: {[f.value for f in cls]}"
            ) from None


# ==============================================================================
# DATACLASS: PotentialSpec
# ==============================================================================

@dataclass(frozen=True)
class PotentialSpec:
    """
    A member of one of the two potential families.

    Attributes:
        family: PotentialFamily.A or PotentialFamily.B
        v0: strength of the 1/sinh^2(lambda r) term, units lambda^2/2
        vs: V+ for family A, V- for family B, units lambda^2/2
        lam: inverse range lambda > 0

    Example:
        reference = PotentialSpec(PotentialFamily.A, v0=10.0, vs=-80.0)
    """
    family: PotentialFamily
    v0: float
    vs: float
    lam: float = 1.0

    def __post_init__(self):
        if not (self.lam > 0.0 and math.isfinite(self.lam)):
            raise ConstraintViolation("lambda > 0", f"lambda = {self.lam!r}")
        if not (math.isfinite(self.v0) and math.isfinite(self.vs)):
            raise ConstraintViolation(
                "finite strengths", f"v0 = {self.v0!r}, vs = {self.vs!r}"
            )

    # -------------------------------------------------------------------------
    # Absolute units
    # -------------------------------------------------------------------------

    @property
    def v0_energy(self) -> float:
        """V0 as an energy (hbar = m = 1)."""
        return self.v0 * self.lam ** 2 / 2.0

    @property
    def vs_energy(self) -> float:
        """V+ or V- as an energy."""
        return self.vs * self.lam ** 2 / 2.0

    def epsilon_from_energy(self, energy: float) -> float:
        """eps = 2E/lambda^2."""
        return 2.0 * energy / self.lam ** 2

    def energy_from_epsilon(self, eps: float) -> float:
        """E = eps lambda^2/2."""
        return eps * self.lam ** 2 / 2.0

    # -------------------------------------------------------------------------
    # Derived predicates
    # -------------------------------------------------------------------------

    @property
    def is_real(self) -> bool:
        """Reality of the basis parameter fixed by V0: 2V0/lambda^2 >= -1/4."""
        return self.v0 >= -0.25

    def check_reality(self) -> None:
        if not self.is_real:
            raise ConstraintViolation(
                "2V0/lambda^2 >= -1/4", f"2V0/lambda^2 = {self.v0!r}"
            )

    @property
    def supports_bound_states(self) -> bool:
        """
        V0 - 2 V_s > -lambda^2/8, using the family's own strength.

        Family B is tested with V-, not V+.
        In lambda^2/2 units the inequality reads v0 - 2 vs > -1/4.
        """
        return self.v0 - 2.0 * self.vs > -0.25

    @property
    def origin_coefficient(self) -> float:
        """
        Dimensionless coefficient c of the r^-2 singularity, V ~ (lambda^2/2) c / (lambda r)^2.

        Family A: only V0 contributes. Family B: 1/sinh^2(lambda r/2) also
        behaves like 4/(lambda r)^2, so the strength becomes V0 - 2V-.
        """
        if self.family is PotentialFamily.A:
            return self.v0
        return self.v0 - 2.0 * self.vs

    def origin_exponent(self) -> float:
        """Exponent s of the regular solution psi ~ r^s at the origin."""
        radicand = 0.25 + self.origin_coefficient
        if radicand < 0.0:
            raise ConstraintViolation(
                "1/4 + 2(V0 - 2V-)/lambda^2 >= 0",
                f"value = {radicand!r} (below the critical strength)",
            )
        return 0.5 + math.sqrt(radicand)

    def equivalent_family_a(self) -> "PotentialSpec":
        """
        The family-A potential that is identical to this one as a function of r.

        From 1/sinh^2(y) = 4/sinh^2(2y) + 1/cosh^2(y):
            V0/sinh^2(lr) - (V-/2)/sinh^2(lr/2)
              = (V0 - 2V-)/sinh^2(lr) + (-V-/2)/cosh^2(lr/2)
        """
        if self.family is PotentialFamily.A:
            return self
        return PotentialSpec(
            PotentialFamily.A, v0=self.v0 - 2.0 * self.vs, vs=-self.vs, lam=self.lam
        )

    def __str__(self) -> str:
        strength = "V+" if self.family is PotentialFamily.A else "V-"
        return (
            f"family {self.family.value}: V0={self.v0:g}, {strength}={self.vs:g} "
            f"(units lambda^2/2), lambda={self.lam:g}"
        )
