"""Log-gamma, Pochhammer symbols and terminating hypergeometric sums."""

import cmath
import math

import mpmath
import pytest

from tra_spectra.exceptions import DomainError, PoleError
from tra_spectra.special import (
    arg_gamma,
    gamma,
    hyp4f3_terminating,
    hypergeometric_pfq_terminating,
    ln_gamma,
    log_pochhammer,
    pochhammer,
)


# ------------------------------------------------------------------------------
# ln_gamma
# ------------------------------------------------------------------------------

class TestLnGamma:

    @pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 2.5, 5.0, 17.3, 120.0])
    def test_real_axis_matches_lgamma(self, x):
        value = ln_gamma(x)
        assert value.imag == 0.0
        assert value.real == pytest.approx(math.lgamma(x), rel=1e-13, abs=1e-14)

    @pytest.mark.parametrize("z", [0.25 + 3j, 1.5 - 0.2j, 10 + 20j, -2.5 + 0.5j, -7.3 - 4.1j, 0.75 + 50j])
    def test_complex_matches_mpmath(self, z):
        expected = complex(mpmath.loggamma(z))
        assert abs(ln_gamma(z, principal=False) - expected) <= 1e-12 * max(1.0, abs(expected))

    @pytest.mark.parametrize("z", [0, -1, -3, -10.0])
    def test_poles_raise(self, z):
        with pytest.raises(PoleError):
            ln_gamma(z)

    def test_non_finite_argument_rejected(self):
        with pytest.raises(DomainError):
            ln_gamma(float("nan"))

    def test_principal_branch_is_wrapped(self):
        z = 3.0 + 40.0j
        principal = ln_gamma(z).imag
        assert -math.pi < principal <= math.pi
        continuous = ln_gamma(z, principal=False).imag
        assert abs(continuous) > math.pi
        assert cmath.exp(1j * principal) == pytest.approx(cmath.exp(1j * continuous), abs=1e-12)

    def test_gamma_matches_factorial(self):
        assert gamma(6).real == pytest.approx(120.0, rel=1e-13)


class TestArgGamma:

    @pytest.mark.parametrize("z", [0.5 + 1j, 2.0 - 3j, -1.5 + 0.25j])
    def test_conjugation_antisymmetry(self, z):
        total = arg_gamma(z) + arg_gamma(z.conjugate())
        assert abs(cmath.phase(cmath.exp(1j * total))) <= 1e-12

    def test_continuous_differs_by_multiple_of_two_pi(self):
        z = 0.5 + 30j
        turns = (arg_gamma(z, continuous=True) - arg_gamma(z)) / (2.0 * math.pi)
        assert turns == pytest.approx(round(turns), abs=1e-10)


# ------------------------------------------------------------------------------
# Pochhammer symbols
# ------------------------------------------------------------------------------

class TestPochhammer:

    def test_small_values(self):
        assert pochhammer(3, 4) == 360
        assert pochhammer(2.5, 0) == 1.0
        assert pochhammer(-2, 3) == 0

    def test_step_relation_is_exact(self):
        a = 0.37 - 1.2j
        for n in range(8):
            assert pochhammer(a, n + 1) == pochhammer(a, n) * (a + n)

    def test_negative_index_rejected(self):
        with pytest.raises(DomainError):
            pochhammer(1.0, -1)

    def test_log_form_matches_magnitude(self):
        a = 1.75 + 0.5j
        value = pochhammer(a, 9)
        assert math.exp(log_pochhammer(a, 9).real) == pytest.approx(abs(value), rel=1e-13)

    def test_log_form_zero_factor(self):
        with pytest.raises(PoleError):
            log_pochhammer(-2.0, 5)


# ------------------------------------------------------------------------------
# Terminating hypergeometric sums
# ------------------------------------------------------------------------------

class TestTerminatingSums:

    @pytest.mark.parametrize("n", [0, 1, 5, 12])
    def test_chu_vandermonde(self, n):
        b, c = 2.5, 7.25
        value = hypergeometric_pfq_terminating(n, [b], [c], 1.0)
        expected = pochhammer(c - b, n) / pochhammer(c, n)
        assert value.real == pytest.approx(expected, rel=1e-12)
        assert value.imag == 0.0

    def test_4f3_matches_mpmath(self):
        n = 6
        nums = (n + 1.3, 0.4 + 1.1j, 0.4 - 1.1j)
        dens = (2.1, -7.5, -7.5)
        expected = complex(mpmath.hyper([-n, *nums], list(dens), 1))
        value = hyp4f3_terminating(n, nums, dens)
        assert abs(value - expected) <= 1e-11 * max(1.0, abs(expected))

    def test_4f3_arity(self):
        with pytest.raises(DomainError):
            hyp4f3_terminating(2, (1.0, 2.0), (3.0, 4.0, 5.0))

    def test_denominator_reaching_zero(self):
        with pytest.raises(PoleError):
            hypergeometric_pfq_terminating(5, [1.0], [-2.0])
