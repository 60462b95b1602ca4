"""
╔══════════════════════════════════════════════════════════════════════════════╗
║  CLI: verify.py                                                              ║
║  The self-check suite behind `tra-spectra verify`                            ║
╚══════════════════════════════════════════════════════════════════════════════╝

📚 CONCEPT: Generator of records

   VerificationSuite.run() yields one CheckResult per check as soon as it
   finishes, so the CLI can print progress; its return value (reached via
   StopIteration) is the overall verdict. run_full() collects both.

   Every check returns (passed, detail, metrics). An exception inside a
   check is a FAIL with the message as detail. When the basis regime
   itself fails, every later check is reported as SKIP.
"""

import cmath
import logging
import math
import time
import warnings
from dataclasses import dataclass
from typing import Callable, Dict, Generator, List, Optional, Sequence, Tuple

import mpmath
import numpy as np

from ..exceptions import ConstraintViolation, PoleError, RadicandError, TraError
from ..models import (
    BRootPolicy,
    CheckResult,
    CheckStatus,
    NuPolicy,
    PotentialFamily,
    PotentialSpec,
    ShootingConfig,
)
from ..physics import (
    REFERENCE_EXACT,
    REFERENCE_SPEC,
    alternate_signs,
    bound_states,
    build_matrices,
    build_matrices_b,
    convergence_table,
    count_nodes,
    derive_params,
    exact_levels,
    diagonal_identity_check,
    cn_identity_check,
    map_b_to_a,
    numeric_spectrum,
    overlap_matrix,
    phase_shift,
    schrodinger_residual,
    shoot_spectrum,
)
from ..solvers import generalized_eig
from ..special import (
    arg_gamma,
    bound_state_energies,
    jacobi_derivative,
    jacobi_ode_residual,
    jacobi_polynomials,
    params_from_physics,
    quadrature_gram,
    wilson_tilde_hypergeom,
    wilson_tilde_recursion,
)
from .config import RunConfig

logger = logging.getLogger(__name__)

CheckOutcome = Tuple[bool, str, Dict[str, float]]

# family-B potential whose negative-root basis exists at small N
EXCHANGE_REFERENCE = PotentialSpec(PotentialFamily.B, v0=120.0, vs=20.0)
EXCHANGE_N = 4


@dataclass
class VerifyContext:
    """What every check may look at."""
    config: RunConfig
    seed: int = 20240611

    @property
    def spec(self) -> PotentialSpec:
        return self.config.potential

    @property
    def spec_a(self) -> PotentialSpec:
        return self.spec.equivalent_family_a()

    @property
    def N(self) -> int:
        return int(max(self.config.N_list))

    @property
    def explicit_nu(self) -> Optional[float]:
        return self.config.nu if self.config.nu_selection is NuPolicy.EXPLICIT else None


@dataclass
class Check:
    name: str
    run: Callable[[VerifyContext], CheckOutcome]
    quick: bool = True
    description: str = ""


# ==============================================================================
# INDIVIDUAL CHECKS
# ==============================================================================

def check_regime(ctx: VerifyContext) -> CheckOutcome:
    problems = []
    for N in ctx.config.N_list:
        try:
            derive_params(ctx.spec, int(N), ctx.explicit_nu, ctx.config.b_root)
        except ConstraintViolation as exc:
            problems.append(f"N={N}: {exc}")
    if problems:
        return False, "; ".join(problems), {"violations": float(len(problems))}
    return True, f"basis regime holds for N in {list(ctx.config.N_list)}", {}


def check_identities(ctx: VerifyContext) -> CheckOutcome:
    rng = np.random.default_rng(ctx.seed)
    draws = 200 if ctx.config.quick else 1000
    worst_diagonal = worst_cn = 0.0
    skipped = 0
    for _ in range(draws):
        n = int(rng.integers(0, 40))
        mu = float(rng.uniform(-0.9, 12.0))
        nu = float(rng.uniform(-2 * n - mu - 60.0, -2 * n - mu - 1.5))
        chi = float(rng.uniform(-50.0, 50.0))
        try:
            worst_diagonal = max(worst_diagonal, diagonal_identity_check(n, mu, nu, chi, scaled=True))
            worst_cn = max(worst_cn, cn_identity_check(n, mu, nu, scaled=True))
        except PoleError:
            skipped += 1
    metrics = {"max_scaled_diagonal": worst_diagonal, "max_scaled_cn": worst_cn, "draws": float(draws)}
    passed = worst_diagonal <= 1e-11 and worst_cn <= 1e-11
    return passed, f"{draws - skipped} random draws, worst {max(worst_diagonal, worst_cn):.2e}", metrics


def check_jacobi(ctx: VerifyContext) -> CheckOutcome:
    p = derive_params(ctx.spec_a, 3)
    regime = p.regime
    x = np.array([1.5, 3.0, 10.0])

    ode = max(float(np.max(jacobi_ode_residual(n, regime, x))) for n in range(regime.N + 1))

    h = 1e-4
    derivative = 0.0
    for n in range(1, regime.N + 1):
        stencil = [jacobi_polynomials(n, regime.mu, regime.nu, x + o * h)[n] for o in (-2, -1, 1, 2)]
        numeric = (stencil[0] - 8.0 * stencil[1] + 8.0 * stencil[2] - stencil[3]) / (12.0 * h)
        exact = jacobi_derivative(n, regime, x)
        derivative = max(derivative, float(np.max(np.abs(numeric - exact) / np.maximum(1.0, np.abs(exact)))))

    gram = quadrature_gram(regime)
    gram_error = float(np.max(np.abs(gram - np.eye(gram.shape[0]))))

    metrics = {"ode_residual": ode, "derivative_error": derivative, "gram_error": gram_error}
    passed = ode <= 1e-6 and derivative <= 1e-8 and gram_error <= 1e-8
    return passed, f"mu={regime.mu:.6g} nu={regime.nu:.6g} N={regime.N}", metrics


def check_wilson(ctx: VerifyContext) -> CheckOutcome:
    rng = np.random.default_rng(ctx.seed + 1)
    sets = 20 if ctx.config.quick else 50
    n_max = 10
    worst = 0.0
    compared = fallbacks = 0
    for _ in range(sets):
        mu = float(rng.uniform(0.5, 5.0))
        spec = PotentialSpec(PotentialFamily.A, v0=mu * mu - 0.25, vs=float(rng.uniform(-60.0, 0.0)))
        wp = params_from_physics(derive_params(spec, n_max), float(rng.uniform(0.1, 20.0)))
        try:
            recursion = wilson_tilde_recursion(n_max, wp)
        except RadicandError:
            fallbacks += n_max + 1
            continue
        scale = max(1.0, float(np.max(np.abs(recursion))))
        for n in range(n_max + 1):
            try:
                value = wilson_tilde_hypergeom(n, wp)
            except RadicandError:
                fallbacks += 1
                continue
            worst = max(worst, abs(value.real - recursion[n]) / scale)
            compared += 1
    metrics = {"max_rel_diff": worst, "compared": float(compared), "fallbacks": float(fallbacks)}
    if compared == 0:
        return True, "4F3 prefactor undefined for every draw; recursion only", metrics
    return worst <= 1e-8, f"{sets} parameter sets, worst relative difference {worst:.2e}", metrics


def check_exchange(ctx: VerifyContext) -> CheckOutcome:
    spec_b, N = ctx.spec, EXCHANGE_N
    if spec_b.family is not PotentialFamily.B:
        spec_b = EXCHANGE_REFERENCE
    try:
        p_b = derive_params(spec_b, N, None, BRootPolicy.NEGATIVE_ROOT)
    except ConstraintViolation:
        spec_b = EXCHANGE_REFERENCE
        p_b = derive_params(spec_b, N, None, BRootPolicy.NEGATIVE_ROOT)

    direct = generalized_eig(*build_matrices_b(p_b), want_vectors=True)
    mapped = generalized_eig(*build_matrices(map_b_to_a(p_b)), want_vectors=True)

    scale = np.maximum(1.0, np.abs(direct.eigenvalues))
    value_error = float(np.max(np.abs(direct.eigenvalues - mapped.eigenvalues) / scale))

    flipped = alternate_signs(mapped.eigenvectors)
    vector_error = 0.0
    for j in range(flipped.shape[1]):
        a, b = direct.eigenvectors[:, j], flipped[:, j]
        vector_error = max(vector_error, min(np.linalg.norm(a - b), np.linalg.norm(a + b)) / np.linalg.norm(a))

    metrics = {"eigenvalue_rel_diff": value_error, "eigenvector_diff": float(vector_error)}
    passed = value_error <= 1e-10 and vector_error <= 1e-8
    return passed, f"{spec_b}, N={N}", metrics


def check_exact_spectrum(ctx: VerifyContext) -> CheckOutcome:
    closed = exact_levels(ctx.spec)
    wilson = np.array(bound_state_energies(derive_params(ctx.spec_a, 0)))
    if closed.size != wilson.size:
        return False, f"{closed.size} closed-form levels vs {wilson.size} from the Wilson condition", {}
    worst = float(np.max(np.abs(closed - wilson))) if closed.size else 0.0
    metrics = {"levels": float(closed.size), "wilson_diff": worst}

    if ctx.spec_a == REFERENCE_SPEC.equivalent_family_a():
        table = float(np.max(np.abs(-closed - np.array(REFERENCE_EXACT))))
        metrics["table_diff"] = table
        return worst <= 1e-12 and table <= 1e-11, f"{closed.size} levels, tabulated values reproduced", metrics
    return worst <= 1e-12, f"{closed.size} levels", metrics


def check_numeric_spectrum(ctx: VerifyContext) -> CheckOutcome:
    result = numeric_spectrum(ctx.spec, ctx.N, ctx.explicit_nu, ctx.config.b_root, want_vectors=True)
    metrics = {"N": float(ctx.N), "levels": float(result.level_count), "exact_levels": float(result.exact.size)}
    if result.exact.size == 0:
        return result.level_count == 0, "no bound state expected", metrics
    if result.level_count != result.exact.size:
        return False, f"{result.level_count} negative eigenvalues for {result.exact.size} levels", metrics

    deepest = float(result.per_level_abs_diff[0])
    metrics["deepest_abs_diff"] = deepest
    errors = result.eig.backward_errors if result.eig is not None else None
    if errors is not None:
        metrics["max_backward_error"] = float(np.max(errors))
    passed = deepest <= 1e-6 and (errors is None or float(np.max(errors)) <= 1e-8)
    return passed, f"N={ctx.N}: deepest level off by {deepest:.2e}", metrics


def check_convergence(ctx: VerifyContext) -> CheckOutcome:
    table = convergence_table(
        ctx.spec, ctx.config.N_list,
        nu_policy=ctx.config.nu_selection, nu=ctx.config.nu,
        b_root_policy=ctx.config.b_root, workers=ctx.config.workers,
    )
    monotone = table.is_monotone()
    return monotone, "errors shrink with N" if monotone else "an error grows with N", {}


def _oracle_phase(mu: float, z: complex, eps: float) -> float:
    argument = mpmath.mpc((mu + 1.0) / 2.0 - z.real, math.sqrt(eps) - z.imag)
    return float(-2 * mpmath.im(mpmath.loggamma(argument)))


def check_phase_shift(ctx: VerifyContext) -> CheckOutcome:
    p = derive_params(ctx.spec_a, 0)
    worst = 0.0
    mirror = 0.0
    for eps in (0.1, 1.0, 10.0):
        z = params_from_physics(p, eps).z
        ours = phase_shift(p, eps)
        oracle = _oracle_phase(p.mu, z, eps)
        worst = max(worst, abs(cmath.phase(cmath.exp(1j * (ours - oracle)))))
        w = complex((p.mu + 1.0) / 2.0, math.sqrt(eps)) - z
        mirror = max(mirror, abs(cmath.phase(cmath.exp(1j * (arg_gamma(w) + arg_gamma(w.conjugate()))))))
    metrics = {"max_diff": worst, "conjugation_defect": mirror}
    passed = worst <= 1e-11 and mirror <= 1e-12
    return passed, f"worst difference from mpmath {worst:.2e} rad", metrics


def check_wavefunction(ctx: VerifyContext) -> CheckOutcome:
    exact = exact_levels(ctx.spec)
    if exact.size == 0:
        return True, "no bound state to check", {}
    policy = ctx.config.series_policy
    levels = list(range(exact.size))
    metrics: Dict[str, float] = {}
    passed = True

    grid = np.linspace(0.2, 6.0, 5801)
    for sample in bound_states(ctx.spec, ctx.N, levels, grid, policy, ctx.explicit_nu):
        report = schrodinger_residual(ctx.spec, sample, sample.eps)
        metrics[f"residual_{sample.level}"] = report.value
        passed = passed and report.value <= 1e-6

    wide = np.linspace(0.01, 12.0, 2400)
    for sample in bound_states(ctx.spec, ctx.N, levels, wide, policy, ctx.explicit_nu):
        nodes = count_nodes(sample.psi, threshold=1e-3)
        metrics[f"nodes_{sample.level}"] = float(nodes)
        passed = passed and nodes == sample.level

    long = np.arange(1, 40001) * 1e-3
    overlaps = overlap_matrix(bound_states(ctx.spec, ctx.N, levels, long, policy, ctx.explicit_nu))
    metrics["max_overlap_defect"] = float(np.max(np.abs(overlaps - np.eye(len(levels)))))
    passed = passed and metrics["max_overlap_defect"] <= 1e-6
    return passed, f"{policy.value} series, levels 0..{levels[-1]} at N={ctx.N}", metrics


def check_numerov(ctx: VerifyContext) -> CheckOutcome:
    exact = exact_levels(ctx.spec)
    spec = ctx.spec
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        energies = shoot_spectrum(spec, ShootingConfig(), n_levels=exact.size)
    eps = 2.0 * energies / spec.lam ** 2
    metrics = {"levels": float(eps.size)}
    if eps.size != exact.size:
        return False, f"shooting found {eps.size} of {exact.size} levels", metrics
    worst = float(np.max(np.abs(eps - exact))) if exact.size else 0.0
    metrics["max_abs_diff"] = worst
    return worst <= 1e-6, f"{eps.size} levels, worst difference {worst:.2e}", metrics


# ==============================================================================
# SUITE
# ==============================================================================

class VerificationSuite:
    """
    Ordered checks; run() is a generator of CheckResult.

    Checks marked quick=False are skipped with --quick.
    """

    _checks: List[Check] = [
        Check("regime", check_regime, description="basis inequalities for every N"),
        Check("identities", check_identities, description="recursion identities on random draws"),
        Check("jacobi", check_jacobi, description="ODE, derivative relation, quadrature orthonormality"),
        Check("wilson", check_wilson, description="4F3 form against the recursion"),
        Check("exchange", check_exchange, description="family-B matrices against the exchange map"),
        Check("exact-spectrum", check_exact_spectrum, description="closed form against the Wilson condition"),
        Check("numeric-spectrum", check_numeric_spectrum, description="matrix levels at the largest N"),
        Check("convergence", check_convergence, quick=False, description="errors shrink as N grows"),
        Check("phase-shift", check_phase_shift, description="phase shift against mpmath"),
        Check("wavefunction", check_wavefunction, quick=False, description="residuals, node counts and overlaps of the configured series"),
        Check("numerov", check_numerov, quick=False, description="independent shooting spectrum"),
    ]

    def __init__(self, config: RunConfig, seed: int = 20240611):
        self.context = VerifyContext(config, seed)

    @classmethod
    def available_checks(cls) -> List[str]:
        return [check.name for check in cls._checks]

    def selected(self) -> List[Check]:
        only = set(self.context.config.only)
        unknown = only - set(self.available_checks())
        if unknown:
            raise ValueError(
                f"No check found for: {sorted(unknown)}\n"
                f"Available checks: {self.available_checks()}"
            )
        chosen = [c for c in self._checks if not only or c.name in only]
        if self.context.config.quick:
            chosen = [c for c in chosen if c.quick]
        return chosen

    def run(self) -> Generator[CheckResult, None, bool]:
        """Yield one record per check; return True when nothing failed."""
        blocked = False
        all_passed = True
        for check in self.selected():
            if blocked:
                yield CheckResult(check.name, CheckStatus.SKIP, "basis regime failed")
                continue

            started = time.perf_counter()
            try:
                passed, detail, metrics = check.run(self.context)
            except (TraError, ArithmeticError, ValueError) as exc:
                logger.exception("check %s raised", check.name)
                passed, detail, metrics = False, f"{type(exc).__name__}: {exc}", {}
            seconds = time.perf_counter() - started

            status = CheckStatus.PASS if passed else CheckStatus.FAIL
            record = CheckResult(check.name, status, detail, metrics, seconds)
            logger.info("%s (%.2fs)", record, seconds)
            yield record

            if not passed:
                all_passed = False
                blocked = check.name == "regime"
        return all_passed

    def run_full(self) -> Tuple[bool, List[CheckResult]]:
        """Run every selected check and collect the records."""
        records = []
        verdict = False
        generator = self.run()
        try:
            while True:
                records.append(next(generator))
        except StopIteration as e:
            verdict = bool(e.value)
        return verdict, records


def run_checks(config: RunConfig, names: Optional[Sequence[str]] = None) -> Tuple[bool, List[CheckResult]]:
    """Convenience wrapper: the suite for config, optionally limited to names."""
    if names is not None:
        config = config.updated({"only": list(names)}, source="run_checks")
    return VerificationSuite(config).run_full()


__all__ = ["VerificationSuite", "VerifyContext", "Check", "run_checks", "EXCHANGE_REFERENCE"]
