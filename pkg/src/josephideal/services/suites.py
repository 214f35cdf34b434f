"""Verification suites over (m, n) cases and the ``run_suite`` driver."""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from ..config import config
from ..exceptions import ConfigError, InvalidCaseError, JosephError
from ..models.lambda_linear import LambdaLinear
from ..models.reports import (
    FAIL,
    SUITE_NAMES,
    CaseReport,
    CheckResult,
    ReportDocument,
    SuiteConfig,
    SuiteReport,
    check_equal,
    check_true,
)
from ..models.supermatrix import SuperMatrix, check_case
from ..models.supertensor import SuperTensor
from . import hwsolver, joseph, sampling, superalgebra, superspace, tensoralg, weylreal

logger = logging.getLogger(__name__)

FORMATS = ("json", "text")


@dataclass(frozen=True)
class SuiteSpec:
    name: str
    description: str
    requirement: str
    slow_only: bool = False

    def admits(self, m: int, n: int) -> bool:
        if self.requirement == "|m-n|>2":
            return abs(m - n) > 2
        if self.requirement == "m-n>2":
            return m - n > 2
        return True

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "description": self.description,
            "requires": self.requirement,
            "slow": self.slow_only,
        }


SUITES: Dict[str, SuiteSpec] = {
    "prelim": SuiteSpec("prelim", "roots, ρ, supertrace, Killing form and Casimir arithmetic", "m≠n"),
    "decomposition": SuiteSpec("decomposition", "φ, ψ and the decomposition A = B+C+D+E of g⊙g", "|m-n|>2"),
    "hwv": SuiteSpec("hwv", "highest weight vectors of the symmetric and antisymmetric squares", "m-n>2"),
    "joseph": SuiteSpec("joseph", "τ-stability, the tensor S and the derivation of λᶜ", "m-n>2"),
    "realization": SuiteSpec("realization", "π_μ by differential operators and annihilation of J_λᶜ", "m-n>2"),
    "beta3": SuiteSpec("beta3", "β₃ and I₃ inside ⊗³g by multi-modular ranks", "m-n>2", slow_only=True),
}


def list_suites() -> List[dict]:
    return [SUITES[name].to_dict() for name in SUITE_NAMES]


def validate_config(cfg: SuiteConfig) -> SuiteConfig:
    """Raise ConfigError for anything run_suite cannot execute."""
    if not cfg.cases:
        raise ConfigError("no cases given")
    if not cfg.suites:
        raise ConfigError("no suites given")
    if cfg.format not in FORMATS:
        raise ConfigError(f"unknown format {cfg.format!r}; choose from {', '.join(FORMATS)}")
    if cfg.jobs < 1:
        raise ConfigError("jobs must be at least 1")
    if cfg.mem_cap_mb < 1:
        raise ConfigError("the memory cap must be positive")
    for name in cfg.suites:
        if name not in SUITES:
            raise ConfigError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
        if SUITES[name].slow_only and not cfg.slow:
            raise ConfigError(f"suite {name!r} is slow; pass --slow to run it")
    for m, n in cfg.cases:
        try:
            check_case(m, n)
        except InvalidCaseError as exc:
            raise ConfigError(f"case ({m},{n}): {exc}") from exc
        for name in cfg.suites:
            spec = SUITES[name]
            if not spec.admits(m, n):
                raise ConfigError(
                    f"suite {name!r} requires {spec.requirement}; case ({m},{n}) violates it"
                )
    return cfg


# -- individual suites ----------------------------------------------------------------


def _rng(cfg: SuiteConfig, m: int, n: int, salt: int) -> np.random.Generator:
    return sampling.make_rng([cfg.seed, m, n, salt])


def _sample_count(cfg: SuiteConfig, cap: int) -> int:
    return max(1, min(cfg.samples, cap))


def _all_pass(name: str, results: List[bool], detail: str = "") -> CheckResult:
    passed = sum(1 for r in results if r)
    return CheckResult(name, passed == len(results), len(results), passed, detail)


def prelim_suite(m: int, n: int, cfg: SuiteConfig, jobs: int = 1) -> List[CheckResult]:
    algebra = superalgebra.sl_algebra(m, n)
    rng = _rng(cfg, m, n, 1)
    checks = [
        check_equal("rho_from_roots", superspace.rho(m, n), superspace.rho_from_roots(m, n)),
        check_equal("killing_nondegenerate", algebra.dim, superalgebra.killing_gram_rank(m, n)),
    ]
    natural = superalgebra.natural_casimir(m, n)
    checks.append(check_equal("casimir_on_V", natural["expected"], natural["action"]))

    antisym, jacobi, killing = [], [], []
    for _ in range(_sample_count(cfg, 20)):
        px, py, pz = (int(p) for p in rng.integers(0, 2, size=3))
        x = sampling.random_element(m, n, rng, parity=px)
        y = sampling.random_element(m, n, rng, parity=py)
        z = sampling.random_element(m, n, rng, parity=pz)
        sxy = -1 if px * py else 1
        bracket = superalgebra.bracket
        antisym.append(bracket(x, y) == bracket(y, x) * (-sxy))
        jacobi.append(
            bracket(x, bracket(y, z)) == bracket(bracket(x, y), z) + bracket(y, bracket(x, z)) * sxy
        )
    for _ in range(_sample_count(cfg, 5)):
        x = sampling.random_element(m, n, rng)
        y = sampling.random_element(m, n, rng)
        killing.append(superalgebra.killing(x, y) == superalgebra.adjoint_supertrace(x, y))
    checks += [
        _all_pass("bracket_super_antisymmetry", antisym),
        _all_pass("bracket_jacobi", jacobi),
        _all_pass("killing_is_adjoint_supertrace", killing),
    ]

    if m - n > 2:
        d = m - n
        for k in range(1, 7):
            checks.append(
                check_equal(
                    f"casimir_lambda_{k}",
                    2 * k * (k + d - 1),
                    superspace.casimir_eigenvalue(superspace.lambda_k(k, m, n)),
                )
            )
        for row in superspace.casimir_exclusions(m, n, k_max=4):
            checks.append(check_true(f"casimir_excludes_k{row['k']}", row["all_differ"]))
    return checks


def decomposition_suite(m: int, n: int, cfg: SuiteConfig, jobs: int = 1) -> List[CheckResult]:
    d = m - n
    constants = tensoralg.PhiConstants.for_difference(d)
    rng = _rng(cfg, m, n, 2)
    identity = SuperMatrix.identity(m, n)
    checks = [
        check_equal("phi_conditions", (0, 0, 0), tensoralg.phi_conditions(d, constants)),
    ]
    for which in ("a", "c1", "c2"):
        bent = constants.perturbed(which)
        image = tensoralg.phi(identity, bent)
        broken = (
            tensoralg.str_23(image) != SuperTensor.from_matrix(identity)
            or not tensoralg.str_12(image).is_zero()
        )
        checks.append(check_true(f"perturbed_{which}_detected", broken))

    left_inverse, traceless, symmetric, psi_inverse = [], [], [], []
    for _ in range(_sample_count(cfg, 50)):
        b = sampling.random_element(m, n, rng) + identity * sampling.random_rational(rng)
        image = tensoralg.phi(b)
        left_inverse.append(tensoralg.str_23(image) == SuperTensor.from_matrix(b))
        traceless.append(tensoralg.str_12(image).is_zero())
        symmetric.append(tensoralg.is_super_symmetric(image))
        x = sampling.random_element(m, n, rng)
        psi_inverse.append(tensoralg.str_23(tensoralg.psi(x)) == SuperTensor.from_matrix(x))
    checks += [
        _all_pass("str23_phi_identity", left_inverse),
        _all_pass("str12_phi_zero", traceless),
        _all_pass("phi_super_symmetric", symmetric),
        _all_pass("str23_psi_identity", psi_inverse),
    ]

    sums, b_free, c_free, d_free, idempotent = [], [], [], [], []
    for _ in range(cfg.samples):
        a = sampling.random_symmetric(m, n, rng)
        parts = tensoralg.decompose_sym(a)
        sums.append(parts.total() == a)
        b_free.append(tensoralg.str_23(parts.b).is_zero())
        c_free.append(tensoralg.str_23(parts.c).is_zero())
        d_free.append(tensoralg.kappa(parts.d) == 0)
        asym = sampling.random_antisymmetric(m, n, rng)
        p, q = tensoralg.antisym_parts(asym)
        idempotent.append(tensoralg.str_23(p).is_zero() and tensoralg.antisym_parts(q)[1] == q)
    checks += [
        _all_pass("decomposition_sums_to_A", sums),
        _all_pass("str23_B_zero", b_free),
        _all_pass("str23_C_zero", c_free),
        _all_pass("kappa_D_zero", d_free),
        _all_pass("antisym_projection_idempotent", idempotent),
    ]
    return checks


def hwv_suite(m: int, n: int, cfg: SuiteConfig, jobs: int = 1) -> List[CheckResult]:
    report = hwsolver.verify_tensor_square(m, n)
    algebra = superalgebra.sl_algebra(m, n)
    mismatch = ", ".join(f"{p}:{e.weight.label()}" for p, e in report.mismatches())
    predicted = superspace.tensor_square_weights(m, n)
    checks = [
        check_true("tensor_square_matches_prediction", report.consistent, mismatch),
        check_equal(
            "hwv_line_count",
            sum(len(ws) for ws in predicted.values()),
            sum(e.hwv_dimension for entries in report.parts.values() for e in entries),
        ),
        check_equal("excluded_weights_hwv", 0, sum(e.hwv_dimension for e in report.excluded)),
    ]

    top_root = algebra.basis[algebra.unit_index[(0, m + n - 1)]]
    adjoint = SuperTensor.from_matrix(top_root)
    root_weight = algebra.weights[algebra.unit_index[(0, m + n - 1)]]
    expected = superspace.casimir_eigenvalue(root_weight)
    checks.append(
        check_true("casimir_on_adjoint_hwv", hwsolver.casimir_apply(adjoint) == adjoint.scale(expected))
    )
    top = superspace.lambda_k(2, m, n)
    cartan_hwv = hwsolver.highest_weight_vectors(2, top, part="symmetric")
    checks.append(check_equal("cartan_hwv_dimension", 1, cartan_hwv.dimension))
    if cartan_hwv.dimension == 1:
        vector = cartan_hwv.vectors[0]
        value = superspace.casimir_eigenvalue(top)
        checks.append(
            check_true("casimir_on_cartan_hwv", hwsolver.casimir_apply(vector) == vector.scale(value))
        )
    for weight in (top, root_weight):
        checks.append(
            check_true(
                f"nplus_kernel_{weight.label()}", hwsolver.full_nplus_kernel_agrees(m, n, weight)
            )
        )
    return checks


def joseph_suite(m: int, n: int, cfg: SuiteConfig, jobs: int = 1) -> List[CheckResult]:
    d = m - n
    report = joseph.derive_lambda_c(m, n, jobs=jobs)
    lam = LambdaLinear.lam()
    checks = [
        check_true("per_T_consistent", report.per_t_consistent),
        check_equal("lambda_c", report.expected, report.lambda_c),
        check_equal("left_scalar", LambdaLinear(Fraction(-d * (d - 2), 2)), report.left_scalar),
        check_equal(
            "right_scalar",
            (lam * (2 * (d + 1)) - Fraction(1, 4)) * (d * (d - 2)),
            report.right_scalar,
        ),
        joseph.tau_stability(m, n),
    ]
    algebra = superalgebra.sl_algebra(m, n)
    results: Dict[str, List[bool]] = {}
    for t in algebra.basis:
        for check in joseph.s_tensor_postconditions(t):
            results.setdefault(check.name, []).append(check.passed)
    checks += [_all_pass(f"s_tensor_{name}", values) for name, values in results.items()]
    if cfg.slow or m + n <= 6:
        checks += joseph.generator_span_check(m, n)
    return checks


def _negative_control(name: str, check: CheckResult) -> CheckResult:
    """Reports a check that must fail; it passes when the underlying check fails."""
    return CheckResult(name, not check.passed, FAIL, check.status, check.detail)


def realization_suite(m: int, n: int, cfg: SuiteConfig, jobs: int = 1) -> List[CheckResult]:
    report = weylreal.check_joseph_annihilated(m, n, jobs=jobs)
    realization = weylreal.build_realization(report.mu, m, n)
    identity_image = weylreal.realize_tensor(realization, tensoralg.phi_identity(m, n))
    read_off = None
    if identity_image.degree() == 0 and identity_image.is_multiplication():
        read_off = identity_image.constant_term() / tensoralg.kappa(tensoralg.phi_identity(m, n))
    checks = [check_equal("lambda_c", joseph.expected_lambda_c(m, n), read_off)] + report.checks
    at_zero = weylreal.build_realization(0, m, n)
    zero_check = weylreal.check_homomorphism(at_zero, jobs)
    zero_check.name = "homomorphism_mu_0"
    checks.append(zero_check)
    checks.append(_negative_control("cde_images_mu_0", weylreal.cde_images_check(at_zero, report.lambda_c, jobs)))

    mu, d = report.mu, m - n
    checks.append(weylreal.casimir_commutes(realization))
    checks.append(
        check_equal(
            "casimir_scalar", mu * mu + mu * (d - 1) - mu * mu / d, weylreal.casimir_scalar(realization)
        )
    )
    checks += weylreal.cyclicity_shadow(realization)
    return checks


def beta3_suite(m: int, n: int, cfg: SuiteConfig, jobs: int = 1) -> List[CheckResult]:
    report = hwsolver.beta3_check(m, n, cfg.mem_cap_mb, config.primes, jobs)
    return [
        check_equal("beta3_hwv", {report.top_weight: 1}, report.hwv_weights),
        check_equal(
            "beta3_plus_I3",
            report.total_dimension,
            report.beta_dimension + report.ideal_dimension,
        ),
        check_true("weight_blocks_direct", all(b.direct for b in report.blocks)),
        check_true("top_vector_exact", report.top_vector_found),
        check_true("primes_agree", report.primes_agree),
    ]


SUITE_RUNNERS: Dict[str, Callable[..., List[CheckResult]]] = {
    "prelim": prelim_suite,
    "decomposition": decomposition_suite,
    "hwv": hwv_suite,
    "joseph": joseph_suite,
    "realization": realization_suite,
    "beta3": beta3_suite,
}


# -- driver ---------------------------------------------------------------------------


def _run_one(args: Tuple[int, int, str, SuiteConfig, int]) -> SuiteReport:
    m, n, name, cfg, jobs = args
    logger.info("running %s on sl(%d|%d)", name, m, n)
    start = time.perf_counter()
    try:
        checks = SUITE_RUNNERS[name](m, n, cfg, jobs)
        error: Optional[str] = None
    except JosephError as exc:
        logger.warning("%s on sl(%d|%d) failed: %s", name, m, n, exc)
        checks, error = [], f"{type(exc).__name__}: {exc}"
    elapsed = int((time.perf_counter() - start) * 1000) if cfg.timings else 0
    return SuiteReport(name, checks, wall_time_ms=elapsed, error=error)


def run_suite(cfg: SuiteConfig) -> ReportDocument:
    """Run every selected suite on every case; cases and suites keep their given order."""
    validate_config(cfg)
    suites = list(dict.fromkeys(cfg.suites))
    tasks = [(m, n, name) for m, n in cfg.cases for name in suites]
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as executor:
            reports = list(executor.map(_run_one, [(m, n, s, cfg, 1) for m, n, s in tasks]))
    else:
        reports = [_run_one((m, n, s, cfg, cfg.jobs)) for m, n, s in tasks]

    doc = ReportDocument()
    by_case: Dict[Tuple[int, int], CaseReport] = {}
    for (m, n, _), report in zip(tasks, reports):
        if (m, n) not in by_case:
            by_case[(m, n)] = CaseReport(m, n)
            doc.cases.append(by_case[(m, n)])
        by_case[(m, n)].suites.append(report)
    counts = doc.counts()
    logger.info("%d checks, %d failed", counts["checks"], counts["failed"])
    return doc
