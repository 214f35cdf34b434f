"""The minimal realization π_μ of sl(m|n) by differential operators on R^(m-1|n).

Variable t of the Weyl algebra is attached to the basis index t+1, so that
E_{t+1,1} acts as multiplication by x_t and E_{1,t+1} as (μ−𝔼)∂_t. Everything
else is obtained from brackets of those two families.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Tuple, Union

from ..exceptions import InvalidCaseError, RealizationError, ReductionError, TensorShapeError
from ..linalg.exact import SparseEchelon
from ..models.filtered import FilteredElement
from ..models.lambda_linear import LambdaLinear
from ..models.reports import CheckResult, render_value
from ..models.supermatrix import SuperMatrix, check_case, index_parity
from ..models.supertensor import SuperTensor
from ..models.weyl_op import WeylOp, apply_to_polynomial, supercommutator, weyl_mul
from .joseph import derive_lambda_c, expected_lambda_c, generator
from .superalgebra import casimir_tensor, killing, sl_algebra
from .tensoralg import cartan_product, decompose_sym, in_g_pairs, kappa, super_symmetrize, tensor_product

logger = logging.getLogger(__name__)

UnitKey = Tuple[int, int]


def critical_mu(m: int, n: int) -> Fraction:
    return Fraction(n - m, 2)


@dataclass(eq=False)
class Realization:
    """π_μ on the fixed basis of sl(m|n), plus its gl(m|n) extension on matrix units."""

    m: int
    n: int
    mu: Fraction
    images: Dict[int, WeylOp]
    unit_images: Dict[UnitKey, WeylOp]
    _products: Dict[Tuple[int, ...], WeylOp] = field(default_factory=dict, repr=False)

    def image(self, matrix: SuperMatrix) -> WeylOp:
        total = WeylOp.zero(self.m, self.n)
        for key, v in matrix.items():
            total = total + self.unit_images[key].scale(v)
        return total

    def image_of_coords(self, coords: Mapping[int, Fraction]) -> WeylOp:
        total = WeylOp.zero(self.m, self.n)
        for a, v in coords.items():
            total = total + self.images[a].scale(v)
        return total

    def unit_product(self, idx: Tuple[int, ...]) -> WeylOp:
        """π(E_{i1 j1}) π(E_{i2 j2}) ... for a flat multi-index."""
        cached = self._products.get(idx)
        if cached is not None:
            return cached
        if len(idx) == 2:
            result = self.unit_images[idx]
        else:
            result = weyl_mul(self.unit_product(idx[:2]), self.unit_product(idx[2:]))
        self._products[idx] = result
        return result

    def to_dict(self) -> dict:
        algebra = sl_algebra(self.m, self.n)
        return {
            "m": self.m,
            "n": self.n,
            "mu": render_value(self.mu),
            "images": {algebra.labels[a]: op.to_text() for a, op in sorted(self.images.items())},
        }


def _grading_images(m: int, n: int, mu: Fraction) -> Dict[UnitKey, WeylOp]:
    size = m + n
    base = WeylOp.scalar(m, n, mu) - WeylOp.euler(m, n)
    images: Dict[UnitKey, WeylOp] = {(0, 0): base}
    for j in range(1, size):
        images[(j, 0)] = WeylOp.x(m, n, j - 1)
        images[(0, j)] = weyl_mul(base, WeylOp.d(m, n, j - 1))
    return images


def _g0_routes(m: int, n: int, graded: Mapping[UnitKey, WeylOp]) -> Dict[UnitKey, WeylOp]:
    """E_kj = −(−1)^{|j||k|} [E_1j, E_k1] for k ≠ j, both different from 1."""
    size = m + n
    images: Dict[UnitKey, WeylOp] = {}
    for k in range(1, size):
        for j in range(1, size):
            if k == j:
                continue
            route = supercommutator(graded[(0, j)], graded[(k, 0)])
            sign = -1 if index_parity(m, j) * index_parity(m, k) else 1
            images[(k, j)] = route.scale(-sign)
    return images


def _cartan_route(m: int, n: int, graded: Mapping[UnitKey, WeylOp], k: int) -> WeylOp:
    """H_1 = [E_12, E_21]; H_k = (−1)^{|k|}([E_{1,k+1}, E_{k+1,1}] − [E_1k, E_k1])."""
    top = supercommutator(graded[(0, k + 1)], graded[(k + 1, 0)])
    if k == 0:
        return top
    lower = supercommutator(graded[(0, k)], graded[(k, 0)])
    return (top - lower).scale(-1 if index_parity(m, k) else 1)


def alternative_routes(realization: Realization) -> List[str]:
    """Labels whose image differs along a second bracket route."""
    m, n = realization.m, realization.n
    algebra = sl_algebra(m, n)
    units = realization.unit_images
    size = m + n
    mismatches = []
    for k in range(size - 1):
        idx = algebra.cartan_offset + k
        via_simple = supercommutator(units[(k, k + 1)], units[(k + 1, k)])
        if via_simple != realization.images[idx]:
            mismatches.append(f"{algebra.labels[idx]} via E{k + 1},{k + 2}")
        via_units = realization.image(algebra.basis[idx])
        if via_units != realization.images[idx]:
            mismatches.append(f"{algebra.labels[idx]} via matrix units")
    for k in range(1, size):
        for j in range(1, size):
            for l in range(1, size):
                if len({k, j, l}) < 3:
                    continue
                # [E_kl, E_lj] = E_kj when k, j, l are distinct
                if supercommutator(units[(k, l)], units[(l, j)]) != units[(k, j)]:
                    mismatches.append(f"E{k + 1},{j + 1} via E{k + 1},{l + 1}")
    return mismatches


@lru_cache(maxsize=16)
def build_realization(mu, m: int, n: int) -> Realization:
    check_case(m, n)
    if m < 2:
        raise InvalidCaseError(f"the realization needs m ≥ 2, got m = {m}")
    mu = Fraction(mu)
    algebra = sl_algebra(m, n)
    graded = _grading_images(m, n, mu)
    units = dict(graded)
    units.update(_g0_routes(m, n, graded))
    for j in range(1, m + n):
        units[(j, j)] = weyl_mul(WeylOp.x(m, n, j - 1), WeylOp.d(m, n, j - 1))

    images: Dict[int, WeylOp] = {}
    for (i, j), idx in algebra.unit_index.items():
        images[idx] = units[(i, j)]
    for k in range(m + n - 1):
        images[algebra.cartan_offset + k] = _cartan_route(m, n, graded, k)

    realization = Realization(m, n, mu, images, units)
    for idx, op in images.items():
        if op.parity != algebra.parities[idx]:
            raise RealizationError(f"{algebra.labels[idx]} maps to an operator of the wrong parity")
    mismatches = alternative_routes(realization)
    if mismatches:
        raise RealizationError(f"bracket routes disagree: {', '.join(mismatches[:5])}")
    logger.debug("built π_μ for sl(%d|%d) at μ = %s", m, n, mu)
    return realization


# -- identity checks ------------------------------------------------------------------


def _homomorphism_failures(args: Tuple[Realization, int]) -> List[str]:
    realization, a = args
    algebra = sl_algebra(realization.m, realization.n)
    failures = []
    for b in range(algebra.dim):
        lhs = supercommutator(realization.images[a], realization.images[b])
        rhs = realization.image_of_coords(algebra.ad(a, b))
        if lhs != rhs:
            failures.append(
                f"[{algebra.labels[a]}, {algebra.labels[b]}]: {lhs.to_text()} != {rhs.to_text()}"
            )
    return failures


def _run_rows(worker, tasks, jobs: int) -> List[str]:
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            rows = list(executor.map(worker, tasks))
    else:
        rows = [worker(t) for t in tasks]
    return [f for row in rows for f in row]


def check_homomorphism(realization: Realization, jobs: int = 1) -> CheckResult:
    """π(X)π(Y) − (−1)^{|X||Y|}π(Y)π(X) = π([X,Y]) on all ordered basis pairs."""
    dim = sl_algebra(realization.m, realization.n).dim
    failures = _run_rows(_homomorphism_failures, [(realization, a) for a in range(dim)], jobs)
    return CheckResult(
        "homomorphism",
        not failures,
        expected=dim * dim,
        actual=dim * dim - len(failures),
        detail=failures[0] if failures else "",
    )


def realize_tensor(
    realization: Realization,
    element: Union[SuperTensor, FilteredElement],
    lam=None,
) -> WeylOp:
    """Image of an element of ⊗ᵏg (or of g⊗g ⊕ g ⊕ C) under π, factor by factor."""
    m, n = realization.m, realization.n
    if isinstance(element, FilteredElement):
        total = realize_tensor(realization, element.degree2, lam)
        total = total + realize_tensor(realization, element.degree1, lam)
        return total + WeylOp.scalar(m, n, _value(element.degree0, lam))
    if not element.is_matrix_shaped():
        raise TensorShapeError(f"signature {element.signature} is not (V⊗V*)^k")
    if element.pair_count == 0:
        return WeylOp.scalar(m, n, _value(element[()], lam))
    if not in_g_pairs(element):
        raise TensorShapeError("tensor has a factor with nonzero supertrace")
    terms: Dict = {}
    for idx, value in element.items():
        c = _value(value, lam)
        for mono, w in realization.unit_product(idx).items():
            terms[mono] = terms.get(mono, Fraction(0)) + c * w
    return WeylOp._raw(m, n, terms)


def _value(value, lam) -> Fraction:
    if isinstance(value, LambdaLinear):
        if value.is_constant:
            return value.a
        if lam is None:
            raise RealizationError("element still depends on λ; pass a value for it")
        return value.evaluate(lam)
    return Fraction(value)


def _cde_failures(args: Tuple[Realization, Fraction, int]) -> List[str]:
    realization, lam_c, a = args
    m, n = realization.m, realization.n
    algebra = sl_algebra(m, n)
    failures = []
    for b in range(a, algebra.dim):
        sym = super_symmetrize(tensor_product(algebra.basis[a], algebra.basis[b]))
        if sym.is_zero():
            continue
        parts = decompose_sym(sym)
        label = f"{algebra.labels[a]}⊙{algebra.labels[b]}"
        for name, part in (("C", parts.c), ("D", parts.d)):
            image = realize_tensor(realization, part)
            if not image.is_zero():
                failures.append(f"π({name}) for {label} = {image.to_text()}")
        residual = realize_tensor(realization, parts.e) - WeylOp.scalar(m, n, lam_c * kappa(sym))
        if not residual.is_zero():
            failures.append(f"π(E) − λᶜ𝒦(A) for {label} = {residual.to_text()}")
    return failures


def _rela_failures(args: Tuple[Realization, Fraction, int]) -> List[str]:
    realization, lam_c, a = args
    m, n = realization.m, realization.n
    algebra = sl_algebra(m, n)
    x = algebra.basis[a]
    failures = []
    for b, y in enumerate(algebra.basis):
        residual = (
            weyl_mul(realization.images[a], realization.images[b])
            - realize_tensor(realization, cartan_product(x, y))
            - realization.image_of_coords(algebra.ad(a, b)).scale(Fraction(1, 2))
            - WeylOp.scalar(m, n, lam_c * killing(x, y))
        )
        if not residual.is_zero():
            failures.append(f"({algebra.labels[a]}, {algebra.labels[b]}): {residual.to_text()}")
    return failures


def _generator_failures(args: Tuple[Realization, Fraction, int]) -> List[str]:
    realization, lam_c, a = args
    m, n = realization.m, realization.n
    algebra = sl_algebra(m, n)
    failures = []
    for b in range(a, algebra.dim):
        image = realize_tensor(realization, generator(algebra.basis[a], algebra.basis[b]), lam_c)
        if not image.is_zero():
            failures.append(f"generator({algebra.labels[a]}, {algebra.labels[b]})")
    return failures


@dataclass
class RealizationReport:
    m: int
    n: int
    mu: Fraction
    homomorphism: CheckResult
    cde_images: CheckResult
    rela: CheckResult
    generators: CheckResult
    lambda_c: Fraction
    expected_lambda_c: Fraction
    failing_cases: List[str] = field(default_factory=list)

    @property
    def lambda_c_check(self) -> CheckResult:
        return CheckResult(
            "lambda_c_closed_form", self.lambda_c == self.expected_lambda_c,
            self.expected_lambda_c, self.lambda_c,
        )

    @property
    def checks(self) -> List[CheckResult]:
        return [self.lambda_c_check, self.homomorphism, self.cde_images, self.rela, self.generators]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "mu": render_value(self.mu),
            "lambda_c": render_value(self.lambda_c),
            "expected_lambda_c": render_value(self.expected_lambda_c),
            "homomorphism": self.homomorphism.status,
            "rela": self.rela.status,
            "cde_images": self.cde_images.status,
            "generators": self.generators.status,
            "failing_cases": self.failing_cases,
        }


def _as_check(name: str, failures: List[str], total: int) -> CheckResult:
    return CheckResult(name, not failures, total, total - len(failures), failures[0] if failures else "")


def _symmetric_count(m: int, n: int) -> int:
    dim = sl_algebra(m, n).dim
    return dim * (dim + 1) // 2


def cde_images_check(realization: Realization, lambda_c: Fraction, jobs: int = 1) -> CheckResult:
    """π(C) = π(D) = 0 and π(E) = λ𝒦(A) on every basis square A."""
    m, n = realization.m, realization.n
    tasks = [(realization, Fraction(lambda_c), a) for a in range(sl_algebra(m, n).dim)]
    return _as_check("cde_images", _run_rows(_cde_failures, tasks, jobs), _symmetric_count(m, n))


def check_joseph_annihilated(
    m: int, n: int, mu=None, jobs: int = 1, lambda_c=None
) -> RealizationReport:
    """The Joseph generators at λᶜ act by zero on π_μ, μ = (n−m)/2 unless overridden.

    λᶜ is derived from the reductions of S unless given; the closed form
    −1/(8(m−n+1)) is recorded next to it.
    """
    check_case(m, n)
    if m - n <= 2:
        raise InvalidCaseError(f"the annihilation check needs m - n > 2, got {m - n}")
    mu = critical_mu(m, n) if mu is None else Fraction(mu)
    if lambda_c is None:
        lam_c = derive_lambda_c(m, n, jobs).lambda_c
        if lam_c is None:
            raise ReductionError(f"the reductions of S do not determine λᶜ for sl({m}|{n})")
    else:
        lam_c = Fraction(lambda_c)
    realization = build_realization(mu, m, n)
    dim = sl_algebra(m, n).dim
    tasks = [(realization, lam_c, a) for a in range(dim)]

    homomorphism = check_homomorphism(realization, jobs)
    cde = _run_rows(_cde_failures, tasks, jobs)
    rela = _run_rows(_rela_failures, tasks, jobs)
    generators = _run_rows(_generator_failures, tasks, jobs)
    symmetric_count = _symmetric_count(m, n)
    report = RealizationReport(
        m,
        n,
        mu,
        homomorphism,
        _as_check("cde_images", cde, symmetric_count),
        _as_check("rela", rela, dim * dim),
        _as_check("generators_annihilated", generators, symmetric_count),
        lambda_c=lam_c,
        expected_lambda_c=expected_lambda_c(m, n),
        failing_cases=(cde + rela + generators)[:20],
    )
    if not report.passed:
        logger.info("sl(%d|%d), μ = %s: %d failing cases", m, n, mu, len(cde) + len(rela) + len(generators))
    return report


# -- Casimir image and the cyclicity shadow -------------------------------------------


def casimir_image(realization: Realization) -> WeylOp:
    return realize_tensor(realization, casimir_tensor(realization.m, realization.n))


def casimir_commutes(realization: Realization) -> CheckResult:
    image = casimir_image(realization)
    algebra = sl_algebra(realization.m, realization.n)
    failures = [
        algebra.labels[a]
        for a, op in sorted(realization.images.items())
        if not supercommutator(image, op).is_zero()
    ]
    return CheckResult("casimir_central", not failures, 0, len(failures), ", ".join(failures[:5]))


def casimir_scalar(realization: Realization) -> Fraction:
    """Value of π(Casimir) on the constant polynomial."""
    one = WeylOp.one(realization.m, realization.n)
    return apply_to_polynomial(casimir_image(realization), one).constant_term()


def _monomials(m: int, n: int, degree: int) -> List[Tuple[int, ...]]:
    r = m + n - 1
    out: List[Tuple[int, ...]] = [()]
    for t in range(r):
        cap = 1 if t >= m - 1 else degree
        out = [xs + (e,) for xs in out for e in range(cap + 1) if sum(xs) + e <= degree]
    return out


def _closure(realization: Realization, start: WeylOp, degree: int) -> int:
    """Dimension of the span reached from ``start`` by π(basis), staying in degree ≤ ``degree``."""
    index: Dict[Tuple[int, ...], int] = {}

    def vector(poly: WeylOp) -> Dict[int, Fraction]:
        return {index.setdefault(xs, len(index)): c for (xs, _), c in poly.items()}

    echelon = SparseEchelon()
    frontier = [start]
    echelon.add(vector(start))
    while frontier:
        found = []
        for poly in frontier:
            for op in realization.images.values():
                image = apply_to_polynomial(op, poly)
                if image.is_zero() or image.degree() > degree:
                    continue
                if echelon.add(vector(image)):
                    found.append(image)
        frontier = found
    return echelon.rank


def _lower_to_constant(realization: Realization, xs: Tuple[int, ...]) -> Fraction:
    m, n = realization.m, realization.n
    r = m + n - 1
    poly = WeylOp(m, n, {(xs, (0,) * r): 1})
    while True:
        monos = [mono for mono, _ in poly.items()]
        if not monos or not any(monos[0][0]):
            return poly.constant_term()
        t = next(s for s, e in enumerate(monos[0][0]) if e)
        poly = apply_to_polynomial(realization.unit_images[(0, t + 1)], poly)


def cyclicity_shadow(realization: Realization, max_degree: int = 3) -> List[CheckResult]:
    """Finite shadow of simplicity in degrees ≤ ``max_degree``.

    Raising from the constant polynomial spans every polynomial of bounded degree,
    and π(g₊) lowers each monomial back to a nonzero constant.
    """
    m, n = realization.m, realization.n
    monomials = _monomials(m, n, max_degree)
    up = _closure(realization, WeylOp.one(m, n), max_degree)
    stuck = [xs for xs in monomials if _lower_to_constant(realization, xs) == 0]
    return [
        CheckResult("cyclic_from_constant", up == len(monomials), len(monomials), up),
        CheckResult(
            "lowers_to_constant",
            not stuck,
            0,
            len(stuck),
            ", ".join(str(xs) for xs in stuck[:5]),
        ),
    ]
