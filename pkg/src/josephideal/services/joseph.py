"""The quadratic ideal family J_λ, the antiautomorphism τ, and the derivation of λᶜ."""

import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from ..exceptions import InvalidCaseError, NotInSubspaceError, ReductionError, TensorShapeError
from ..linalg.exact import SparseEchelon
from ..models.filtered import FilteredElement
from ..models.lambda_linear import LambdaLinear
from ..models.reports import CheckResult, check_true, render_value
from ..models.supermatrix import SuperMatrix, check_case, index_parity
from ..models.supertensor import SlotPermutation, SuperTensor, g_signature
from .hwsolver import cartan_rank
from .superalgebra import bracket, killing, sl_algebra
from .tensoralg import (
    bracket_pair,
    cartan_part,
    cartan_product,
    check_difference,
    contract_str,
    killing_pair,
    permute_signed,
    project_offcartan,
    scalar_of,
    tensor_product,
)

logger = logging.getLogger(__name__)

LAMBDA = LambdaLinear.lam()


def expected_lambda_c(m: int, n: int) -> Fraction:
    return Fraction(-1, 8 * (m - n + 1))


def generator(x: SuperMatrix, y: SuperMatrix) -> FilteredElement:
    """X⊗Y − X⊚Y − ½[X,Y] − λ⟨X,Y⟩."""
    check_difference(x.m, x.n)
    if x.supertrace() != 0 or y.supertrace() != 0:
        raise NotInSubspaceError("generators are defined for X, Y in sl(m|n)")
    xy = tensor_product(x, y)
    return FilteredElement(
        xy - cartan_product(x, y),
        SuperTensor.from_matrix(bracket(x, y)).scale(Fraction(-1, 2)),
        LambdaLinear(0, -killing(x, y)),
    )


def _reversal(k: int) -> SlotPermutation:
    return SlotPermutation(tuple(s for f in reversed(range(k)) for s in (2 * f, 2 * f + 1)))


def tau(element: Union[SuperTensor, FilteredElement]):
    """Canonical antiautomorphism: reverse the g-factors with Koszul sign, times (−1)^k."""
    if isinstance(element, FilteredElement):
        return FilteredElement(tau(element.degree2), tau(element.degree1), element.degree0)
    if not element.is_matrix_shaped():
        raise TensorShapeError(f"signature {element.signature} is not (V⊗V*)^k")
    k = element.pair_count
    if k == 0:
        return element
    reversed_tensor = permute_signed(element, _reversal(k))
    return -reversed_tensor if k % 2 else reversed_tensor


def tau_stability(m: int, n: int) -> CheckResult:
    """τ(generator(X,Y)) = (−1)^{|X||Y|} generator(Y,X) on all basis pairs."""
    algebra = sl_algebra(m, n)
    cache: Dict[Tuple[int, int], FilteredElement] = {}

    def gen(a: int, b: int) -> FilteredElement:
        if (a, b) not in cache:
            cache[(a, b)] = generator(algebra.basis[a], algebra.basis[b])
        return cache[(a, b)]

    failures = []
    for a in range(algebra.dim):
        for b in range(a, algebra.dim):
            sign = -1 if algebra.parities[a] * algebra.parities[b] else 1
            if tau(gen(a, b)) != gen(b, a).scale(sign):
                failures.append(f"({algebra.labels[a]}, {algebra.labels[b]})")
    return CheckResult(
        "tau_stability",
        not failures,
        expected=0,
        actual=len(failures),
        detail=", ".join(failures[:5]),
    )


def generator_span_check(m: int, n: int) -> List[CheckResult]:
    """Degree-2 parts lie in I₂ and span a space of dimension dim g⊗g − dim β₂."""
    algebra = sl_algebra(m, n)
    dim = algebra.dim
    echelon = SparseEchelon()
    fixed = True
    for a in range(dim):
        for b in range(dim):
            part = generator(algebra.basis[a], algebra.basis[b]).degree2
            if project_offcartan(part) != part:
                fixed = False
            coords = algebra.tensor_coordinates(part)
            echelon.add({x * dim + y: v for (x, y), v in coords.items()})
    expected = dim * dim - cartan_rank(m, n)
    return [
        check_true("generator_degree2_in_I2", fixed),
        CheckResult("generator_span_dimension", echelon.rank == expected, expected, echelon.rank),
    ]


# -- the tensor S ---------------------------------------------------------------------


def s_tensor(t: SuperMatrix) -> SuperTensor:
    """The degree-3 tensor whose two reductions modulo J_λ determine λᶜ.

    Components S[a,b,c,d,e,f] are coefficients of E_ab ⊗ E_cd ⊗ E_ef.
    """
    m, n = t.m, t.n
    if t.supertrace() != 0:
        raise NotInSubspaceError("S is built from an element of sl(m|n)")
    if m == n:
        raise InvalidCaseError("S needs m ≠ n")
    size = m + n
    inv = Fraction(1, m - n)
    par = [index_parity(m, i) for i in range(size)]
    out: Dict[Tuple[int, ...], Fraction] = defaultdict(Fraction)
    entries = list(t.items())
    idx = range(size)

    def sgn(e: int) -> int:
        return -1 if e % 2 else 1

    for (p, q), v in entries:
        for x in idx:
            for y in idx:
                # (−1)^{|d|} δ^e_d δ^c_f T^a_b : a=p, b=q, c=x, d=y
                out[(p, q, x, y, y, x)] += sgn(par[y]) * v
                # −(1/N) δ^c_d δ^e_f T^a_b
                out[(p, q, x, x, y, y)] -= inv * v
                # −(−1)^{|b|+(|a|+|b|)(|c|+|d|)} δ^e_b δ^a_f T^c_d : c=p, d=q, a=x, b=y
                out[(x, y, p, q, y, x)] -= sgn(par[y] + (par[x] + par[y]) * (par[p] + par[q])) * v
                # (1/N) δ^a_b δ^e_f T^c_d
                out[(x, x, p, q, y, y)] += inv * v
                # (−1)^{|b|+(|a|+|b|)|c|+|d||e|} δ^a_d δ^e_b T^c_f : c=p, f=q, a=d=x, b=e=y
                out[(x, y, p, x, y, q)] += sgn(par[y] + (par[x] + par[y]) * par[p] + par[x] * par[y]) * v
                # −(1/N)(−1)^{|d|+(|a|+|b|)(|c|+|d|)} δ^a_d δ^e_f T^c_b : c=p, b=q, a=d=x, e=f=y
                out[(x, q, p, x, y, y)] -= inv * sgn(par[x] + (par[x] + par[q]) * (par[p] + par[x])) * v
                # −(−1)^{(|c|+|d|)|b|+|d|+|b||e|} δ^c_b δ^e_d T^a_f : a=p, f=q, b=c=x, d=e=y
                out[(p, x, x, y, y, q)] -= sgn((par[x] + par[y]) * par[x] + par[y] + par[x] * par[y]) * v
                # (1/N)(−1)^{|b|} δ^c_b δ^e_f T^a_d : a=p, d=q, b=c=x, e=f=y
                out[(p, x, x, q, y, y)] += inv * sgn(par[x]) * v
    return SuperTensor(m, n, g_signature(3), dict(out))


def cartan_part_at(tensor: SuperTensor, position: int) -> SuperTensor:
    """Cartan part of the factor pair (position, position+1) of a tensor of ⊗ᵏg."""
    if not tensor.is_matrix_shaped() or not 0 <= position < tensor.pair_count - 1:
        raise TensorShapeError(f"no factor pair at position {position}")
    a = 2 * position
    groups: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Dict[Tuple[int, ...], object]] = defaultdict(dict)
    for idx, value in tensor.items():
        groups[(idx[:a], idx[a + 4:])][idx[a:a + 4]] = value
    out: Dict[Tuple[int, ...], object] = {}
    for (head, tail), comps in groups.items():
        piece = cartan_part(SuperTensor.build(tensor.m, tensor.n, g_signature(2), comps))
        for key, value in piece.items():
            out[head + key + tail] = value
    return SuperTensor.build(tensor.m, tensor.n, tensor.signature, out)


def s_tensor_postconditions(t: SuperMatrix, s: Optional[SuperTensor] = None) -> List[CheckResult]:
    s = s if s is not None else s_tensor(t)
    swap12 = permute_signed(s, SlotPermutation((2, 3, 0, 1, 4, 5)))
    return [
        check_true("str_12_vanishes", contract_str(s, 0, 1).is_zero()),
        check_true("str_34_vanishes", contract_str(s, 2, 3).is_zero()),
        check_true("str_56_vanishes", contract_str(s, 4, 5).is_zero()),
        check_true("antisymmetric_in_first_pair", swap12 == -s),
        check_true("cartan_12_vanishes", cartan_part_at(s, 0).is_zero()),
        check_true("cartan_23_vanishes", cartan_part_at(s, 1).is_zero()),
    ]


# -- reductions modulo J_λ ------------------------------------------------------------


def _substitute(tensor: SuperTensor, position: int) -> Tuple[SuperTensor, SuperTensor]:
    """X⊗Y → ½[X,Y] + λ⟨X,Y⟩ on one factor pair whose Cartan part vanishes."""
    if not cartan_part_at(tensor, position).is_zero():
        raise ReductionError(f"factor pair at position {position} has a nonzero Cartan part")
    half_bracket = bracket_pair(tensor, position).scale(Fraction(1, 2))
    lam_term = killing_pair(tensor, position).scale(LAMBDA)
    return half_bracket, lam_term


def reduce_pair(tensor: SuperTensor, pair: str) -> FilteredElement:
    """Reduce a degree-3 tensor modulo J_λ to degree ≤ 1.

    ``left`` substitutes on factors (1,2); ``right`` on (2,3). The degree-2
    remainder is then reduced once more and must have no Cartan content.
    """
    if tensor.signature != g_signature(3):
        raise TensorShapeError(f"expected a degree-3 tensor, got {tensor.signature}")
    positions = {"left": 0, "right": 1}
    if pair not in positions:
        raise ValueError(f"pair must be 'left' or 'right', not {pair!r}")
    degree2, lam_degree1 = _substitute(tensor, positions[pair])
    try:
        half_bracket, lam_degree0 = _substitute(degree2, 0)
    except ReductionError as exc:
        raise ReductionError(f"residual Cartan content after the {pair} reduction") from exc
    degree0 = lam_degree0[()] if lam_degree0.components else LambdaLinear()
    return FilteredElement(
        SuperTensor.zero(tensor.m, tensor.n, g_signature(2)),
        lam_degree1 + half_bracket,
        LambdaLinear.coerce(degree0),
    )


@dataclass
class TReduction:
    label: str
    left: Optional[LambdaLinear]
    right: Optional[LambdaLinear]
    degree0_vanishes: bool

    @property
    def proportional(self) -> bool:
        return self.left is not None and self.right is not None

    def solve(self) -> Optional[Fraction]:
        if not self.proportional:
            return None
        return self.left.solve_equal(self.right)


@dataclass
class LambdaCReport:
    m: int
    n: int
    lambda_c: Optional[Fraction] = None
    expected: Optional[Fraction] = None
    left_scalar: Optional[LambdaLinear] = None
    right_scalar: Optional[LambdaLinear] = None
    per_t_consistent: bool = False
    reductions: List[TReduction] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.per_t_consistent and self.lambda_c == self.expected

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "lambda_c": render_value(self.lambda_c),
            "expected": render_value(self.expected),
            "left_scalar": render_value(self.left_scalar),
            "right_scalar": render_value(self.right_scalar),
            "per_T_consistent": self.per_t_consistent,
        }


def _reduce_basis_element(args: Tuple[int, int, int]) -> TReduction:
    m, n, a = args
    algebra = sl_algebra(m, n)
    t = algebra.basis[a]
    s = s_tensor(t)
    reference = SuperTensor.from_matrix(t)
    left = reduce_pair(s, "left")
    right = reduce_pair(s, "right")
    ls = scalar_of(left.degree1, reference)
    rs = scalar_of(right.degree1, reference)
    return TReduction(
        algebra.labels[a],
        LambdaLinear.coerce(ls) if ls is not None else None,
        LambdaLinear.coerce(rs) if rs is not None else None,
        not left.degree0 and not right.degree0,
    )


def derive_lambda_c(m: int, n: int, jobs: int = 1) -> LambdaCReport:
    """Equate the left and right reductions of S(T) for every basis T and solve for λ."""
    check_case(m, n)
    if m - n <= 2:
        raise InvalidCaseError(f"λᶜ derivation needs m - n > 2, got {m - n}")
    algebra = sl_algebra(m, n)
    tasks = [(m, n, a) for a in range(algebra.dim)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            reductions = list(executor.map(_reduce_basis_element, tasks))
    else:
        reductions = [_reduce_basis_element(t) for t in tasks]

    report = LambdaCReport(m, n, expected=expected_lambda_c(m, n), reductions=reductions)
    bad = [r.label for r in reductions if not r.proportional or not r.degree0_vanishes]
    if bad:
        logger.warning("reductions not proportional to T for %s", bad[:5])
        return report
    pairs = {(r.left, r.right) for r in reductions}
    if len(pairs) != 1:
        logger.warning("reductions differ across basis elements: %d variants", len(pairs))
        return report
    left, right = pairs.pop()
    try:
        lam = left.solve_equal(right)
    except ArithmeticError as exc:
        raise ReductionError(f"left {left} and right {right} agree for every λ") from exc
    report.lambda_c = lam
    report.left_scalar = left
    report.right_scalar = right
    report.per_t_consistent = True
    logger.info("sl(%d|%d): left %s, right %s, λᶜ = %s", m, n, left, right, lam)
    return report
