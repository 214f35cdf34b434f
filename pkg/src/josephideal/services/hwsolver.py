"""Adjoint action on tensor powers of g, weight spaces and highest weight vectors.

Besides the tensor-level operations, most computations run in the product basis of
⊗ᵏg: a vector is a dict from k-tuples of basis indices to coefficients, and every
operator used here preserves weights, so linear algebra happens one weight space at
a time.
"""

import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..exceptions import InvalidCaseError, TensorShapeError
from ..linalg.exact import SparseEchelon
from ..linalg.modular import DEFAULT_PRIMES, MultiModularRank, dense_mod_p, nullspace_mod_p
from ..models.reports import SubspaceBasis, WeightSpaceEntry, WeightSpaceReport
from ..models.supermatrix import SuperMatrix, check_case, index_parity
from ..models.supertensor import SuperTensor, g_signature
from ..models.weight import Weight
from . import superspace
from .superalgebra import SlAlgebra, casimir_terms, sl_algebra
from .tensoralg import cartan_part, check_difference

logger = logging.getLogger(__name__)

WeightKey = Tuple[Fraction, ...]
BasisTuple = Tuple[int, ...]
CoordVector = Dict[BasisTuple, Fraction]


# -- tensor-level action -------------------------------------------------------------


def adjoint_act(z: SuperMatrix, tensor: SuperTensor) -> SuperTensor:
    """Action of Z ∈ g on T ∈ ⊗ᵏg by the super Leibniz rule."""
    if not tensor.is_matrix_shaped():
        raise TensorShapeError(f"signature {tensor.signature} is not (V⊗V*)^k")
    m = tensor.m
    pairs = tensor.pair_count
    out: Dict[Tuple[int, ...], object] = {}

    def add(key, value):
        out[key] = out[key] + value if key in out else value

    for pz, part in z.homogeneous_parts():
        by_col: Dict[int, List[Tuple[int, Fraction]]] = defaultdict(list)
        by_row: Dict[int, List[Tuple[int, Fraction]]] = defaultdict(list)
        for (a, b), v in part.items():
            by_col[b].append((a, v))
            by_row[a].append((b, v))
        for idx, value in tensor.items():
            prefix = 0
            for p in range(pairs):
                i, j = idx[2 * p], idx[2 * p + 1]
                pe = (index_parity(m, i) + index_parity(m, j)) % 2
                lead = -value if pz and prefix % 2 else value
                for a, za in by_col.get(i, ()):
                    add(idx[:2 * p] + (a, j) + idx[2 * p + 2:], lead * za)
                trail = -lead if pz and pe else lead
                for b, zb in by_row.get(j, ()):
                    add(idx[:2 * p] + (i, b) + idx[2 * p + 2:], -(trail * zb))
                prefix += pe
    return SuperTensor.build(m, tensor.n, tensor.signature, out)


def casimir_apply(tensor: SuperTensor) -> SuperTensor:
    """Action of the quadratic Casimir Σ c X·Y on a tensor of ⊗ᵏg."""
    total = SuperTensor.zero(tensor.m, tensor.n, tensor.signature)
    for c, x, y in casimir_terms(tensor.m, tensor.n):
        total = total + adjoint_act(x, adjoint_act(y, tensor)).scale(c)
    return total


# -- product-basis machinery ---------------------------------------------------------


def _weight_key(algebra: SlAlgebra, a: int) -> WeightKey:
    return algebra.weights[a].coords


@lru_cache(maxsize=None)
def weight_spaces(m: int, n: int, k: int) -> Dict[WeightKey, Tuple[BasisTuple, ...]]:
    """Basis tuples of ⊗ᵏg grouped by weight."""
    algebra = sl_algebra(m, n)
    keys = [_weight_key(algebra, a) for a in range(algebra.dim)]
    spaces: Dict[WeightKey, List[BasisTuple]] = defaultdict(list)
    for tup in product(range(algebra.dim), repeat=k):
        w = tuple(sum(c) for c in zip(*(keys[a] for a in tup)))
        spaces[w].append(tup)
    return {w: tuple(ts) for w, ts in spaces.items()}


def weight_space_dimensions(m: int, n: int, k: int) -> Dict[WeightKey, int]:
    return {w: len(ts) for w, ts in weight_spaces(m, n, k).items()}


def act_on_tuple(algebra: SlAlgebra, z: int, tup: BasisTuple) -> CoordVector:
    """Coordinates of x_z · (x_{a1} ⊗ ... ⊗ x_{ak})."""
    out: CoordVector = {}
    pz = algebra.parities[z]
    prefix = 0
    for p, a in enumerate(tup):
        sign = -1 if pz and prefix % 2 else 1
        for c, v in algebra.ad(z, a).items():
            key = tup[:p] + (c,) + tup[p + 1:]
            out[key] = out.get(key, Fraction(0)) + sign * v
        prefix += algebra.parities[a]
    return {k: v for k, v in out.items() if v}


def _raising_rows(
    algebra: SlAlgebra, space: Sequence[BasisTuple], raising: Iterable[int]
) -> List[Dict[int, Fraction]]:
    """One equation per (raising operator, target tuple): Σ_j coeff·v_j = 0."""
    rows: List[Dict[int, Fraction]] = []
    for z in raising:
        by_target: Dict[BasisTuple, Dict[int, Fraction]] = defaultdict(dict)
        for col, tup in enumerate(space):
            for target, v in act_on_tuple(algebra, z, tup).items():
                by_target[target][col] = v
        rows.extend(by_target[t] for t in sorted(by_target))
    return rows


def _symmetry_rows(algebra: SlAlgebra, space: Sequence[BasisTuple], part: str) -> List[Dict[int, Fraction]]:
    """Equations v_ba = ±(−1)^{|a||b|} v_ab selecting the (anti)symmetric square."""
    if part not in ("symmetric", "antisymmetric"):
        raise ValueError(f"unknown part {part!r}")
    column = {tup: j for j, tup in enumerate(space)}
    rows = []
    for j, (a, b) in enumerate(space):
        sign = -1 if algebra.parities[a] * algebra.parities[b] else 1
        if part == "antisymmetric":
            sign = -sign
        other = column[(b, a)]
        if other == j:
            if sign == -1:
                rows.append({j: Fraction(2)})
            continue
        rows.append({other: Fraction(1), j: Fraction(-sign)})
    return rows


def _kernel_vectors(
    rows: Iterable[Mapping[int, Fraction]], space: Sequence[BasisTuple]
) -> List[CoordVector]:
    echelon = SparseEchelon()
    echelon.extend(rows)
    return [{space[j]: v for j, v in vec.items()} for vec in echelon.nullspace(len(space))]


def highest_weight_vectors(
    k: int,
    weight: Weight,
    part: Optional[str] = None,
    raising: Optional[Sequence[int]] = None,
) -> SubspaceBasis:
    """Exact basis of the highest weight vectors of the given weight in ⊗ᵏg.

    ``part`` restricts k = 2 to the symmetric or antisymmetric square; ``raising``
    overrides the simple root vectors used for the highest-weight condition.
    """
    m, n = weight.m, weight.n
    algebra = sl_algebra(m, n)
    space = weight_spaces(m, n, k).get(weight.coords, ())
    if not space:
        return SubspaceBasis(g_signature(k), [])
    rows = _raising_rows(algebra, space, raising if raising is not None else algebra.simple_raising())
    if part is not None:
        if k != 2:
            raise ValueError("symmetric/antisymmetric parts are only defined for k = 2")
        rows += _symmetry_rows(algebra, space, part)
    vectors = [algebra.tensor_from_coordinates(v, k) for v in _kernel_vectors(rows, space)]
    logger.debug("hwv k=%d weight=%s part=%s: %d", k, weight.label(), part, len(vectors))
    return SubspaceBasis(g_signature(k), vectors)


def full_nplus_kernel_agrees(m: int, n: int, weight: Weight, k: int = 2) -> bool:
    """The kernel of all positive root vectors equals the kernel of the simple ones."""
    algebra = sl_algebra(m, n)
    simple = highest_weight_vectors(k, weight)
    full = highest_weight_vectors(k, weight, raising=algebra.positive())
    return simple.dimension == full.dimension


def verify_tensor_square(m: int, n: int) -> WeightSpaceReport:
    """Highest weight vectors of the symmetric and antisymmetric squares of g."""
    check_case(m, n)
    check_difference(m, n)
    algebra = sl_algebra(m, n)
    predicted = superspace.tensor_square_weights(m, n)
    spaces = weight_spaces(m, n, 2)
    report = WeightSpaceReport(m, n, total_dimension=sum(len(s) for s in spaces.values()))

    found: Dict[WeightKey, int] = {}
    for key in sorted(spaces):
        space = spaces[key]
        rows = _raising_rows(algebra, space, algebra.simple_raising())
        echelon = SparseEchelon()
        echelon.extend(rows)
        nullity = len(space) - echelon.rank
        if nullity:
            found[key] = nullity

    for part, weights in predicted.items():
        entries = []
        keys = sorted(set(found) | {w.coords for w in weights})
        for key in keys:
            weight = Weight(m, n, key)
            hwv = highest_weight_vectors(2, weight, part=part).dimension
            expected = sum(1 for w in weights if w == weight)
            if hwv or expected:
                entries.append(WeightSpaceEntry(weight, len(spaces.get(key, ())), hwv, expected))
        report.parts[part] = entries
    for weight in superspace.excluded_weights(m, n):
        hwv = highest_weight_vectors(2, weight).dimension
        report.excluded.append(WeightSpaceEntry(weight, len(spaces.get(weight.coords, ())), hwv, 0))
    for key in found:
        weight = Weight(m, n, key)
        if not superspace.is_dominant_regular(weight):
            logger.warning("highest weight vector at non-dominant weight %s", weight.label())
    if not report.consistent:
        logger.warning("tensor square of sl(%d|%d) deviates from prediction: %s",
                       m, n, [(p, e.weight.label()) for p, e in report.mismatches()])
    return report


# -- β₂ = g⊚g and β₃ -----------------------------------------------------------------


@lru_cache(maxsize=None)
def cartan_projector(m: int, n: int) -> Dict[BasisTuple, CoordVector]:
    """The Cartan projection on g⊗g: basis pair (a, b) ↦ coordinates of its Cartan part."""
    check_difference(m, n)
    algebra = sl_algebra(m, n)
    projector: Dict[BasisTuple, CoordVector] = {}
    for a in range(algebra.dim):
        for b in range(algebra.dim):
            pair = algebra.tensor_from_coordinates({(a, b): Fraction(1)}, 2)
            image = algebra.tensor_coordinates(cartan_part(pair))
            if image:
                projector[(a, b)] = image
    return projector


def cartan_rank(m: int, n: int) -> int:
    """dim β₂, the rank of the Cartan projection."""
    dim = sl_algebra(m, n).dim
    columns = defaultdict(dict)
    for (a, b), image in cartan_projector(m, n).items():
        for key, v in image.items():
            columns[(a, b)][key[0] * dim + key[1]] = v
    echelon = SparseEchelon()
    echelon.extend(columns.values())
    return echelon.rank


def _offcartan_on(tup: BasisTuple, position: int, projector) -> CoordVector:
    """(1 − P_cartan) applied to factors ``position``, ``position+1`` of a basis tuple."""
    pair = tup[position:position + 2]
    out: CoordVector = {tup: Fraction(1)}
    for key, v in projector.get(pair, {}).items():
        new = tup[:position] + key + tup[position + 2:]
        out[new] = out.get(new, Fraction(0)) - v
    return {k: v for k, v in out.items() if v}


def _offcartan_rows(space: Sequence[BasisTuple], position: int, projector) -> List[Dict[int, Fraction]]:
    """Matrix of the off-Cartan projection on one weight space, as rows."""
    index = {tup: j for j, tup in enumerate(space)}
    rows: Dict[int, Dict[int, Fraction]] = defaultdict(dict)
    for col, tup in enumerate(space):
        for key, v in _offcartan_on(tup, position, projector).items():
            rows[index[key]][col] = v
    return [rows[r] for r in sorted(rows)]


def _transpose(rows: Sequence[Mapping[int, Fraction]]) -> List[Dict[int, Fraction]]:
    cols: Dict[int, Dict[int, Fraction]] = defaultdict(dict)
    for r, row in enumerate(rows):
        for c, v in row.items():
            cols[c][r] = v
    return [cols[c] for c in sorted(cols)]


@dataclass
class Beta3Block:
    weight: WeightKey
    dimension: int
    beta_dimension: int
    ideal_dimension: int
    union_rank: int
    hwv: int
    ranks_agree: bool

    @property
    def direct(self) -> bool:
        return (
            self.beta_dimension + self.ideal_dimension == self.dimension
            and self.union_rank == self.dimension
        )


@dataclass
class Beta3Report:
    m: int
    n: int
    total_dimension: int
    beta_dimension: int = 0
    ideal_dimension: int = 0
    hwv_weights: Dict[str, int] = field(default_factory=dict)
    top_weight: str = ""
    top_vector_found: bool = False
    primes_agree: bool = True
    blocks: List[Beta3Block] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.hwv_weights == {self.top_weight: 1}
            and self.beta_dimension + self.ideal_dimension == self.total_dimension
            and all(b.direct for b in self.blocks)
            and self.top_vector_found
            and self.primes_agree
        )

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "total_dimension": self.total_dimension,
            "beta_dimension": self.beta_dimension,
            "ideal_dimension": self.ideal_dimension,
            "hwv_weights": self.hwv_weights,
            "top_weight": self.top_weight,
            "top_vector_found": self.top_vector_found,
            "primes_agree": self.primes_agree,
            "passed": self.passed,
        }


def _union_rank(kernel_source, images, size, primes, mem_cap_mb) -> MultiModularRank:
    """Rank of ker(kernel_source) + span(images), with the kernel recomputed mod each prime."""
    ranks = {}
    for p in primes:
        kernel = nullspace_mod_p(dense_mod_p(kernel_source, size, p), p)
        kernel_rows = [{j: Fraction(int(v)) for j, v in enumerate(row) if v} for row in kernel]
        ranks[p] = MultiModularRank.compute(kernel_rows + images, size, (p,), mem_cap_mb).ranks[p]
    result = MultiModularRank(ranks)
    if not result.agreed:
        logger.warning("union ranks disagree across primes: %s", ranks)
    return result


def _beta3_block(args) -> Beta3Block:
    m, n, key, primes, mem_cap_mb, dominant = args
    algebra = sl_algebra(m, n)
    projector = cartan_projector(m, n)
    space = weight_spaces(m, n, 3)[key]
    size = len(space)
    off12 = _offcartan_rows(space, 0, projector)
    off23 = _offcartan_rows(space, 1, projector)
    stacked = MultiModularRank.compute(off12 + off23, size, primes, mem_cap_mb)
    beta_dim = size - stacked.rank
    images = _transpose(off12) + _transpose(off23)
    ideal = MultiModularRank.compute(images, size, primes, mem_cap_mb)
    ranks = [stacked, ideal]
    union_rank = ideal.rank
    hwv = 0
    if beta_dim:
        union = _union_rank(off12 + off23, images, size, primes, mem_cap_mb)
        union_rank = union.rank
        ranks.append(union)
        if dominant:
            raising = _raising_rows(algebra, space, algebra.simple_raising())
            with_raising = MultiModularRank.compute(raising + off12 + off23, size, primes, mem_cap_mb)
            ranks.append(with_raising)
            hwv = size - with_raising.rank
    return Beta3Block(key, size, beta_dim, ideal.rank, union_rank, hwv, all(r.agreed for r in ranks))


def beta3_check(
    m: int,
    n: int,
    mem_cap_mb: int = 2048,
    primes: Sequence[int] = DEFAULT_PRIMES,
    jobs: int = 1,
) -> Beta3Report:
    """β₃ = β₂⊗g ∩ g⊗β₂ and I₃ = I₂⊗g + g⊗I₂ inside ⊗³g, one weight space at a time."""
    check_case(m, n)
    if m - n <= 2:
        raise InvalidCaseError(f"β₃ check needs m - n > 2, got {m - n}")
    spaces = weight_spaces(m, n, 3)
    report = Beta3Report(m, n, total_dimension=sum(len(s) for s in spaces.values()))
    top = superspace.lambda_k(3, m, n)
    report.top_weight = top.label()
    cartan_projector(m, n)
    tasks = []
    for key in sorted(spaces):
        dominant = superspace.is_dominant_regular(Weight(m, n, key))
        tasks.append((m, n, key, tuple(primes), mem_cap_mb, dominant))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            blocks = list(executor.map(_beta3_block, tasks))
    else:
        blocks = [_beta3_block(t) for t in tasks]
    for block in blocks:
        report.blocks.append(block)
        report.beta_dimension += block.beta_dimension
        report.ideal_dimension += block.ideal_dimension
        report.primes_agree = report.primes_agree and block.ranks_agree
        if block.hwv:
            label = Weight(m, n, block.weight).label()
            report.hwv_weights[label] = report.hwv_weights.get(label, 0) + block.hwv
        logger.debug("β₃ block %s: dim %d, β %d, I %d", block.weight, block.dimension,
                     block.beta_dimension, block.ideal_dimension)
    report.top_vector_found = top_vector_in_beta3(m, n) is not None
    logger.info("β₃ for sl(%d|%d): dim β₃ %d, dim I₃ %d, hwv %s", m, n,
                report.beta_dimension, report.ideal_dimension, report.hwv_weights)
    return report


def top_vector_in_beta3(m: int, n: int) -> Optional[SuperTensor]:
    """Exact highest weight vector of weight λ³ in β₃, or None when it is not unique."""
    algebra = sl_algebra(m, n)
    projector = cartan_projector(m, n)
    top = superspace.lambda_k(3, m, n)
    space = weight_spaces(m, n, 3).get(top.coords, ())
    rows = _raising_rows(algebra, space, algebra.simple_raising())
    rows += _offcartan_rows(space, 0, projector) + _offcartan_rows(space, 1, projector)
    kernel = _kernel_vectors(rows, space)
    if len(kernel) != 1:
        return None
    return algebra.tensor_from_coordinates(kernel[0], 3)
