"""sl(m|n) as supertraceless super matrices.

The basis is fixed once per (m, n): off-diagonal matrix units E_ij in row-major
order, then the Cartan elements H_k = E_kk − (−1)^{|k|+|k+1|} E_{k+1,k+1}.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Sequence, Tuple

from ..exceptions import NotInSubspaceError
from ..linalg.exact import rank
from ..models.supermatrix import SuperMatrix, check_case, index_parity
from ..models.supertensor import SuperTensor, g_signature
from ..models.weight import Weight
from . import superspace

logger = logging.getLogger(__name__)

Coords = Dict[int, Fraction]


@dataclass(frozen=True, eq=False)
class SlAlgebra:
    """Basis, coordinates and adjoint structure constants of sl(m|n)."""

    m: int
    n: int
    basis: Tuple[SuperMatrix, ...]
    labels: Tuple[str, ...]
    parities: Tuple[int, ...]
    weights: Tuple[Weight, ...]
    unit_index: Mapping[Tuple[int, int], int]
    cartan_offset: int
    diagonal_coords: Tuple[Coords, ...]
    structure: Tuple[Tuple[Coords, ...], ...] = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return self.m + self.n

    def cartan_indices(self) -> range:
        return range(self.cartan_offset, self.dim)

    def simple_raising(self) -> List[int]:
        """Indices of E_{k,k+1}, the simple root vectors."""
        return [self.unit_index[(k, k + 1)] for k in range(self.size - 1)]

    def simple_lowering(self) -> List[int]:
        return [self.unit_index[(k + 1, k)] for k in range(self.size - 1)]

    def positive(self) -> List[int]:
        return [idx for (i, j), idx in sorted(self.unit_index.items()) if i < j]

    def coordinates(self, matrix: SuperMatrix) -> Coords:
        """Coefficients of a supertraceless matrix in the basis."""
        if matrix.supertrace() != 0:
            raise NotInSubspaceError(f"{matrix!r} has nonzero supertrace")
        coords: Coords = {}
        for (i, j), v in matrix.items():
            if i != j:
                coords[self.unit_index[(i, j)]] = v
            else:
                for c, w in self.diagonal_coords[i].items():
                    coords[c] = coords.get(c, Fraction(0)) + v * w
        return {k: v for k, v in coords.items() if v}

    def element(self, coords: Mapping[int, Fraction]) -> SuperMatrix:
        total: Dict[Tuple[int, int], Fraction] = {}
        for a, c in coords.items():
            for key, v in self.basis[a].items():
                total[key] = total.get(key, Fraction(0)) + c * v
        return SuperMatrix(self.m, self.n, total)

    def tensor_coordinates(self, tensor: SuperTensor) -> Dict[Tuple[int, ...], Fraction]:
        """Coordinates of a tensor of ⊗ᵏg in the product basis."""
        if not tensor.is_matrix_shaped():
            raise NotInSubspaceError(f"signature {tensor.signature} is not (V⊗V*)^k")
        out: Dict[Tuple[int, ...], Fraction] = {}
        for idx, value in tensor.items():
            per_pair = []
            for p in range(0, len(idx), 2):
                i, j = idx[p], idx[p + 1]
                if i != j:
                    per_pair.append(((self.unit_index[(i, j)], Fraction(1)),))
                else:
                    per_pair.append(tuple(self.diagonal_coords[i].items()))
            for combo in itertools.product(*per_pair):
                key = tuple(a for a, _ in combo)
                coeff = value
                for _, w in combo:
                    coeff = coeff * w
                out[key] = out.get(key, 0) + coeff
        return {k: v for k, v in out.items() if v != 0}

    def tensor_from_coordinates(self, coords: Mapping[Tuple[int, ...], Fraction], k: int) -> SuperTensor:
        out: Dict[Tuple[int, ...], Fraction] = {}
        for key, c in coords.items():
            parts = [list(self.basis[a].items()) for a in key]
            for combo in itertools.product(*parts):
                idx = tuple(x for (ij, _) in combo for x in ij)
                v = c
                for _, w in combo:
                    v = v * w
                out[idx] = out.get(idx, 0) + v
        return SuperTensor.build(self.m, self.n, g_signature(k), out)

    def ad(self, z: int, a: int) -> Coords:
        """Coordinates of [x_z, x_a]."""
        return self.structure[z][a]


def _cartan(m: int, n: int, k: int) -> SuperMatrix:
    sign = (-1) ** (index_parity(m, k) + index_parity(m, k + 1))
    return SuperMatrix(m, n, {(k, k): Fraction(1), (k + 1, k + 1): Fraction(-sign)})


@lru_cache(maxsize=None)
def sl_algebra(m: int, n: int) -> SlAlgebra:
    check_case(m, n)
    size = m + n
    basis: List[SuperMatrix] = []
    labels: List[str] = []
    weights: List[Weight] = []
    unit_index: Dict[Tuple[int, int], int] = {}
    for i in range(size):
        for j in range(size):
            if i != j:
                unit_index[(i, j)] = len(basis)
                basis.append(SuperMatrix(m, n, {(i, j): Fraction(1)}))
                labels.append(f"E{i + 1},{j + 1}")
                weights.append(superspace.unit_root(m, n, i, j))
    cartan_offset = len(basis)
    for k in range(size - 1):
        basis.append(_cartan(m, n, k))
        labels.append(f"H{k + 1}")
        weights.append(Weight.zero(m, n))
    parities = tuple(b.parity for b in basis)

    # coordinates of E_ii along the Cartan basis: c_k = d_k + s_{k-1} c_{k-1}
    diagonal: List[Coords] = []
    for i in range(size):
        coeffs: Coords = {}
        carry = Fraction(0)
        for k in range(size - 1):
            s = (-1) ** (index_parity(m, k - 1) + index_parity(m, k)) if k > 0 else 0
            carry = (Fraction(1) if k == i else Fraction(0)) + s * carry
            if carry:
                coeffs[cartan_offset + k] = carry
        diagonal.append(coeffs)

    algebra = SlAlgebra(
        m, n, tuple(basis), tuple(labels), parities, tuple(weights), unit_index,
        cartan_offset, tuple(diagonal), structure=(),
    )
    structure = tuple(
        tuple(algebra.coordinates(bracket(x, y)) for y in basis) for x in basis
    )
    object.__setattr__(algebra, "structure", structure)
    logger.debug("built sl(%d|%d): dim %d", m, n, len(basis))
    return algebra


def sl_basis(m: int, n: int) -> Tuple[SuperMatrix, ...]:
    return sl_algebra(m, n).basis


def _bracket_homogeneous(a: SuperMatrix, pa: int, b: SuperMatrix, pb: int) -> SuperMatrix:
    ab = a @ b
    ba = b @ a
    return ab + ba if pa * pb else ab - ba


def bracket(a: SuperMatrix, b: SuperMatrix) -> SuperMatrix:
    """Super commutator AB − (−1)^{|A||B|} BA, extended bilinearly."""
    total = SuperMatrix.zero(a.m, a.n)
    for pa, part_a in a.homogeneous_parts():
        for pb, part_b in b.homogeneous_parts():
            total = total + _bracket_homogeneous(part_a, pa, part_b, pb)
    return total


def supertrace(a: SuperMatrix) -> Fraction:
    return a.supertrace()


def str_pairing(a: SuperMatrix, b: SuperMatrix) -> Fraction:
    """Σ_{i,j} (−1)^{|i|} A_ij B_ji = str(AB)."""
    return (a @ b).supertrace()


def killing(a: SuperMatrix, b: SuperMatrix) -> Fraction:
    """⟨A, B⟩ = 2(m−n) str(AB)."""
    return 2 * (a.m - a.n) * str_pairing(a, b)


def adjoint_supertrace(a: SuperMatrix, b: SuperMatrix) -> Fraction:
    """str_g(ad A ∘ ad B) computed in the basis."""
    algebra = sl_algebra(a.m, a.n)
    total = Fraction(0)
    for idx, x in enumerate(algebra.basis):
        image = bracket(a, bracket(b, x))
        coeff = algebra.coordinates(image).get(idx, Fraction(0))
        total += -coeff if algebra.parities[idx] else coeff
    return total


def casimir_tensor(m: int, n: int) -> SuperTensor:
    """Σ_a x_a ⊗ x^a for the supertrace form, as Σ(−1)^{|k|} E_ik⊗E_ki − (1/(m−n)) I⊗I."""
    check_case(m, n)
    size = m + n
    inv = Fraction(1, m - n)
    comps: Dict[Tuple[int, ...], Fraction] = {}
    for i in range(size):
        for k in range(size):
            comps[(i, k, k, i)] = Fraction(-1 if index_parity(m, k) else 1)
    for i in range(size):
        for k in range(size):
            comps[(i, i, k, k)] = comps.get((i, i, k, k), Fraction(0)) - inv
    return SuperTensor(m, n, g_signature(2), comps)


def casimir_terms(m: int, n: int) -> List[Tuple[Fraction, SuperMatrix, SuperMatrix]]:
    """The Casimir tensor as a list of (c, X, Y) with X, Y matrix units."""
    return [
        (c, SuperMatrix(m, n, {(i, j): 1}), SuperMatrix(m, n, {(k, l): 1}))
        for (i, j, k, l), c in sorted(casimir_tensor(m, n).items())
    ]


def natural_casimir(m: int, n: int) -> Dict[str, Fraction]:
    """Casimir scalar on V next to the naive and shifted eigenvalue formulas."""
    check_case(m, n)
    size = m + n
    e1 = SuperMatrix(m, n, {(0, 0): 1})
    acted = sum((c * (x @ y @ e1)[(0, 0)] for c, x, y in casimir_terms(m, n)), Fraction(0))
    rho = superspace.rho(m, n)
    naive = 1 + 2 * rho.coords[0]
    shift = Fraction(1, m - n)
    shifted = Weight(
        m, n, tuple((1 if i == 0 else 0) - shift * (1 if i < m else -1) for i in range(size))
    )
    return {
        "action": acted,
        "expected": Fraction((m - n) ** 2 - 1, m - n),
        "naive": naive,
        "shifted": superspace.casimir_eigenvalue(shifted),
    }


def grade3(a: SuperMatrix) -> Tuple[SuperMatrix, SuperMatrix, SuperMatrix]:
    """Split by eigenvalues −1, 0, +1 of ad(E_11)."""
    minus, zero, plus = {}, {}, {}
    for (i, j), v in a.items():
        if i != 0 and j == 0:
            minus[(i, j)] = v
        elif i == 0 and j != 0:
            plus[(i, j)] = v
        else:
            zero[(i, j)] = v
    return (
        SuperMatrix(a.m, a.n, minus),
        SuperMatrix(a.m, a.n, zero),
        SuperMatrix(a.m, a.n, plus),
    )


def killing_gram_rank(m: int, n: int) -> int:
    basis = sl_basis(m, n)
    rows = [{j: killing(x, y) for j, y in enumerate(basis) if killing(x, y)} for x in basis]
    return rank(rows)
