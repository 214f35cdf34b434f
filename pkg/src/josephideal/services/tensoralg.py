"""Super tensor calculus on products of V and V*, and the projectors of g⊗g.

Conventions: a component ``T[i, j, k, l]`` of a (V,V*,V,V*) tensor is the
coefficient of E_ij ⊗ E_kl. Every sign comes from :meth:`SlotPermutation.koszul_exponent`.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple, Union

from ..exceptions import InvalidCaseError, NotInSubspaceError, TensorShapeError
from ..models.lambda_linear import LambdaLinear
from ..models.supermatrix import SuperMatrix, index_parity
from ..models.supertensor import Slot, SlotPermutation, SuperTensor, g_signature

logger = logging.getLogger(__name__)

PAIR_SWAP = SlotPermutation((2, 3, 0, 1))
UPPER_SWAP = SlotPermutation((2, 1, 0, 3))

MatrixLike = Union[SuperMatrix, SuperTensor]


def as_tensor(x: MatrixLike) -> SuperTensor:
    if isinstance(x, SuperMatrix):
        return SuperTensor.from_matrix(x)
    if x.signature != g_signature(1):
        raise TensorShapeError(f"expected a (V, V*) tensor, got {x.signature}")
    return x


def check_difference(m: int, n: int):
    if abs(m - n) <= 2:
        raise InvalidCaseError(f"|m-n| = {abs(m - n)} but the projectors need |m-n| > 2")


# -- signed slot permutations and contractions ---------------------------------------


def permute_signed(tensor: SuperTensor, perm: SlotPermutation) -> SuperTensor:
    """Rearrange slots (new slot r is old slot perm.order[r]) with the Koszul sign."""
    if len(perm) != tensor.rank:
        raise TensorShapeError(f"permutation of {len(perm)} slots applied to {tensor.rank}")
    order = perm.order
    signature = tuple(tensor.signature[o] for o in order)
    m = tensor.m
    out = {}
    for idx, value in tensor.items():
        parities = [0 if i < m else 1 for i in idx]
        new = tuple(idx[o] for o in order)
        if perm.koszul_exponent(parities) % 2:
            value = -value
        out[new] = value
    return SuperTensor.build(tensor.m, tensor.n, signature, out)


def pair_swap(tensor: SuperTensor) -> SuperTensor:
    """(1,2) ↔ (3,4) on a 4-slot tensor."""
    return permute_signed(tensor, PAIR_SWAP)


def upper_swap(tensor: SuperTensor) -> SuperTensor:
    """Exchange slots 1 and 3, the two upper indices."""
    return permute_signed(tensor, UPPER_SWAP)


def super_symmetrize(tensor: SuperTensor) -> SuperTensor:
    return (tensor + pair_swap(tensor)).scale(Fraction(1, 2))


def super_antisymmetrize(tensor: SuperTensor) -> SuperTensor:
    return (tensor - pair_swap(tensor)).scale(Fraction(1, 2))


def contract_str(tensor: SuperTensor, i: int, j: int) -> SuperTensor:
    """Partial supertrace over slots ``i`` and ``j`` (0-based, one V and one V*).

    The V* slot is moved to the front and the V slot next to it, with the Koszul
    sign of that move; the pair is then contracted with δ.
    """
    sig = tensor.signature
    if i == j or not (0 <= i < len(sig) and 0 <= j < len(sig)):
        raise TensorShapeError(f"cannot contract slots {i} and {j} of a {len(sig)}-slot tensor")
    if {sig[i], sig[j]} != {Slot.V, Slot.VSTAR}:
        raise TensorShapeError(f"slots {i} and {j} are {sig[i].value} and {sig[j].value}")
    v_slot, star_slot = (i, j) if sig[i] == Slot.V else (j, i)
    rest = [s for s in range(len(sig)) if s not in (i, j)]
    perm = SlotPermutation((star_slot, v_slot, *rest))
    m = tensor.m
    out: Dict[Tuple[int, ...], object] = {}
    for idx, value in tensor.items():
        if idx[v_slot] != idx[star_slot]:
            continue
        parities = [0 if x < m else 1 for x in idx]
        if perm.koszul_exponent(parities) % 2:
            value = -value
        key = tuple(idx[s] for s in rest)
        out[key] = out[key] + value if key in out else value
    return SuperTensor.build(tensor.m, tensor.n, tuple(sig[s] for s in rest), out)


def str_23(tensor: SuperTensor) -> SuperTensor:
    return contract_str(tensor, 1, 2)


def str_12(tensor: SuperTensor) -> SuperTensor:
    return contract_str(tensor, 0, 1)


def str_34(tensor: SuperTensor) -> SuperTensor:
    return contract_str(tensor, 2, 3)


def full_supertrace(tensor: SuperTensor):
    """Supertrace of a (V, V*) tensor as a scalar."""
    return contract_str(tensor, 0, 1)[()]


def kappa(tensor: SuperTensor):
    """𝒦 = 2(m−n) str_{1,4} ∘ str_{2,3} on (V,V*,V,V*) tensors."""
    if tensor.signature != g_signature(2):
        raise TensorShapeError(f"𝒦 needs signature (V,V*,V,V*), got {tensor.signature}")
    return full_supertrace(str_23(tensor)) * (2 * (tensor.m - tensor.n))


# -- maps between adjacent g-factors -------------------------------------------------


def _check_pair(tensor: SuperTensor, position: int):
    if not tensor.is_matrix_shaped():
        raise TensorShapeError(f"signature {tensor.signature} is not (V⊗V*)^k")
    if not 0 <= position < tensor.pair_count - 1:
        raise TensorShapeError(f"no adjacent factors at position {position}")


def bracket_pair(tensor: SuperTensor, position: int) -> SuperTensor:
    """Replace factors ``position`` and ``position+1`` (0-based) by their bracket.

    [E_ij, E_kl] = δ_jk E_il − (−1)^{(|i|+|j|)(|k|+|l|)} δ_li E_kj.
    """
    _check_pair(tensor, position)
    m = tensor.m
    a = 2 * position
    out: Dict[Tuple[int, ...], object] = {}

    def add(key, value):
        out[key] = out[key] + value if key in out else value

    for idx, value in tensor.items():
        i, j, k, l = idx[a:a + 4]
        head, tail = idx[:a], idx[a + 4:]
        if j == k:
            add(head + (i, l) + tail, value)
        if l == i:
            p = (index_parity(m, i) + index_parity(m, j)) * (index_parity(m, k) + index_parity(m, l))
            add(head + (k, j) + tail, value if p % 2 else -value)
    return SuperTensor.build(m, tensor.n, g_signature(tensor.pair_count - 1), out)


def killing_pair(tensor: SuperTensor, position: int) -> SuperTensor:
    """Replace factors ``position`` and ``position+1`` by ⟨X, Y⟩ = 2(m−n) str(XY)."""
    _check_pair(tensor, position)
    m = tensor.m
    a = 2 * position
    factor = 2 * (m - tensor.n)
    out: Dict[Tuple[int, ...], object] = {}
    for idx, value in tensor.items():
        i, j, k, l = idx[a:a + 4]
        if j != k or l != i:
            continue
        key = idx[:a] + idx[a + 4:]
        term = value * (-factor if index_parity(m, i) else factor)
        out[key] = out[key] + term if key in out else term
    return SuperTensor.build(m, tensor.n, g_signature(tensor.pair_count - 2), out)


def tensor_product(*factors: MatrixLike) -> SuperTensor:
    result = as_tensor(factors[0])
    for f in factors[1:]:
        result = result.tensor(as_tensor(f))
    return result


# -- φ, ψ, χ and the decomposition of g⊙g --------------------------------------------


@dataclass(frozen=True)
class PhiConstants:
    a: Fraction
    c1: Fraction
    c2: Fraction

    @classmethod
    def for_difference(cls, d: int) -> "PhiConstants":
        """Constants for m − n = d, defined when d² ∉ {1, 4} and d ≠ 0."""
        d = Fraction(d)
        if d in (0, 1, -1, 2, -2):
            raise InvalidCaseError(f"φ is undefined for m - n = {d}")
        return cls(
            a=d / (d * d - 4),
            c1=(d * d + 2) / (d * (1 - d * d)),
            c2=Fraction(3) / (d * d - 1),
        )

    def perturbed(self, which: str, amount=Fraction(1, 1000)) -> "PhiConstants":
        values = {"a": self.a, "c1": self.c1, "c2": self.c2}
        values[which] += Fraction(amount)
        return PhiConstants(**values)


def phi_conditions(d: int, constants: PhiConstants) -> Tuple[Fraction, Fraction, Fraction]:
    """Residuals of a(d − 4/d) = 1, 1 + d c₁ + c₂ = 0 and c₁ + d c₂ − 2/d = 0."""
    d = Fraction(d)
    a, c1, c2 = constants.a, constants.c1, constants.c2
    return (a * (d - 4 / d) - 1, 1 + d * c1 + c2, c1 + d * c2 - 2 / d)


def _term_a(b: SuperTensor) -> SuperTensor:
    """Σ (−1)^{|k|} B_il E_ik ⊗ E_kl."""
    m, size = b.m, b.m + b.n
    out = {}
    for (i, l), value in b.items():
        for k in range(size):
            out[(i, k, k, l)] = -value if index_parity(m, k) else value
    return SuperTensor.build(m, b.n, g_signature(2), out)


def _permutation_tensor(m: int, n: int) -> SuperTensor:
    """P = Σ (−1)^{|k|} E_ik ⊗ E_ki."""
    size = m + n
    comps = {
        (i, k, k, i): Fraction(-1 if index_parity(m, k) else 1)
        for i in range(size)
        for k in range(size)
    }
    return SuperTensor.build(m, n, g_signature(2), comps)


def phi(b: MatrixLike, constants: PhiConstants = None) -> SuperTensor:
    """The morphism V⊗V* → g⊙g with str_{2,3}∘φ = id and str_{1,2}∘φ = 0."""
    b = as_tensor(b)
    m, n = b.m, b.n
    check_difference(m, n)
    d = m - n
    c = constants or PhiConstants.for_difference(d)
    ident = SuperTensor.kronecker(m, n)
    term = _term_a(b)
    trace = full_supertrace(b)
    total = term + pair_swap(term)
    total = total - (b.tensor(ident) + ident.tensor(b)).scale(Fraction(2, d))
    if trace != 0:
        total = total + _permutation_tensor(m, n).scale(c.c1 * trace)
        total = total + ident.tensor(ident).scale(c.c2 * trace)
    return total.scale(c.a)


def phi_identity(m: int, n: int) -> SuperTensor:
    """φ(δ)."""
    return phi(SuperTensor.kronecker(m, n))


def psi(b: MatrixLike) -> SuperTensor:
    """The morphism g → g∧g with str_{2,3}∘ψ = id."""
    b = as_tensor(b)
    if b.m == b.n:
        raise InvalidCaseError("ψ needs m ≠ n")
    if full_supertrace(b) != 0:
        raise NotInSubspaceError("ψ is defined on supertraceless tensors only")
    term = _term_a(b)
    return (term - pair_swap(term)).scale(Fraction(1, b.m - b.n))


def in_g_pairs(tensor: SuperTensor) -> bool:
    """Every (V, V*) pair has vanishing partial supertrace."""
    return all(
        contract_str(tensor, 2 * p, 2 * p + 1).is_zero() for p in range(tensor.pair_count)
    )


def is_super_symmetric(tensor: SuperTensor) -> bool:
    return pair_swap(tensor) == tensor


def _require_sym(a: SuperTensor):
    if a.signature != g_signature(2):
        raise TensorShapeError(f"expected a (V,V*,V,V*) tensor, got {a.signature}")
    if not is_super_symmetric(a):
        raise NotInSubspaceError("tensor is not super-symmetric across its slot pairs")
    if not in_g_pairs(a):
        raise NotInSubspaceError("a slot pair of the tensor is not supertraceless")


def chi(a: SuperTensor) -> SuperTensor:
    """χ = φ ∘ str_{2,3}, the idempotent on g⊙g with image φ(V⊗V*)."""
    _require_sym(a)
    return phi(str_23(a))


@dataclass(frozen=True)
class SymmetricParts:
    b: SuperTensor
    c: SuperTensor
    d: SuperTensor
    e: SuperTensor

    def total(self) -> SuperTensor:
        return self.b + self.c + self.d + self.e

    def __iter__(self):
        return iter((self.b, self.c, self.d, self.e))


def _upper_symmetric_part(t: SuperTensor) -> SuperTensor:
    return (t + upper_swap(t)).scale(Fraction(1, 2))


def decompose_sym(a: SuperTensor) -> SymmetricParts:
    """A = B + C + D + E for A in g⊙g.

    B is the upper-index symmetrization of A − χ(A), C the rest of A − χ(A),
    E the multiple of φ(δ) carrying 𝒦(A), and D = χ(A) − E.
    """
    check_difference(a.m, a.n)
    m, n = a.m, a.n
    chi_a = chi(a)
    rest = a - chi_a
    b = _upper_symmetric_part(rest)
    c = rest - b
    e = phi_identity(m, n).scale(kappa(a) * Fraction(1, 2 * (m - n) ** 2))
    d = chi_a - e
    return SymmetricParts(b, c, d, e)


def cartan_part(tensor: SuperTensor) -> SuperTensor:
    """B-part of the super-symmetrization of a tensor of g⊗g."""
    check_difference(tensor.m, tensor.n)
    sym = super_symmetrize(tensor)
    if sym.is_zero():
        return sym
    rest = sym - phi(str_23(sym))
    return _upper_symmetric_part(rest)


def cartan_product(x: SuperMatrix, y: SuperMatrix) -> SuperTensor:
    """X ⊚ Y, the Cartan-summand component of X ⊗ Y."""
    return cartan_part(tensor_product(x, y))


def project_offcartan(tensor: SuperTensor) -> SuperTensor:
    """T minus its Cartan part; the projection of g⊗g onto I₂."""
    return tensor - cartan_part(tensor)


def antisym_parts(a: SuperTensor) -> Tuple[SuperTensor, SuperTensor]:
    """(P, Q) for A ∈ g∧g with Q = ψ(str_{2,3} A) the copy of g and P = A − Q."""
    if a.signature != g_signature(2) or pair_swap(a) != -a:
        raise NotInSubspaceError("tensor is not super-antisymmetric across its slot pairs")
    q = psi(str_23(a))
    return a - q, q


def upper_symmetric(t: SuperTensor) -> SuperTensor:
    return _upper_symmetric_part(t)


def upper_antisymmetric(t: SuperTensor) -> SuperTensor:
    return (t - upper_swap(t)).scale(Fraction(1, 2))


def scalar_of(tensor: SuperTensor, reference: SuperTensor):
    """The scalar c with tensor = c·reference, or None when they are not proportional."""
    if reference.is_zero():
        return Fraction(0) if tensor.is_zero() else None
    if tensor.is_zero():
        return Fraction(0)
    if tensor.components.keys() != reference.components.keys():
        return None
    key = next(iter(reference.components))
    ref = reference[key]
    ref_value = ref.a if isinstance(ref, LambdaLinear) else ref
    c = tensor[key] / ref_value
    if tensor == reference.scale(c):
        return c
    return None
