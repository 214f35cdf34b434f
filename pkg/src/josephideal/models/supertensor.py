"""Multi-slot tensors over V = C^(m|n) and its dual, with exact components."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

from ..exceptions import TensorShapeError
from .lambda_linear import LambdaLinear
from .supermatrix import SuperMatrix, index_parity
from .weight import format_rational, parse_rational

MultiIndex = Tuple[int, ...]


class Slot(str, Enum):
    """Tensor slot type: a copy of V or of its dual V*."""

    V = "V"
    VSTAR = "V*"


def g_signature(k: int) -> Tuple[Slot, ...]:
    """Signature (V, V*, V, V*, ...) of k-fold tensors of matrices."""
    return (Slot.V, Slot.VSTAR) * k


def count_inversions(values: Sequence[int]) -> int:
    count = 0
    for i, a in enumerate(values):
        for b in values[i + 1:]:
            if a > b:
                count += 1
    return count


@dataclass(frozen=True)
class SlotPermutation:
    """Rearrangement of tensor slots: new slot ``r`` is old slot ``order[r]``."""

    order: Tuple[int, ...]

    def __post_init__(self):
        order = tuple(self.order)
        object.__setattr__(self, "order", order)
        if sorted(order) != list(range(len(order))):
            raise TensorShapeError(f"{order} is not a permutation of 0..{len(order) - 1}")

    @classmethod
    def identity(cls, k: int) -> "SlotPermutation":
        return cls(tuple(range(k)))

    @classmethod
    def transposition(cls, k: int, i: int, j: int) -> "SlotPermutation":
        order = list(range(k))
        order[i], order[j] = order[j], order[i]
        return cls(tuple(order))

    def __len__(self) -> int:
        return len(self.order)

    def then(self, other: "SlotPermutation") -> "SlotPermutation":
        """The permutation equal to applying ``self`` first and ``other`` second."""
        if len(other) != len(self):
            raise TensorShapeError("permutations of different lengths do not compose")
        return SlotPermutation(tuple(self.order[r] for r in other.order))

    def inverse(self) -> "SlotPermutation":
        inv = [0] * len(self.order)
        for new, old in enumerate(self.order):
            inv[old] = new
        return SlotPermutation(tuple(inv))

    def koszul_exponent(self, parities: Sequence[int]) -> int:
        """Number of odd/odd slot pairs whose relative order the permutation reverses.

        ``parities`` are the parities of the old slots.
        """
        odd_in_new_order = [old for old in self.order if parities[old]]
        return count_inversions(odd_in_new_order)



def _parse_value(text: str):
    if text.strip().endswith("*lambda"):
        return LambdaLinear.from_text(text)
    return parse_rational(text)


@dataclass(frozen=True, eq=False)
class SuperTensor:
    """Sparse tensor in an ordered product of copies of V and V*.

    ``components`` maps 0-based multi-indices to Fractions (or :class:`LambdaLinear`
    values for elements carried with the formal parameter λ). Zero entries are
    dropped on construction.
    """

    m: int
    n: int
    signature: Tuple[Slot, ...]
    components: Mapping[MultiIndex, Any] = field(default_factory=dict)

    def __post_init__(self):
        signature = tuple(Slot(s) for s in self.signature)
        object.__setattr__(self, "signature", signature)
        size = self.m + self.n
        clean: Dict[MultiIndex, Any] = {}
        for idx, value in self.components.items():
            idx = tuple(idx)
            if len(idx) != len(signature):
                raise TensorShapeError(
                    f"multi-index {idx} does not match {len(signature)} slots"
                )
            if any(not 0 <= i < size for i in idx):
                raise TensorShapeError(f"multi-index {idx} out of range for size {size}")
            if not isinstance(value, LambdaLinear):
                value = Fraction(value)
            if value != 0:
                clean[idx] = value
        object.__setattr__(self, "components", clean)

    @classmethod
    def build(
        cls,
        m: int,
        n: int,
        signature: Tuple[Slot, ...],
        components: Dict[MultiIndex, Any],
    ) -> "SuperTensor":
        """Fast constructor for trusted internal callers; drops zeros only."""
        tensor = object.__new__(cls)
        object.__setattr__(tensor, "m", m)
        object.__setattr__(tensor, "n", n)
        object.__setattr__(tensor, "signature", signature)
        object.__setattr__(
            tensor, "components", {k: v for k, v in components.items() if v != 0}
        )
        return tensor

    # -- constructors ---------------------------------------------------------------

    @classmethod
    def zero(cls, m: int, n: int, signature: Iterable[Slot]) -> "SuperTensor":
        return cls.build(m, n, tuple(Slot(s) for s in signature), {})

    @classmethod
    def from_matrix(cls, matrix: SuperMatrix) -> "SuperTensor":
        return cls.build(matrix.m, matrix.n, g_signature(1), dict(matrix.entries))

    @classmethod
    def kronecker(cls, m: int, n: int) -> "SuperTensor":
        """δ^i_j, the identity of V as an element of V⊗V*."""
        return cls.build(m, n, g_signature(1), {(i, i): Fraction(1) for i in range(m + n)})

    @classmethod
    def unit_product(cls, m: int, n: int, *pairs: Tuple[int, int]) -> "SuperTensor":
        """E_{i1 j1} ⊗ E_{i2 j2} ⊗ ... with 1-based index pairs."""
        idx = tuple(x - 1 for pair in pairs for x in pair)
        return cls(m, n, g_signature(len(pairs)), {idx: Fraction(1)})

    # -- queries --------------------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.signature)

    @property
    def pair_count(self) -> int:
        return len(self.signature) // 2

    def index_parity(self, i: int) -> int:
        return index_parity(self.m, i)

    def parities(self, idx: MultiIndex) -> Tuple[int, ...]:
        m = self.m
        return tuple(0 if i < m else 1 for i in idx)

    def component_parity(self, idx: MultiIndex) -> int:
        return sum(self.parities(idx)) % 2

    def __getitem__(self, idx: MultiIndex):
        return self.components.get(tuple(idx), Fraction(0))

    def items(self) -> Iterator[Tuple[MultiIndex, Any]]:
        return iter(self.components.items())

    def __len__(self) -> int:
        return len(self.components)

    def is_zero(self) -> bool:
        return not self.components

    def is_matrix_shaped(self) -> bool:
        return self.signature == g_signature(self.pair_count) and self.rank % 2 == 0

    def has_lambda(self) -> bool:
        return any(
            isinstance(v, LambdaLinear) and not v.is_constant for v in self.components.values()
        )

    # -- arithmetic -----------------------------------------------------------------

    def _check(self, other: "SuperTensor"):
        if (self.m, self.n, self.signature) != (other.m, other.n, other.signature):
            raise TensorShapeError(
                f"tensors with signatures {self.signature} and {other.signature} "
                "do not combine"
            )

    def __add__(self, other: "SuperTensor") -> "SuperTensor":
        self._check(other)
        out = dict(self.components)
        for k, v in other.components.items():
            out[k] = out[k] + v if k in out else v
        return SuperTensor.build(self.m, self.n, self.signature, out)

    def __neg__(self) -> "SuperTensor":
        return SuperTensor.build(
            self.m, self.n, self.signature, {k: -v for k, v in self.components.items()}
        )

    def __sub__(self, other: "SuperTensor") -> "SuperTensor":
        return self + (-other)

    def scale(self, scalar) -> "SuperTensor":
        if not isinstance(scalar, LambdaLinear):
            scalar = Fraction(scalar)
        return SuperTensor.build(
            self.m, self.n, self.signature, {k: v * scalar for k, v in self.components.items()}
        )

    def __mul__(self, scalar) -> "SuperTensor":
        return self.scale(scalar)

    __rmul__ = __mul__

    def tensor(self, other: "SuperTensor") -> "SuperTensor":
        """Concatenating tensor product; components multiply without sign."""
        if (self.m, self.n) != (other.m, other.n):
            raise TensorShapeError("tensor factors belong to different superspaces")
        out = {}
        for i, a in self.components.items():
            for j, b in other.components.items():
                out[i + j] = a * b
        return SuperTensor.build(self.m, self.n, self.signature + other.signature, out)

    def map_values(self, fn: Callable[[Any], Any]) -> "SuperTensor":
        return SuperTensor.build(
            self.m, self.n, self.signature, {k: fn(v) for k, v in self.components.items()}
        )

    def evaluate(self, lam) -> "SuperTensor":
        """Substitute a rational value for λ in every coefficient."""
        return self.map_values(
            lambda v: v.evaluate(lam) if isinstance(v, LambdaLinear) else v
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SuperTensor):
            return NotImplemented
        if (self.m, self.n, self.signature) != (other.m, other.n, other.signature):
            return False
        if self.components.keys() != other.components.keys():
            return False
        return all(v == other.components[k] for k, v in self.components.items())

    __hash__ = None  # mutable-looking mapping inside; not hashable

    # -- conversions ----------------------------------------------------------------

    def to_matrix(self) -> SuperMatrix:
        if self.signature != g_signature(1):
            raise TensorShapeError(f"signature {self.signature} is not (V, V*)")
        return SuperMatrix(self.m, self.n, dict(self.components))

    def to_json(self) -> dict:
        entries: List[list] = []
        for idx in sorted(self.components):
            value = self.components[idx]
            text = value.to_text() if isinstance(value, LambdaLinear) else format_rational(value)
            entries.append([[i + 1 for i in idx], text])
        return {
            "m": self.m,
            "n": self.n,
            "signature": [s.value for s in self.signature],
            "entries": entries,
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "SuperTensor":
        components = {
            tuple(i - 1 for i in idx): _parse_value(text) for idx, text in data["entries"]
        }
        return cls(data["m"], data["n"], tuple(Slot(s) for s in data["signature"]), components)

    def __repr__(self) -> str:
        sig = "⊗".join(s.value for s in self.signature)
        return f"SuperTensor({sig} over C^({self.m}|{self.n}), {len(self.components)} entries)"
