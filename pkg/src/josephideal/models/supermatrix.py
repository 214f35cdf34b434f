"""Exact (m+n)×(m+n) super matrices, the carrier of gl(m|n) and sl(m|n)."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from ..exceptions import InvalidCaseError

Rational = Union[int, Fraction]
Index2 = Tuple[int, int]


def index_parity(m: int, i: int) -> int:
    """Parity of the 0-based index ``i``: even for the first m indices, odd afterwards."""
    return 0 if i < m else 1


def check_case(m: int, n: int, allow_equal: bool = False):
    if m < 1 or n < 1:
        raise InvalidCaseError(f"sl({m}|{n}) needs m >= 1 and n >= 1")
    if m == n and not allow_equal:
        raise InvalidCaseError(f"m = n = {m}: the Killing form is degenerate")


@dataclass(frozen=True, eq=False)
class SuperMatrix:
    """Sparse exact matrix with the parity grid of gl(m|n).

    ``entries`` maps 0-based (row, column) pairs to nonzero Fractions.
    """

    m: int
    n: int
    entries: Mapping[Index2, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        size = self.m + self.n
        clean: Dict[Index2, Fraction] = {}
        for (i, j), value in self.entries.items():
            if not (0 <= i < size and 0 <= j < size):
                raise IndexError(f"entry ({i}, {j}) outside a {size}x{size} matrix")
            value = Fraction(value)
            if value != 0:
                clean[(i, j)] = value
        object.__setattr__(self, "entries", clean)

    # -- constructors ---------------------------------------------------------------

    @classmethod
    def zero(cls, m: int, n: int) -> "SuperMatrix":
        return cls(m, n, {})

    @classmethod
    def unit(cls, m: int, n: int, i: int, j: int) -> "SuperMatrix":
        """Elementary matrix E_ij with 1-based indices, as written in formulas."""
        return cls(m, n, {(i - 1, j - 1): Fraction(1)})

    @classmethod
    def identity(cls, m: int, n: int) -> "SuperMatrix":
        return cls(m, n, {(i, i): Fraction(1) for i in range(m + n)})

    @classmethod
    def from_rows(cls, m: int, n: int, rows: Sequence[Sequence[Rational]]) -> "SuperMatrix":
        return cls(
            m,
            n,
            {(i, j): Fraction(v) for i, row in enumerate(rows) for j, v in enumerate(row)},
        )

    # -- basic queries --------------------------------------------------------------

    @property
    def size(self) -> int:
        return self.m + self.n

    def parity_of(self, i: int) -> int:
        return index_parity(self.m, i)

    def entry_parity(self, i: int, j: int) -> int:
        return (self.parity_of(i) + self.parity_of(j)) % 2

    def __getitem__(self, key: Index2) -> Fraction:
        return self.entries.get(key, Fraction(0))

    def items(self) -> Iterator[Tuple[Index2, Fraction]]:
        return iter(self.entries.items())

    def is_zero(self) -> bool:
        return not self.entries

    def is_homogeneous(self) -> bool:
        return len({self.entry_parity(i, j) for i, j in self.entries}) <= 1

    @property
    def parity(self) -> Optional[int]:
        """Parity of a homogeneous matrix; ``None`` for mixed ones (zero counts as even)."""
        parities = {self.entry_parity(i, j) for i, j in self.entries}
        if not parities:
            return 0
        if len(parities) > 1:
            return None
        return parities.pop()

    def graded_part(self, parity: int) -> "SuperMatrix":
        return SuperMatrix(
            self.m,
            self.n,
            {k: v for k, v in self.entries.items() if self.entry_parity(*k) == parity},
        )

    @property
    def even_part(self) -> "SuperMatrix":
        return self.graded_part(0)

    @property
    def odd_part(self) -> "SuperMatrix":
        return self.graded_part(1)

    def homogeneous_parts(self) -> List[Tuple[int, "SuperMatrix"]]:
        parts = []
        for p in (0, 1):
            part = self.graded_part(p)
            if not part.is_zero():
                parts.append((p, part))
        return parts

    def supertrace(self) -> Fraction:
        total = Fraction(0)
        for i in range(self.size):
            value = self.entries.get((i, i))
            if value:
                total += -value if self.parity_of(i) else value
        return total

    # -- arithmetic -----------------------------------------------------------------

    def _check(self, other: "SuperMatrix"):
        if (self.m, self.n) != (other.m, other.n):
            raise InvalidCaseError(
                f"cannot combine gl({self.m}|{self.n}) with gl({other.m}|{other.n})"
            )

    def __add__(self, other: "SuperMatrix") -> "SuperMatrix":
        self._check(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, Fraction(0)) + v
        return SuperMatrix(self.m, self.n, out)

    def __neg__(self) -> "SuperMatrix":
        return SuperMatrix(self.m, self.n, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "SuperMatrix") -> "SuperMatrix":
        return self + (-other)

    def __mul__(self, scalar: Rational) -> "SuperMatrix":
        scalar = Fraction(scalar)
        return SuperMatrix(self.m, self.n, {k: scalar * v for k, v in self.entries.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: "SuperMatrix") -> "SuperMatrix":
        self._check(other)
        by_row: Dict[int, List[Tuple[int, Fraction]]] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: Dict[Index2, Fraction] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                out[(i, j)] = out.get((i, j), Fraction(0)) + a * b
        return SuperMatrix(self.m, self.n, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.m, self.n, frozenset(self.entries.items())))

    def to_rows(self) -> List[List[Fraction]]:
        return [[self[(i, j)] for j in range(self.size)] for i in range(self.size)]

    def __repr__(self) -> str:
        terms = " + ".join(
            f"{v}*E{i + 1},{j + 1}" for (i, j), v in sorted(self.entries.items())
        )
        return f"SuperMatrix(gl({self.m}|{self.n}): {terms or '0'})"
