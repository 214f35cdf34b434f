"""Weights of sl(m|n) in the zero-sum coordinate convention."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

from ..exceptions import WeightError

Rational = Union[int, Fraction]


def format_rational(value: Rational) -> str:
    """Render a rational as ``"p/q"`` (or ``"p"`` when integral)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`."""
    return Fraction(text.strip())


@dataclass(frozen=True)
class Weight:
    """Element of h* written as a vector in C^(m+n) whose coefficients add up to zero.

    The first ``m`` coordinates are ε-coefficients, the last ``n`` are δ-coefficients.
    """

    m: int
    n: int
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if self.m < 1 or self.n < 1:
            raise WeightError(f"sl({self.m}|{self.n}) needs m >= 1 and n >= 1")
        if len(coords) != self.m + self.n:
            raise WeightError(
                f"expected {self.m + self.n} coordinates, got {len(coords)}"
            )
        if sum(coords) != 0:
            raise WeightError(f"coefficients of {coords} do not add up to zero")

    @classmethod
    def zero(cls, m: int, n: int) -> "Weight":
        return cls(m, n, (Fraction(0),) * (m + n))

    @classmethod
    def from_vector(cls, m: int, n: int, vector: Iterable[Rational]) -> "Weight":
        return cls(m, n, tuple(Fraction(v) for v in vector))

    @classmethod
    def combination(
        cls,
        m: int,
        n: int,
        eps: Mapping[int, Rational] = None,
        dlt: Mapping[int, Rational] = None,
    ) -> "Weight":
        """Build Σ eps[i]·ε_i + Σ dlt[j]·δ_j (indices 1-based).

        Repeated contributions to the same index add up, which is what the label
        substitutions (δ_{n-1} → ε_m for n = 1) need.
        """
        coords = [Fraction(0)] * (m + n)
        for i, c in (eps or {}).items():
            if not 1 <= i <= m:
                raise WeightError(f"ε_{i} does not exist for m = {m}")
            coords[i - 1] += Fraction(c)
        for j, c in (dlt or {}).items():
            if not 1 <= j <= n:
                raise WeightError(f"δ_{j} does not exist for n = {n}")
            coords[m + j - 1] += Fraction(c)
        return cls(m, n, tuple(coords))

    def _check_same_algebra(self, other: "Weight"):
        if (self.m, self.n) != (other.m, other.n):
            raise WeightError(
                f"weights of sl({self.m}|{self.n}) and sl({other.m}|{other.n}) do not mix"
            )

    def __add__(self, other: "Weight") -> "Weight":
        self._check_same_algebra(other)
        return Weight(self.m, self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_same_algebra(other)
        return Weight(self.m, self.n, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(self.m, self.n, tuple(-a for a in self.coords))

    def __mul__(self, scalar: Rational) -> "Weight":
        scalar = Fraction(scalar)
        return Weight(self.m, self.n, tuple(scalar * a for a in self.coords))

    __rmul__ = __mul__

    @property
    def epsilon_part(self) -> Tuple[Fraction, ...]:
        return self.coords[: self.m]

    @property
    def delta_part(self) -> Tuple[Fraction, ...]:
        return self.coords[self.m:]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def label(self) -> str:
        """Readable form such as ``2ε1-ε4-δ1``."""
        names = [f"ε{i + 1}" for i in range(self.m)] + [f"δ{j + 1}" for j in range(self.n)]
        parts = []
        for name, c in zip(names, self.coords):
            if c == 0:
                continue
            if c == 1:
                text = name
            elif c == -1:
                text = f"-{name}"
            else:
                text = f"{format_rational(c)}{name}"
            if parts and not text.startswith("-"):
                text = "+" + text
            parts.append(text)
        return "".join(parts) if parts else "0"

    def to_json(self) -> list:
        return [format_rational(c) for c in self.coords]

    def __str__(self) -> str:
        eps = ", ".join(format_rational(c) for c in self.epsilon_part)
        dlt = ", ".join(format_rational(c) for c in self.delta_part)
        return f"({eps} | {dlt})"


@dataclass(frozen=True)
class RootSystem:
    """Positive and simple roots of sl(m|n) for the distinguished Borel subalgebra."""

    m: int
    n: int
    even_positive: Tuple[Weight, ...]
    odd_positive: Tuple[Weight, ...]
    simple: Tuple[Weight, ...]

    @property
    def positive(self) -> Tuple[Weight, ...]:
        return self.even_positive + self.odd_positive

    def is_even(self, root: Weight) -> bool:
        return root in self.even_positive or -root in self.even_positive

    def counts(self) -> Dict[str, int]:
        return {
            "even": len(self.even_positive),
            "odd": len(self.odd_positive),
            "simple": len(self.simple),
        }


def weight_sum(weights: Sequence[Weight], m: int, n: int) -> Weight:
    total = Weight.zero(m, n)
    for w in weights:
        total = total + w
    return total
