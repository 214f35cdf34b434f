"""Elements of g⊗g ⊕ g ⊕ C, the filtered pieces of U(g) up to degree two."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict

from .lambda_linear import LambdaLinear
from .supermatrix import SuperMatrix
from .supertensor import SuperTensor, g_signature
from .weight import format_rational


def _text(value) -> str:
    if isinstance(value, LambdaLinear):
        return value.to_text()
    return format_rational(value)


@dataclass(frozen=True, eq=False)
class FilteredElement:
    """Degree-2, degree-1 and degree-0 parts of an element of the tensor algebra.

    ``degree2`` is a (V,V*,V,V*) tensor and ``degree1`` a (V,V*) tensor; both may
    carry :class:`LambdaLinear` coefficients. ``degree0`` is a LambdaLinear scalar.
    """

    degree2: SuperTensor
    degree1: SuperTensor
    degree0: LambdaLinear

    def __post_init__(self):
        if self.degree2.signature != g_signature(2):
            raise ValueError(f"degree-2 part has signature {self.degree2.signature}")
        if self.degree1.signature != g_signature(1):
            raise ValueError(f"degree-1 part has signature {self.degree1.signature}")
        object.__setattr__(self, "degree0", LambdaLinear.coerce(self.degree0))

    @classmethod
    def zero(cls, m: int, n: int) -> "FilteredElement":
        return cls(
            SuperTensor.zero(m, n, g_signature(2)),
            SuperTensor.zero(m, n, g_signature(1)),
            LambdaLinear(),
        )

    @classmethod
    def from_parts(
        cls,
        degree2: SuperTensor = None,
        degree1: SuperMatrix = None,
        degree0=0,
        m: int = None,
        n: int = None,
    ) -> "FilteredElement":
        base = degree2 if degree2 is not None else degree1
        m = base.m if base is not None else m
        n = base.n if base is not None else n
        if degree2 is None:
            degree2 = SuperTensor.zero(m, n, g_signature(2))
        if degree1 is None:
            degree1_tensor = SuperTensor.zero(m, n, g_signature(1))
        elif isinstance(degree1, SuperMatrix):
            degree1_tensor = SuperTensor.from_matrix(degree1)
        else:
            degree1_tensor = degree1
        return cls(degree2, degree1_tensor, LambdaLinear.coerce(degree0))

    @property
    def m(self) -> int:
        return self.degree2.m

    @property
    def n(self) -> int:
        return self.degree2.n

    def __add__(self, other: "FilteredElement") -> "FilteredElement":
        return FilteredElement(
            self.degree2 + other.degree2,
            self.degree1 + other.degree1,
            self.degree0 + other.degree0,
        )

    def __neg__(self) -> "FilteredElement":
        return FilteredElement(-self.degree2, -self.degree1, -self.degree0)

    def __sub__(self, other: "FilteredElement") -> "FilteredElement":
        return self + (-other)

    def scale(self, scalar) -> "FilteredElement":
        return FilteredElement(
            self.degree2.scale(scalar), self.degree1.scale(scalar), self.degree0 * scalar
        )

    def is_zero(self) -> bool:
        return self.degree2.is_zero() and self.degree1.is_zero() and not self.degree0

    def evaluate(self, lam) -> "FilteredElement":
        """Substitute a rational λ everywhere."""
        return FilteredElement(
            self.degree2.evaluate(lam),
            self.degree1.evaluate(lam),
            LambdaLinear(self.degree0.evaluate(lam)),
        )

    def degree1_matrix(self) -> SuperMatrix:
        """Degree-1 part as a matrix; only valid once it is free of λ."""
        entries: Dict[Any, Fraction] = {}
        for idx, value in self.degree1.items():
            if isinstance(value, LambdaLinear):
                if not value.is_constant:
                    raise ArithmeticError("degree-1 part still depends on λ")
                value = value.a
            entries[idx] = value
        return SuperMatrix(self.m, self.n, entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FilteredElement):
            return NotImplemented
        return (
            self.degree2 == other.degree2
            and self.degree1 == other.degree1
            and self.degree0 == other.degree0
        )

    __hash__ = None

    def to_dict(self) -> dict:
        return {
            "degree2": [[[i + 1 for i in k], _text(v)] for k, v in sorted(self.degree2.items())],
            "degree1": [[[i + 1 for i in k], _text(v)] for k, v in sorted(self.degree1.items())],
            "degree0": self.degree0.to_text(),
        }
