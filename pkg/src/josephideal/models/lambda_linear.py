"""Affine polynomials a + b·λ in the formal ideal parameter λ."""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

from .weight import format_rational, parse_rational

Scalar = Union[int, Fraction]


def _is_scalar(value) -> bool:
    return isinstance(value, (int, Fraction)) or isinstance(value, _RationalABC)


@dataclass(frozen=True)
class LambdaLinear:
    """Exact a + b·λ. Products that would reach λ² raise ``ArithmeticError``."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def lam(cls) -> "LambdaLinear":
        return cls(Fraction(0), Fraction(1))

    @classmethod
    def coerce(cls, value: Union["LambdaLinear", Scalar]) -> "LambdaLinear":
        if isinstance(value, LambdaLinear):
            return value
        return cls(Fraction(value), Fraction(0))

    @property
    def is_constant(self) -> bool:
        return self.b == 0

    def evaluate(self, lam: Scalar) -> Fraction:
        return self.a + self.b * Fraction(lam)

    def solve_equal(self, other: "LambdaLinear") -> Fraction:
        """The unique λ with self(λ) = other(λ); ``ArithmeticError`` if there is none."""
        other = LambdaLinear.coerce(other)
        slope = self.b - other.b
        if slope == 0:
            raise ArithmeticError(f"{self} and {other} never cross at a single λ")
        return (other.a - self.a) / slope

    def __add__(self, other):
        if isinstance(other, LambdaLinear):
            return LambdaLinear(self.a + other.a, self.b + other.b)
        if _is_scalar(other):
            return LambdaLinear(self.a + Fraction(other), self.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "LambdaLinear":
        return LambdaLinear(-self.a, -self.b)

    def __sub__(self, other):
        if isinstance(other, LambdaLinear) or _is_scalar(other):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if _is_scalar(other):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, LambdaLinear):
            if self.b != 0 and other.b != 0:
                raise ArithmeticError("product of two λ-dependent terms has degree 2")
            return LambdaLinear(self.a * other.a, self.a * other.b + self.b * other.a)
        if _is_scalar(other):
            other = Fraction(other)
            return LambdaLinear(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            other = Fraction(other)
            return LambdaLinear(self.a / other, self.b / other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, LambdaLinear):
            return self.a == other.a and self.b == other.b
        if _is_scalar(other):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def to_text(self) -> str:
        """Serialized form ``"a+b*lambda"`` with rationals as ``p/q``."""
        return f"{format_rational(self.a)}+{format_rational(self.b)}*lambda"

    @classmethod
    def from_text(cls, text: str) -> "LambdaLinear":
        """Inverse of :meth:`to_text`."""
        body = text.strip()
        if not body.endswith("*lambda") or "+" not in body:
            raise ValueError(f"not of the form a+b*lambda: {text!r}")
        a_text, b_text = body[: -len("*lambda")].rsplit("+", 1)
        return cls(parse_rational(a_text), parse_rational(b_text))

    def __str__(self) -> str:
        if self.b == 0:
            return format_rational(self.a)
        if self.a == 0:
            return f"{format_rational(self.b)}λ"
        sign = "-" if self.b < 0 else "+"
        return f"{format_rational(self.a)} {sign} {format_rational(abs(self.b))}λ"
