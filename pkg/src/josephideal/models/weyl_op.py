"""Normal-ordered polynomial differential operators on R^(m-1|n).

Variables are numbered 0..r-1 with r = m+n-1. The first m-1 are even (commuting)
and the last n are odd (anticommuting). A monomial is stored as the pair
``(xs, ds)`` of exponent tuples and stands for

    x_0^xs[0] ... x_{r-1}^xs[r-1] ∂_0^ds[0] ... ∂_{r-1}^ds[r-1]

with all multiplication operators to the left of all derivatives and odd
exponents in {0, 1}.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple

Exponents = Tuple[int, ...]
Monomial = Tuple[Exponents, Exponents]


@dataclass(frozen=True, eq=False)
class WeylOp:
    m: int
    n: int
    terms: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean: Dict[Monomial, Fraction] = {}
        r = self.rank
        for (xs, ds), c in self.terms.items():
            xs, ds = tuple(xs), tuple(ds)
            if len(xs) != r or len(ds) != r:
                raise ValueError(f"monomial {(xs, ds)} does not have {r} variables")
            if any(e < 0 for e in xs + ds):
                raise ValueError(f"negative exponent in {(xs, ds)}")
            if any(xs[t] > 1 or ds[t] > 1 for t in range(self.m - 1, r)):
                continue
            c = Fraction(c)
            if c:
                clean[(xs, ds)] = clean.get((xs, ds), Fraction(0)) + c
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})

    @classmethod
    def _raw(cls, m: int, n: int, terms: Dict[Monomial, Fraction]) -> "WeylOp":
        op = object.__new__(cls)
        object.__setattr__(op, "m", m)
        object.__setattr__(op, "n", n)
        object.__setattr__(op, "terms", {k: v for k, v in terms.items() if v})
        return op

    # -- constructors ---------------------------------------------------------------

    @property
    def rank(self) -> int:
        return self.m + self.n - 1

    @classmethod
    def zero(cls, m: int, n: int) -> "WeylOp":
        return cls._raw(m, n, {})

    @classmethod
    def scalar(cls, m: int, n: int, value) -> "WeylOp":
        r = m + n - 1
        return cls(m, n, {((0,) * r, (0,) * r): Fraction(value)})

    @classmethod
    def one(cls, m: int, n: int) -> "WeylOp":
        return cls.scalar(m, n, 1)

    @classmethod
    def x(cls, m: int, n: int, t: int) -> "WeylOp":
        """Multiplication by the coordinate x_t (0-based)."""
        r = m + n - 1
        xs = tuple(1 if s == t else 0 for s in range(r))
        return cls(m, n, {(xs, (0,) * r): Fraction(1)})

    @classmethod
    def d(cls, m: int, n: int, t: int) -> "WeylOp":
        """The derivative ∂_t (0-based)."""
        r = m + n - 1
        ds = tuple(1 if s == t else 0 for s in range(r))
        return cls(m, n, {((0,) * r, ds): Fraction(1)})

    @classmethod
    def euler(cls, m: int, n: int) -> "WeylOp":
        """𝔼 = Σ x_t ∂_t."""
        r = m + n - 1
        terms = {}
        for t in range(r):
            e = tuple(1 if s == t else 0 for s in range(r))
            terms[(e, e)] = Fraction(1)
        return cls(m, n, terms)

    # -- queries --------------------------------------------------------------------

    def is_odd_variable(self, t: int) -> bool:
        return t >= self.m - 1

    def monomial_parity(self, mono: Monomial) -> int:
        xs, ds = mono
        return sum(xs[t] + ds[t] for t in range(self.m - 1, self.rank)) % 2

    @property
    def parity(self) -> Optional[int]:
        parities = {self.monomial_parity(k) for k in self.terms}
        if not parities:
            return 0
        if len(parities) > 1:
            return None
        return parities.pop()

    def is_zero(self) -> bool:
        return not self.terms

    def is_multiplication(self) -> bool:
        """True when no term contains a derivative."""
        return all(not any(ds) for _, ds in self.terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self.terms.items())

    def constant_term(self) -> Fraction:
        r = self.rank
        return self.terms.get(((0,) * r, (0,) * r), Fraction(0))

    def degree(self) -> int:
        """Largest total x-degree of a term."""
        return max((sum(xs) for xs, _ in self.terms), default=0)

    # -- linear structure -----------------------------------------------------------

    def _check(self, other: "WeylOp"):
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("operators on different supermanifolds do not combine")

    def __add__(self, other: "WeylOp") -> "WeylOp":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return WeylOp._raw(self.m, self.n, out)

    def __neg__(self) -> "WeylOp":
        return WeylOp._raw(self.m, self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "WeylOp") -> "WeylOp":
        return self + (-other)

    def scale(self, scalar) -> "WeylOp":
        scalar = Fraction(scalar)
        return WeylOp._raw(self.m, self.n, {k: v * scalar for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, WeylOp):
            return weyl_mul(self, other)
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylOp):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        return f"WeylOp({self.to_text()})"

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (xs, ds), c in sorted(self.terms.items()):
            factors = []
            for prefix, exps in (("x", xs), ("d", ds)):
                for t, e in enumerate(exps):
                    if e == 1:
                        factors.append(f"{prefix}{t + 2}")
                    elif e > 1:
                        factors.append(f"{prefix}{t + 2}^{e}")
            coeff = str(c)
            parts.append(coeff + ("*" + "*".join(factors) if factors else ""))
        return " + ".join(parts)


def _left_x(op_m: int, r: int, t: int, xs: Exponents, ds: Exponents, c: Fraction, out: dict):
    odd_t = t >= op_m - 1
    if odd_t and xs[t]:
        return
    sign = 1
    if odd_t:
        passed = sum(xs[s] for s in range(op_m - 1, t))
        if passed % 2:
            sign = -1
    new_xs = xs[:t] + (xs[t] + 1,) + xs[t + 1:]
    key = (new_xs, ds)
    out[key] = out.get(key, Fraction(0)) + sign * c


def _left_d(op_m: int, r: int, t: int, xs: Exponents, ds: Exponents, c: Fraction, out: dict):
    odd_t = t >= op_m - 1
    # derivative hits x_t
    if xs[t]:
        sign = 1
        if odd_t and sum(xs[s] for s in range(op_m - 1, t)) % 2:
            sign = -1
        new_xs = xs[:t] + (xs[t] - 1,) + xs[t + 1:]
        key = (new_xs, ds)
        out[key] = out.get(key, Fraction(0)) + sign * xs[t] * c
    # ∂_t moves past every x and into place among the derivatives
    if odd_t and ds[t]:
        return
    sign = 1
    if odd_t:
        odd_xs = sum(xs[s] for s in range(op_m - 1, r))
        odd_ds = sum(ds[s] for s in range(op_m - 1, t))
        if (odd_xs + odd_ds) % 2:
            sign = -1
    new_ds = ds[:t] + (ds[t] + 1,) + ds[t + 1:]
    key = (xs, new_ds)
    out[key] = out.get(key, Fraction(0)) + sign * c


def weyl_mul(p: WeylOp, q: WeylOp) -> WeylOp:
    """Product p·q in normal form.

    Each monomial of ``p`` is a word in the generators; the word is applied to ``q``
    from its rightmost letter inwards using the left-multiplication rules.
    """
    p._check(q)
    m, r = p.m, p.rank
    result: Dict[Monomial, Fraction] = {}
    for (pxs, pds), pc in p.terms.items():
        current: Dict[Monomial, Fraction] = dict(q.terms)
        for t in reversed(range(r)):
            for _ in range(pds[t]):
                step: Dict[Monomial, Fraction] = {}
                for (xs, ds), c in current.items():
                    _left_d(m, r, t, xs, ds, c, step)
                current = {k: v for k, v in step.items() if v}
        for t in reversed(range(r)):
            for _ in range(pxs[t]):
                step = {}
                for (xs, ds), c in current.items():
                    _left_x(m, r, t, xs, ds, c, step)
                current = {k: v for k, v in step.items() if v}
        for k, v in current.items():
            result[k] = result.get(k, Fraction(0)) + pc * v
    return WeylOp._raw(p.m, p.n, result)


def supercommutator(p: WeylOp, q: WeylOp) -> WeylOp:
    """[p, q] = pq − (−1)^{|p||q|} qp for homogeneous operators."""
    pp, qp = p.parity, q.parity
    if pp is None or qp is None:
        raise ValueError("supercommutator needs homogeneous operators")
    sign = -1 if pp * qp else 1
    return weyl_mul(p, q) - weyl_mul(q, p).scale(sign)


def apply_to_polynomial(op: WeylOp, poly: WeylOp) -> WeylOp:
    """Action of ``op`` on a polynomial, i.e. a derivative-free operator."""
    if not poly.is_multiplication():
        raise ValueError("the argument is not a polynomial")
    product = weyl_mul(op, poly)
    return WeylOp._raw(
        op.m, op.n, {k: v for k, v in product.terms.items() if not any(k[1])}
    )
