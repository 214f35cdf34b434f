"""Seeded random samples of algebra elements and tensors for the identity checks."""

from fractions import Fraction
from typing import Optional

import numpy as np

from ..models.supermatrix import SuperMatrix
from ..models.supertensor import SuperTensor
from .superalgebra import sl_algebra
from .tensoralg import super_symmetrize, super_antisymmetrize, tensor_product


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_rational(rng: np.random.Generator, bound: int = 5) -> Fraction:
    num = int(rng.integers(-bound, bound + 1))
    den = int(rng.integers(1, 4))
    return Fraction(num, den)


def random_element(
    m: int, n: int, rng: np.random.Generator, terms: int = 3, parity: Optional[int] = None
) -> SuperMatrix:
    """A sparse random element of sl(m|n), optionally of one parity."""
    algebra = sl_algebra(m, n)
    pool = [a for a in range(algebra.dim) if parity is None or algebra.parities[a] == parity]
    coords = {}
    for a in rng.choice(len(pool), size=min(terms, len(pool)), replace=False):
        coords[pool[int(a)]] = random_rational(rng) or Fraction(1)
    return algebra.element(coords)


def random_g_tensor(m: int, n: int, rng: np.random.Generator, k: int = 2, terms: int = 2) -> SuperTensor:
    total = None
    for _ in range(terms):
        piece = tensor_product(*(random_element(m, n, rng, terms=2) for _ in range(k)))
        total = piece if total is None else total + piece
    return total


def random_symmetric(m: int, n: int, rng: np.random.Generator, terms: int = 2) -> SuperTensor:
    return super_symmetrize(random_g_tensor(m, n, rng, 2, terms))


def random_antisymmetric(m: int, n: int, rng: np.random.Generator, terms: int = 2) -> SuperTensor:
    return super_antisymmetrize(random_g_tensor(m, n, rng, 2, terms))
