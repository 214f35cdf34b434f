"""Dense row reduction modulo word-sized primes with numpy.

Entries live in int64 and primes stay below 2**31, so a product of two residues
fits before the reduction ``% p``.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence, Tuple

import numpy as np

from ..exceptions import ResourceLimitError

logger = logging.getLogger(__name__)

DEFAULT_PRIMES = (2147483629, 2147483587, 2147483579)


def check_memory(rows: int, cols: int, mem_cap_mb: int, copies: int = 2):
    """Raise if a dense ``rows × cols`` int64 block (times ``copies``) exceeds the cap."""
    needed = rows * cols * 8 * copies
    if needed > mem_cap_mb * 1024 * 1024:
        raise ResourceLimitError(
            f"dense {rows}x{cols} block needs {needed // (1024 * 1024)} MB, "
            f"cap is {mem_cap_mb} MB"
        )


def residue(value: Fraction, p: int) -> int:
    value = Fraction(value)
    if value.denominator % p == 0:
        raise ZeroDivisionError(f"denominator of {value} vanishes modulo {p}")
    return value.numerator * pow(value.denominator, -1, p) % p


def dense_mod_p(
    rows: Sequence[Mapping[int, Fraction]], ncols: int, p: int
) -> np.ndarray:
    """Reduce sparse rational rows to a dense residue matrix."""
    matrix = np.zeros((len(rows), ncols), dtype=np.int64)
    for r, row in enumerate(rows):
        for c, v in row.items():
            matrix[r, c] = residue(v, p)
    return matrix


def rref_mod_p(matrix: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form over GF(p); returns the reduced matrix and pivot columns."""
    a = matrix.copy() % p
    nrows, ncols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nonzero = np.nonzero(a[r:, c])[0]
        if nonzero.size == 0:
            continue
        k = r + int(nonzero[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        column = a[:, c].copy()
        column[r] = 0
        targets = np.nonzero(column)[0]
        if targets.size:
            a[targets] = (a[targets] - np.outer(column[targets], a[r]) % p) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    if matrix.size == 0:
        return 0
    return len(rref_mod_p(matrix, p)[1])


def nullspace_mod_p(matrix: np.ndarray, p: int) -> np.ndarray:
    """Basis of the right kernel over GF(p), one row per free column."""
    ncols = matrix.shape[1]
    if matrix.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    reduced, pivots = rref_mod_p(matrix, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = (-reduced[r, f]) % p
    return basis


@dataclass
class MultiModularRank:
    """Rank of one rational matrix computed modulo several primes.

    The rank over Q is at least every modular rank; agreement across primes is
    recorded so callers can flag an unlucky prime.
    """

    ranks: Dict[int, int] = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return max(self.ranks.values(), default=0)

    @property
    def agreed(self) -> bool:
        return len(set(self.ranks.values())) <= 1

    @classmethod
    def compute(
        cls,
        rows: Sequence[Mapping[int, Fraction]],
        ncols: int,
        primes: Sequence[int] = DEFAULT_PRIMES,
        mem_cap_mb: int = 2048,
    ) -> "MultiModularRank":
        check_memory(len(rows), ncols, mem_cap_mb)
        result = cls()
        for p in primes:
            result.ranks[p] = rank_mod_p(dense_mod_p(rows, ncols, p), p)
        if not result.agreed:
            logger.warning("modular ranks disagree: %s", result.ranks)
        return result
