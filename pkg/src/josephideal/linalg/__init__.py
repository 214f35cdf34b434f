"""Exact and modular linear algebra kernels."""

from .exact import SparseEchelon, rank
from .modular import DEFAULT_PRIMES, MultiModularRank, nullspace_mod_p, rank_mod_p

__all__ = [
    "DEFAULT_PRIMES",
    "MultiModularRank",
    "SparseEchelon",
    "nullspace_mod_p",
    "rank",
    "rank_mod_p",
]
