"""Tests for linear algebra over GF(p)."""

import numpy as np
import pytest
from fractions import Fraction

from josephideal.exceptions import ResourceLimitError
from josephideal.linalg import DEFAULT_PRIMES, MultiModularRank, nullspace_mod_p, rank, rank_mod_p
from josephideal.linalg.modular import check_memory, dense_mod_p, residue

P = DEFAULT_PRIMES[0]


class TestResidues:
    """Test reduction of rationals modulo p."""

    def test_fraction_residue(self):
        """Test 1/2 times 2 is 1 mod p."""
        assert residue(Fraction(1, 2), P) * 2 % P == 1

    def test_negative(self):
        """Test -1 maps to p - 1."""
        assert residue(Fraction(-1), P) == P - 1

    def test_denominator_divisible_by_p(self):
        """Test a vanishing denominator raises."""
        with pytest.raises(ZeroDivisionError):
            residue(Fraction(1, 7), 7)


class TestModularRank:
    """Test rank and kernel modulo p."""

    def test_rank_matches_exact(self):
        """Test the modular rank of a rational matrix equals its exact rank."""
        rows = [{0: 1, 1: Fraction(1, 2)}, {0: 2, 1: 1}, {2: Fraction(-3, 5)}]
        assert rank_mod_p(dense_mod_p(rows, 3, P), P) == rank(rows) == 2

    def test_small_prime_can_drop_rank(self):
        """Test an unlucky prime underestimates the rank."""
        matrix = np.array([[1, 1], [1, 4]], dtype=np.int64)
        assert rank_mod_p(matrix, 3) == 1
        assert rank_mod_p(matrix, 5) == 2

    def test_nullspace_mod_p(self):
        """Test kernel vectors are annihilated."""
        matrix = np.array([[1, 2, 3], [2, 4, 6]], dtype=np.int64)
        kernel = nullspace_mod_p(matrix, 7)
        assert kernel.shape == (2, 3)
        assert not (matrix @ kernel.T % 7).any()

    def test_empty_matrix(self):
        """Test the kernel of no rows is everything."""
        kernel = nullspace_mod_p(np.zeros((0, 2), dtype=np.int64), 7)
        assert (kernel == np.eye(2, dtype=np.int64)).all()
        assert rank_mod_p(np.zeros((0, 2), dtype=np.int64), 7) == 0


class TestMultiModularRank:
    """Test rank over several primes."""

    def test_agreement(self):
        """Test large primes agree on a small matrix."""
        rows = [{0: 1, 1: 2}, {0: 3, 1: 4}]
        result = MultiModularRank.compute(rows, 2)
        assert result.rank == 2
        assert result.agreed
        assert set(result.ranks) == set(DEFAULT_PRIMES)

    def test_disagreement_flagged(self):
        """Test differing ranks are reported and the maximum kept."""
        rows = [{0: 1, 1: 1}, {0: 1, 1: 4}]
        result = MultiModularRank.compute(rows, 2, primes=(3, 5))
        assert not result.agreed
        assert result.rank == 2

    def test_memory_cap(self):
        """Test a block over the cap raises ResourceLimitError."""
        with pytest.raises(ResourceLimitError):
            check_memory(100000, 100000, mem_cap_mb=1)
        check_memory(10, 10, mem_cap_mb=1)
