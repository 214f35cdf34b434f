"""Tests for exact sparse elimination."""

from fractions import Fraction

from josephideal.linalg import SparseEchelon, rank
from josephideal.linalg.exact import integral_row


def _kernel(rows, ncols):
    echelon = SparseEchelon()
    echelon.extend(rows)
    return echelon.nullspace(ncols)


def _apply(rows, vector):
    return [sum((v * vector.get(c, 0) for c, v in row.items()), Fraction(0)) for row in rows]


class TestIntegralRow:
    """Test denominator clearing."""

    def test_clears_denominators(self):
        """Test 1/2, 1/3 becomes 3, 2."""
        assert integral_row({0: Fraction(1, 2), 2: Fraction(1, 3)}) == {0: 3, 2: 2}

    def test_leading_entry_positive(self):
        """Test the row is normalized to a positive first entry."""
        assert integral_row({1: -4, 3: 6}) == {1: 2, 3: -3}

    def test_zero_row(self):
        """Test all-zero input gives the empty row."""
        assert integral_row({0: 0}) == {}


class TestSparseEchelon:
    """Test the incremental echelon form."""

    def test_add_detects_dependence(self):
        """Test a combination of earlier rows is not added."""
        echelon = SparseEchelon()
        assert echelon.add({0: 1, 1: 2})
        assert echelon.add({1: 1, 2: 1})
        assert not echelon.add({0: 1, 1: 3, 2: 1})
        assert echelon.rank == 2

    def test_contains(self):
        """Test span membership."""
        echelon = SparseEchelon()
        echelon.extend([{0: 1}, {1: Fraction(1, 2)}])
        assert echelon.contains({0: 3, 1: -7})
        assert not echelon.contains({2: 1})

    def test_rank_function(self):
        """Test rank of a dependent set."""
        rows = [{0: 1, 1: 1}, {0: 2, 1: 2}, {2: 5}]
        assert rank(rows) == 2

    def test_add_reports_each_row(self):
        """Test add accepts exactly the rows that extend the span."""
        echelon = SparseEchelon()
        rows = [{0: 1}, {0: 2}, {1: 1}, {0: 1, 1: 1}]
        assert [echelon.add(row) for row in rows] == [True, False, True, False]


class TestNullspace:
    """Test kernel computation."""

    def test_vectors_are_in_kernel(self):
        """Test every basis vector is annihilated by every row."""
        rows = [{0: 1, 1: 1, 2: 1}, {1: 1, 3: Fraction(-1, 2)}]
        basis = _kernel(rows, 4)
        assert len(basis) == 2
        for vector in basis:
            assert _apply(rows, vector) == [0, 0]

    def test_pivot_added_after_dependent_row(self):
        """Test back-substitution order when an early row mentions a later pivot."""
        rows = [{1: 1, 2: 1}, {0: 1, 1: 1}, {2: 1, 3: 1}]
        basis = _kernel(rows, 4)
        assert len(basis) == 1
        assert _apply(rows, basis[0]) == [0, 0, 0]

    def test_empty_system(self):
        """Test no rows leaves every column free."""
        assert len(_kernel([], 3)) == 3
