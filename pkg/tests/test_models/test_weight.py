"""Tests for Weight and RootSystem."""

import pytest
from fractions import Fraction

from josephideal.exceptions import WeightError
from josephideal.models import Weight, format_rational, parse_rational


class TestRationalFormatting:
    """Test the p/q text form of rationals."""

    def test_integral_values_have_no_denominator(self):
        """Test integers print without a slash."""
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(0) == "0"

    def test_negative_fraction(self):
        """Test the sign sits on the numerator."""
        assert format_rational(Fraction(-1, 32)) == "-1/32"

    def test_parse_inverts_format(self):
        """Test parsing the printed form gives the value back."""
        value = Fraction(-3, 4)
        assert parse_rational(format_rational(value)) == value
        assert parse_rational(" 7 ") == 7


class TestWeightConstruction:
    """Test the zero-sum convention."""

    def test_coordinates_must_sum_to_zero(self):
        """Test a weight with nonzero coordinate sum is rejected."""
        with pytest.raises(WeightError):
            Weight(4, 1, (1, 0, 0, 0, 0))

    def test_wrong_length(self):
        """Test the coordinate count must be m + n."""
        with pytest.raises(WeightError):
            Weight(4, 1, (1, -1))

    def test_combination_uses_one_based_indices(self):
        """Test 2ε1 - ε4 - δ1 lands in the right coordinates."""
        w = Weight.combination(4, 1, eps={1: 2, 4: -1}, dlt={1: -1})
        assert w.coords == (2, 0, 0, -1, -1)

    def test_combination_rejects_missing_index(self):
        """Test δ2 does not exist for n = 1."""
        with pytest.raises(WeightError):
            Weight.combination(4, 1, eps={1: 1}, dlt={2: -1})

    def test_repeated_contributions_add(self):
        """Test two entries for the same index accumulate."""
        w = Weight.combination(3, 1, eps={1: 1}, dlt={1: -1}) + Weight.combination(3, 1, eps={1: 1}, dlt={1: -1})
        assert w.coords[0] == 2
        assert w.coords[3] == -2


class TestWeightArithmetic:
    """Test the vector operations."""

    def test_add_and_subtract(self):
        """Test addition and subtraction are coordinatewise."""
        a = Weight(2, 1, (1, -1, 0))
        b = Weight(2, 1, (0, 1, -1))
        assert (a + b).coords == (1, 0, -1)
        assert (a - b).coords == (1, -2, 1)

    def test_scalar_multiple(self):
        """Test scalar multiplication with a Fraction."""
        a = Weight(2, 1, (2, 0, -2))
        assert (a * Fraction(1, 2)).coords == (1, 0, -1)
        assert (Fraction(1, 2) * a) == a * Fraction(1, 2)

    def test_mixing_algebras_fails(self):
        """Test weights of different algebras do not add."""
        with pytest.raises(WeightError):
            Weight.zero(2, 1) + Weight.zero(3, 1)

    def test_label(self):
        """Test the readable label."""
        w = Weight(4, 1, (2, 0, 0, -1, -1))
        assert w.label() == "2ε1-ε4-δ1"
        assert Weight.zero(4, 1).label() == "0"

    def test_to_json(self):
        """Test coordinates serialize as p/q strings."""
        w = Weight(2, 1, (Fraction(1, 2), Fraction(-1, 2), 0))
        assert w.to_json() == ["1/2", "-1/2", "0"]
