"""Tests for FilteredElement."""

import pytest
from fractions import Fraction

from josephideal.models import FilteredElement, LambdaLinear, SuperTensor, g_signature


class TestFilteredElement:
    """Test the degree 2 ⊕ 1 ⊕ 0 container."""

    def test_zero(self):
        """Test the zero element has empty parts."""
        zero = FilteredElement.zero(4, 1)
        assert zero.is_zero()
        assert (zero.m, zero.n) == (4, 1)

    def test_from_parts_with_matrix(self, e12):
        """Test a matrix degree-1 part is converted to a tensor."""
        element = FilteredElement.from_parts(degree1=e12, degree0=2)
        assert element.degree1 == SuperTensor.from_matrix(e12)
        assert element.degree2.is_zero()
        assert element.degree0 == LambdaLinear(2)

    def test_from_parts_with_dimensions_only(self):
        """Test an element built from a scalar alone."""
        element = FilteredElement.from_parts(degree0=LambdaLinear.lam(), m=2, n=1)
        assert element.degree2.signature == g_signature(2)
        assert not element.is_zero()

    def test_signature_checked(self, e12):
        """Test a wrong degree-2 signature is refused."""
        with pytest.raises(ValueError):
            FilteredElement(SuperTensor.from_matrix(e12), SuperTensor.from_matrix(e12), LambdaLinear())

    def test_scale_and_subtract(self, e12):
        """Test 2x - x - x vanishes."""
        x = FilteredElement.from_parts(degree1=e12, degree0=LambdaLinear(1, 1))
        assert (x.scale(2) - x - x).is_zero()

    def test_evaluate(self, e12):
        """Test substituting λ everywhere."""
        x = FilteredElement.from_parts(
            degree1=SuperTensor.from_matrix(e12).scale(LambdaLinear.lam()),
            degree0=LambdaLinear(0, 4),
        )
        value = x.evaluate(Fraction(1, 2))
        assert value.degree0 == 2
        assert value.degree1_matrix() == e12 * Fraction(1, 2)

    def test_degree1_matrix_needs_constant(self, e12):
        """Test a λ-dependent degree-1 part cannot become a matrix."""
        x = FilteredElement.from_parts(degree1=SuperTensor.from_matrix(e12).scale(LambdaLinear.lam()))
        with pytest.raises(ArithmeticError):
            x.degree1_matrix()

    def test_to_dict(self, e12):
        """Test the serialized form."""
        x = FilteredElement.from_parts(degree1=e12, degree0=LambdaLinear(0, -6))
        data = x.to_dict()
        assert data["degree2"] == []
        assert data["degree1"] == [[[1, 2], "1"]]
        assert data["degree0"] == "0+-6*lambda"
