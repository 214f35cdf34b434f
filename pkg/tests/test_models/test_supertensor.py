"""Tests for SuperTensor and SlotPermutation."""

import pytest
from fractions import Fraction

from josephideal.exceptions import TensorShapeError
from josephideal.models import LambdaLinear, Slot, SlotPermutation, SuperMatrix, SuperTensor, g_signature


class TestSlotPermutation:
    """Test slot rearrangements and their Koszul signs."""

    def test_rejects_non_permutation(self):
        """Test repeated slots are refused."""
        with pytest.raises(TensorShapeError):
            SlotPermutation((0, 0, 1))

    def test_inverse(self):
        """Test p then p⁻¹ is the identity."""
        p = SlotPermutation((2, 0, 3, 1))
        assert p.then(p.inverse()) == SlotPermutation.identity(4)

    def test_then_order(self):
        """Test composition applies self first."""
        swap01 = SlotPermutation.transposition(3, 0, 1)
        swap12 = SlotPermutation.transposition(3, 1, 2)
        assert swap01.then(swap12).order == (1, 2, 0)

    def test_koszul_counts_odd_crossings(self):
        """Test only odd/odd reversals contribute."""
        swap = SlotPermutation.transposition(2, 0, 1)
        assert swap.koszul_exponent([1, 1]) == 1
        assert swap.koszul_exponent([1, 0]) == 0
        cycle = SlotPermutation((2, 0, 1))
        assert cycle.koszul_exponent([1, 1, 1]) == 2


class TestSuperTensorConstruction:
    """Test construction and validation."""

    def test_unit_product_is_one_based(self):
        """Test E_12 ⊗ E_34 has the 0-based key (0, 1, 2, 3)."""
        t = SuperTensor.unit_product(4, 1, (1, 2), (3, 4))
        assert t.signature == g_signature(2)
        assert t[(0, 1, 2, 3)] == 1
        assert t[(0, 0, 0, 0)] == 0

    def test_bad_index_length(self):
        """Test a multi-index must match the signature."""
        with pytest.raises(TensorShapeError):
            SuperTensor(2, 1, g_signature(1), {(0, 1, 2): 1})

    def test_out_of_range_index(self):
        """Test indices must be below m + n."""
        with pytest.raises(TensorShapeError):
            SuperTensor(2, 1, g_signature(1), {(0, 3): 1})

    def test_kronecker(self):
        """Test δ has a 1 on every diagonal index."""
        delta = SuperTensor.kronecker(2, 1)
        assert len(delta) == 3
        assert delta.to_matrix() == SuperMatrix.identity(2, 1)

    def test_matrix_shaped(self):
        """Test only alternating V, V* signatures are matrix shaped."""
        assert SuperTensor.zero(2, 1, g_signature(3)).is_matrix_shaped()
        assert not SuperTensor.zero(2, 1, (Slot.V, Slot.V)).is_matrix_shaped()


class TestSuperTensorArithmetic:
    """Test linear structure and products."""

    def test_tensor_concatenates(self, e12, e21):
        """Test X ⊗ Y concatenates indices without sign."""
        t = SuperTensor.from_matrix(e12).tensor(SuperTensor.from_matrix(e21))
        assert t == SuperTensor.unit_product(4, 1, (1, 2), (2, 1))

    def test_add_cancels(self, e12):
        """Test T - T is the zero tensor."""
        t = SuperTensor.from_matrix(e12)
        assert (t - t).is_zero()

    def test_signature_mismatch(self, e12):
        """Test tensors of different shapes do not add."""
        with pytest.raises(TensorShapeError):
            SuperTensor.from_matrix(e12) + SuperTensor.zero(4, 1, g_signature(2))

    def test_scale_by_lambda(self, e12):
        """Test scaling by λ stores LambdaLinear components."""
        t = SuperTensor.from_matrix(e12).scale(LambdaLinear.lam())
        assert t.has_lambda()
        assert t.evaluate(Fraction(1, 2))[(0, 1)] == Fraction(1, 2)

    def test_json_form(self):
        """Test the JSON form uses 1-based indices and p/q values."""
        t = SuperTensor(2, 1, g_signature(1), {(0, 1): Fraction(-1, 2)})
        data = t.to_json()
        assert data["entries"] == [[[1, 2], "-1/2"]]
        assert data["signature"] == ["V", "V*"]
        assert SuperTensor.from_json(data) == t

    def test_json_keeps_lambda(self, e12):
        """Test λ-dependent components survive the JSON form."""
        t = SuperTensor.from_matrix(e12).scale(LambdaLinear(Fraction(-3, 4), 24))
        data = t.to_json()
        assert data["entries"] == [[[1, 2], "-3/4+24*lambda"]]
        back = SuperTensor.from_json(data)
        assert back == t
        assert back.has_lambda()
