"""Tests for slot maps, φ, ψ and the decomposition of g⊙g."""

import pytest
from fractions import Fraction
from itertools import product

from josephideal.exceptions import InvalidCaseError, NotInSubspaceError, TensorShapeError
from josephideal.models import Slot, SuperMatrix, SuperTensor, g_signature
from josephideal.services import sl_algebra, tensoralg
from josephideal.services.hwsolver import adjoint_act
from josephideal.services.sampling import (
    make_rng,
    random_antisymmetric,
    random_element,
    random_g_tensor,
    random_symmetric,
)


class TestSlotMaps:
    """Test permutations and partial supertraces."""

    def test_pair_swap_even(self, e12, e21):
        """Test swapping even factors has no sign."""
        t = tensoralg.tensor_product(e12, e21)
        assert tensoralg.pair_swap(t) == tensoralg.tensor_product(e21, e12)

    def test_pair_swap_odd(self, e15):
        """Test swapping two odd factors gives a minus sign."""
        e51 = SuperMatrix.unit(4, 1, 5, 1)
        t = tensoralg.tensor_product(e15, e51)
        assert tensoralg.pair_swap(t) == -tensoralg.tensor_product(e51, e15)

    def test_odd_square_is_antisymmetric(self, e15):
        """Test X⊗X for odd X has no symmetric part."""
        t = tensoralg.tensor_product(e15, e15)
        assert tensoralg.super_symmetrize(t).is_zero()
        assert tensoralg.super_antisymmetrize(t) == t

    def test_even_square_is_symmetric(self, e12):
        """Test E_12⊗E_12 is super-symmetric."""
        assert tensoralg.is_super_symmetric(tensoralg.tensor_product(e12, e12))

    def test_str_23_multiplies(self, e12, e21):
        """Test str_{2,3}(X⊗Y) = XY."""
        t = tensoralg.tensor_product(e12, e21)
        assert tensoralg.str_23(t) == SuperTensor.from_matrix(e12 @ e21)

    def test_full_supertrace(self):
        """Test the contraction of δ is m - n."""
        assert tensoralg.full_supertrace(SuperTensor.kronecker(4, 1)) == 3

    def test_contract_same_kind_refused(self):
        """Test two V slots cannot be contracted."""
        t = SuperTensor.zero(2, 1, (Slot.V, Slot.V))
        with pytest.raises(TensorShapeError):
            tensoralg.contract_str(t, 0, 1)

    def test_contract_out_of_range(self, e12):
        """Test slot numbers must exist."""
        with pytest.raises(TensorShapeError):
            tensoralg.contract_str(SuperTensor.from_matrix(e12), 0, 2)

    def test_permute_length_checked(self, e12):
        """Test a permutation must match the slot count."""
        with pytest.raises(TensorShapeError):
            tensoralg.permute_signed(SuperTensor.from_matrix(e12), tensoralg.PAIR_SWAP)


class TestPairMaps:
    """Test bracket and Killing form on adjacent factors."""

    def test_bracket_pair(self, e12, e21):
        """Test E_12⊗E_21 ↦ E_11 - E_22."""
        image = tensoralg.bracket_pair(tensoralg.tensor_product(e12, e21), 0)
        assert image == SuperTensor.from_matrix(SuperMatrix(4, 1, {(0, 0): 1, (1, 1): -1}))

    def test_bracket_pair_odd(self, e15):
        """Test E_15⊗E_51 ↦ E_11 + E_55."""
        e51 = SuperMatrix.unit(4, 1, 5, 1)
        image = tensoralg.bracket_pair(tensoralg.tensor_product(e15, e51), 0)
        assert image == SuperTensor.from_matrix(SuperMatrix(4, 1, {(0, 0): 1, (4, 4): 1}))

    def test_killing_pair_to_scalar(self, e12, e21):
        """Test a 2-factor tensor reduces to a scalar under key ()."""
        value = tensoralg.killing_pair(tensoralg.tensor_product(e12, e21), 0)
        assert value.signature == ()
        assert value[()] == 6

    def test_pair_map_middle(self, e12, e21):
        """Test acting on factors 2 and 3 of a degree-3 tensor."""
        t = tensoralg.tensor_product(e12, e12, e21)
        image = tensoralg.bracket_pair(t, 1)
        h = SuperMatrix(4, 1, {(0, 0): 1, (1, 1): -1})
        assert image == tensoralg.tensor_product(e12, h)

    def test_no_pair_at_position(self, e12):
        """Test a single factor has no adjacent pair."""
        with pytest.raises(TensorShapeError):
            tensoralg.bracket_pair(SuperTensor.from_matrix(e12), 0)

    def test_kappa(self, e12, e21):
        """Test 𝒦(X⊗Y) = ⟨X, Y⟩."""
        assert tensoralg.kappa(tensoralg.tensor_product(e12, e21)) == 6


class TestPhi:
    """Test the morphism φ: V⊗V* → g⊙g."""

    def test_constants(self):
        """Test the constants for m - n = 3."""
        c = tensoralg.PhiConstants.for_difference(3)
        assert (c.a, c.c1, c.c2) == (Fraction(3, 5), Fraction(-11, 24), Fraction(3, 8))
        assert tensoralg.phi_conditions(3, c) == (0, 0, 0)

    @pytest.mark.parametrize("d", [0, 1, -1, 2, -2])
    def test_undefined_differences(self, d):
        """Test φ has no constants when d² ∈ {0, 1, 4}."""
        with pytest.raises(InvalidCaseError):
            tensoralg.PhiConstants.for_difference(d)

    def test_perturbation_breaks_conditions(self):
        """Test changing a constant violates some condition."""
        c = tensoralg.PhiConstants.for_difference(3)
        for which in ("a", "c1", "c2"):
            assert tensoralg.phi_conditions(3, c.perturbed(which)) != (0, 0, 0)

    @pytest.mark.parametrize("m,n", [(4, 1), (1, 4), (5, 1)])
    def test_left_inverse(self, m, n, rng):
        """Test str_{2,3}∘φ = id and str_{1,2}∘φ = 0, including the trace part."""
        b = random_element(m, n, rng, terms=3) + SuperMatrix.identity(m, n) * Fraction(2, 3)
        image = tensoralg.phi(b)
        assert tensoralg.str_23(image) == SuperTensor.from_matrix(b)
        assert tensoralg.str_12(image).is_zero()
        assert tensoralg.is_super_symmetric(image)

    def test_phi_identity_kappa(self):
        """Test 𝒦(φ(δ)) is nonzero, so it can carry a scalar."""
        assert tensoralg.kappa(tensoralg.phi_identity(4, 1)) != 0

    def test_psi_left_inverse(self, rng):
        """Test str_{2,3}∘ψ = id on sl(m|n)."""
        x = random_element(4, 1, rng, terms=3)
        image = tensoralg.psi(x)
        assert tensoralg.str_23(image) == SuperTensor.from_matrix(x)
        assert tensoralg.pair_swap(image) == -image

    def test_psi_needs_supertraceless(self):
        """Test ψ refuses the identity."""
        with pytest.raises(NotInSubspaceError):
            tensoralg.psi(SuperMatrix.identity(4, 1))


class TestDecomposition:
    """Test A = B + C + D + E on g⊙g."""

    def test_parts_sum_to_input(self, rng):
        """Test the four parts add back up and have their defining properties."""
        for _ in range(3):
            a = random_symmetric(4, 1, rng)
            parts = tensoralg.decompose_sym(a)
            assert parts.total() == a
            assert tensoralg.str_23(parts.b).is_zero()
            assert tensoralg.str_23(parts.c).is_zero()
            assert tensoralg.kappa(parts.d) == 0
            assert tensoralg.kappa(parts.b) == 0
            assert tensoralg.kappa(parts.c) == 0
            assert tensoralg.upper_symmetric(parts.b) == parts.b
            assert tensoralg.upper_antisymmetric(parts.c) == parts.c

    def test_sl52(self, rng):
        """Test the decomposition for sl(5|2), where n > 1."""
        for _ in range(3):
            a = random_symmetric(5, 2, rng)
            parts = tensoralg.decompose_sym(a)
            assert parts.total() == a
            assert tensoralg.str_23(parts.b).is_zero()
            assert tensoralg.str_23(parts.c).is_zero()
            assert tensoralg.kappa(parts.b) == tensoralg.kappa(parts.c) == tensoralg.kappa(parts.d) == 0
            assert tensoralg.kappa(parts.e) == tensoralg.kappa(a)

    def test_pure_trace(self):
        """Test φ(δ) is its own E-part."""
        a = tensoralg.phi_identity(4, 1)
        parts = tensoralg.decompose_sym(a)
        assert parts.b.is_zero() and parts.c.is_zero() and parts.d.is_zero()
        assert parts.e == a

    def test_requires_symmetric(self, e12, e21):
        """Test a non-symmetric tensor is refused."""
        with pytest.raises(NotInSubspaceError):
            tensoralg.decompose_sym(tensoralg.tensor_product(e12, e21))

    def test_requires_two_factors(self, e12):
        """Test the shape is checked before symmetry."""
        with pytest.raises(TensorShapeError):
            tensoralg.decompose_sym(SuperTensor.from_matrix(e12))

    def test_refuses_small_difference(self):
        """Test sl(3|1) has no decomposition."""
        x = SuperMatrix.unit(3, 1, 1, 2)
        with pytest.raises(InvalidCaseError):
            tensoralg.decompose_sym(tensoralg.tensor_product(x, x))

    def test_antisym_parts(self, rng):
        """Test P + Q = A with Q the copy of g."""
        a = random_antisymmetric(4, 1, rng)
        p, q = tensoralg.antisym_parts(a)
        assert p + q == a
        assert tensoralg.str_23(p).is_zero()
        assert tensoralg.antisym_parts(q)[1] == q


class TestCartanProjection:
    """Test the Cartan part X⊚Y."""

    def test_even_square_of_commuting_root(self):
        """Test E_14⊗E_14 is its own Cartan part."""
        x = SuperMatrix.unit(4, 1, 1, 4)
        t = tensoralg.tensor_product(x, x)
        assert tensoralg.cartan_part(t) == t
        assert tensoralg.project_offcartan(t).is_zero()

    def test_projection_idempotent(self, rng):
        """Test applying the projection twice changes nothing."""
        t = tensoralg.tensor_product(random_element(4, 1, rng), random_element(4, 1, rng))
        once = tensoralg.cartan_part(t)
        assert tensoralg.cartan_part(once) == once

    def test_odd_square_has_no_cartan_part(self, e15):
        """Test the antisymmetric E_15⊗E_15 projects to zero."""
        assert tensoralg.cartan_product(e15, e15).is_zero()

    def test_scalar_of(self, e12):
        """Test detection of proportional tensors."""
        t = SuperTensor.from_matrix(e12)
        assert tensoralg.scalar_of(t.scale(Fraction(-3, 2)), t) == Fraction(-3, 2)
        assert tensoralg.scalar_of(t + SuperTensor.from_matrix(SuperMatrix.unit(4, 1, 2, 3)), t) is None
        assert tensoralg.scalar_of(SuperTensor.zero(4, 1, g_signature(1)), t) == 0


def _parity(m: int, i: int) -> int:
    return 0 if i < m else 1


class TestDisplayedFormulas:
    """Test componentwise against the closed formulas for str_{1,4} and φ(δ)."""

    @pytest.mark.parametrize("m,n", [(2, 1), (1, 2)])
    def test_str_14_signs(self, m, n):
        """Test str_{1,4} A^i_j^k_i carries (-1)^(|i| + |i|(|j| + |k|)) on every basis tensor."""
        size = m + n
        for i, j, k, l in product(range(size), repeat=4):
            t = SuperTensor.build(m, n, g_signature(2), {(i, j, k, l): Fraction(1)})
            result = tensoralg.contract_str(t, 0, 3)
            assert result.signature == (Slot.VSTAR, Slot.V)
            if i != l:
                assert result.is_zero()
                continue
            pi, pj, pk = _parity(m, i), _parity(m, j), _parity(m, k)
            expected = (-1) ** (pi + pi * (pj + pk))
            assert dict(result.items()) == {(j, k): expected}

    def test_str_14_after_str_23_is_killing(self, e12, e21):
        """Test 2(m-n) str_{1,4}(str_{2,3}(E_12⊗E_21)) = ⟨E_12, E_21⟩."""
        t = tensoralg.tensor_product(e12, e21)
        assert 2 * 3 * tensoralg.full_supertrace(tensoralg.str_23(t)) == 6

    @pytest.mark.parametrize("m,n", [(4, 1), (5, 2), (1, 4)])
    def test_phi_identity_components(self, m, n):
        """Test φ(δ)^(i j k l) = ((-1)^|k| d δ_il δ_kj - δ_ij δ_kl) / (d² - 1)."""
        d = m - n
        size = m + n
        expected = {}
        for i, j, k, l in product(range(size), repeat=4):
            value = (-1) ** _parity(m, k) * d * (i == l) * (k == j) - (i == j) * (k == l)
            if value:
                expected[(i, j, k, l)] = Fraction(value, d * d - 1)
        assert tensoralg.phi_identity(m, n) == SuperTensor.build(m, n, g_signature(2), expected)

    def test_phi_identity_kappa_value(self):
        """Test 𝒦(φ(δ)) = 2(m-n)² at sl(4|1)."""
        assert tensoralg.kappa(tensoralg.phi_identity(4, 1)) == 18


class TestChi:
    """Test the idempotent χ = φ∘str_{2,3} on g⊙g."""

    @pytest.mark.parametrize("m,n,count", [(4, 1, 20), (5, 2, 4)])
    def test_idempotent(self, m, n, count, rng):
        """Test χ(χ(A)) = χ(A) and χ kills B and C."""
        for _ in range(count):
            a = random_symmetric(m, n, rng)
            once = tensoralg.chi(a)
            assert tensoralg.chi(once) == once
            parts = tensoralg.decompose_sym(a)
            assert tensoralg.chi(parts.b).is_zero()
            assert tensoralg.chi(parts.c).is_zero()
            assert tensoralg.chi(parts.d) == parts.d

    def test_requires_symmetric(self, e12, e21):
        """Test χ refuses a tensor outside g⊙g."""
        with pytest.raises(NotInSubspaceError):
            tensoralg.chi(tensoralg.tensor_product(e12, e21))


class TestEquivariance:
    """Test every map commutes with ad(Z) for each basis element Z of sl(4|1)."""

    @pytest.fixture(scope="class")
    def samples(self):
        rng = make_rng(77)
        return {
            "element": random_element(4, 1, rng, terms=4),
            "pair": random_g_tensor(4, 1, rng, k=2, terms=2),
            "symmetric": random_symmetric(4, 1, rng),
        }

    @pytest.fixture(scope="class")
    def basis(self):
        return sl_algebra(4, 1).basis

    def test_contractions(self, samples, basis):
        """Test str_{2,3} and the pair swap."""
        t = samples["pair"]
        for z in basis:
            assert tensoralg.str_23(adjoint_act(z, t)) == adjoint_act(z, tensoralg.str_23(t))
            assert tensoralg.pair_swap(adjoint_act(z, t)) == adjoint_act(z, tensoralg.pair_swap(t))

    def test_phi_and_psi(self, samples, basis):
        """Test φ and ψ on a random element of sl(4|1)."""
        x = SuperTensor.from_matrix(samples["element"])
        for z in basis:
            moved = adjoint_act(z, x)
            assert tensoralg.phi(moved) == adjoint_act(z, tensoralg.phi(x))
            assert tensoralg.psi(moved) == adjoint_act(z, tensoralg.psi(x))

    def test_decomposition(self, samples, basis):
        """Test χ, each of B, C, D, E and the invariance of 𝒦."""
        a = samples["symmetric"]
        parts = tensoralg.decompose_sym(a)
        for z in basis:
            moved = adjoint_act(z, a)
            assert tensoralg.chi(moved) == adjoint_act(z, tensoralg.chi(a))
            for before, after in zip(parts, tensoralg.decompose_sym(moved)):
                assert after == adjoint_act(z, before)
            assert tensoralg.kappa(moved) == 0

    def test_cartan_part(self, samples, basis):
        """Test the projection onto the Cartan summand."""
        t = samples["pair"]
        image = tensoralg.cartan_part(t)
        for z in basis:
            assert tensoralg.cartan_part(adjoint_act(z, t)) == adjoint_act(z, image)
