"""Tests for the Weyl algebra realization π_μ."""

import pytest
from fractions import Fraction

from josephideal.exceptions import InvalidCaseError, RealizationError, TensorShapeError
from josephideal.models import CheckResult, SuperMatrix, SuperTensor, WeylOp
from josephideal.services import joseph, weylreal
from josephideal.services.tensoralg import kappa, phi_identity, tensor_product

MU = Fraction(-3, 2)


@pytest.fixture
def realization41():
    return weylreal.build_realization(MU, 4, 1)


class TestBuild:
    """Test the images of the matrix units."""

    def test_critical_mu(self):
        """Test μ = (n - m)/2."""
        assert weylreal.critical_mu(4, 1) == MU
        assert weylreal.critical_mu(5, 2) == MU

    def test_lowering_units_multiply(self, realization41):
        """Test E_21 acts by x_1."""
        assert realization41.unit_images[(1, 0)] == WeylOp.x(4, 1, 0)

    def test_corner_unit(self, realization41):
        """Test E_11 acts by μ - 𝔼."""
        expected = WeylOp.scalar(4, 1, MU) - WeylOp.euler(4, 1)
        assert realization41.unit_images[(0, 0)] == expected

    def test_parities(self, realization41):
        """Test the odd units map to odd operators."""
        assert realization41.unit_images[(4, 0)].parity == 1
        assert realization41.unit_images[(0, 1)].parity == 0

    def test_refuses_m_one(self):
        """Test m = 1 leaves no even coordinate to start from."""
        with pytest.raises(InvalidCaseError):
            weylreal.build_realization(0, 1, 2)

    def test_serialized(self, realization41):
        """Test the report form names every basis element."""
        data = realization41.to_dict()
        assert data["mu"] == "-3/2"
        assert len(data["images"]) == 24


class TestHomomorphism:
    """Test π respects the super bracket."""

    @pytest.mark.parametrize("mu", [MU, Fraction(0), Fraction(5, 7)])
    def test_all_pairs(self, mu):
        """Test every ordered basis pair for any μ."""
        result = weylreal.check_homomorphism(weylreal.build_realization(mu, 4, 1))
        assert result.passed, result.detail
        assert result.expected == 576

    def test_small_superalgebra(self):
        """Test sl(2|1) as well."""
        assert weylreal.check_homomorphism(weylreal.build_realization(1, 2, 1)).passed


class TestRealizeTensor:
    """Test images of tensors and filtered elements."""

    def test_single_factor(self, realization41, e12):
        """Test a one-factor tensor maps to π(X)."""
        image = weylreal.realize_tensor(realization41, SuperTensor.from_matrix(e12))
        assert image == realization41.image(e12)

    def test_phi_identity_is_scalar(self, realization41):
        """Test π(φ(δ)) is λᶜ times 𝒦(φ(δ))."""
        t = phi_identity(4, 1)
        image = weylreal.realize_tensor(realization41, t)
        assert image.is_multiplication()
        assert image.constant_term() / kappa(t) == Fraction(-1, 32)

    def test_generator_annihilated(self, realization41, e12, e21):
        """Test generator(E_12, E_21) acts by zero at λᶜ."""
        element = joseph.generator(e12, e21)
        assert weylreal.realize_tensor(realization41, element, Fraction(-1, 32)).is_zero()

    def test_odd_generator_annihilated(self, realization41, e15):
        """Test an odd pair is annihilated as well."""
        element = joseph.generator(e15, SuperMatrix.unit(4, 1, 5, 1))
        assert weylreal.realize_tensor(realization41, element, Fraction(-1, 32)).is_zero()

    def test_needs_lambda(self, realization41, e12, e21):
        """Test a λ-dependent element needs a value."""
        with pytest.raises(RealizationError):
            weylreal.realize_tensor(realization41, joseph.generator(e12, e21))

    def test_refuses_trace_factors(self, realization41):
        """Test factors outside sl(m|n) are refused."""
        identity = SuperMatrix.identity(4, 1)
        with pytest.raises(TensorShapeError):
            weylreal.realize_tensor(realization41, tensor_product(identity, identity))


class TestCasimir:
    """Test the image of the Casimir element."""

    def test_central(self, realization41):
        """Test π(Casimir) supercommutes with π(g)."""
        result = weylreal.casimir_commutes(realization41)
        assert result.passed, result.detail

    def test_scalar_at_critical_mu(self, realization41):
        """Test π(Casimir) acts on constants by -3/2."""
        assert weylreal.casimir_scalar(realization41) == MU


class TestCyclicity:
    """Test the bounded-degree shadow of simplicity."""

    def test_constant_generates(self, realization41):
        """Test degree ≤ 2 is reached from 1 and lowered back to constants."""
        results = weylreal.cyclicity_shadow(realization41, max_degree=2)
        assert all(r.passed for r in results), [(r.name, r.actual) for r in results]


class TestAnnihilation:
    """Test the full annihilation check."""

    def test_refuses_small_difference(self):
        """Test sl(3|1) is outside the range of the check."""
        with pytest.raises(InvalidCaseError):
            weylreal.check_joseph_annihilated(3, 1)

    @pytest.mark.slow
    def test_sl41_critical(self):
        """Test all generators at λᶜ vanish on π_μ with μ = -3/2."""
        report = weylreal.check_joseph_annihilated(4, 1)
        assert report.passed, report.failing_cases
        assert report.to_dict()["generators"] == "pass"
        assert report.lambda_c == report.expected_lambda_c == Fraction(-1, 32)
        assert report.to_dict()["lambda_c"] == "-1/32"

    @pytest.mark.slow
    def test_sl62_critical(self):
        """Test sl(6|2), where both parities have more than one coordinate."""
        report = weylreal.check_joseph_annihilated(6, 2, jobs=2)
        assert report.passed, report.failing_cases
        assert report.lambda_c == Fraction(-1, 40)

    @pytest.mark.slow
    def test_sl41_wrong_mu(self):
        """Test μ = 0 is a homomorphism but breaks the C and D images."""
        report = weylreal.check_joseph_annihilated(4, 1, mu=0, lambda_c=Fraction(-1, 32))
        assert report.homomorphism.passed
        assert not report.cde_images.passed
        assert not report.passed

    def test_wrong_lambda_is_reported(self):
        """Test a derived λᶜ that differs from the closed form fails the report."""
        ok = CheckResult("homomorphism", True)
        report = weylreal.RealizationReport(
            4, 1, MU, ok, ok, ok, ok, lambda_c=Fraction(-1, 30), expected_lambda_c=Fraction(-1, 32)
        )
        assert not report.passed
        assert report.checks[0].name == "lambda_c_closed_form"
        assert report.to_dict()["expected_lambda_c"] == "-1/32"

    @pytest.mark.slow
    def test_cde_images_at_zero(self):
        """Test the C/D/E images fail for μ = 0 and hold at the critical μ."""
        zero = weylreal.build_realization(0, 4, 1)
        critical = weylreal.build_realization(MU, 4, 1)
        assert not weylreal.cde_images_check(zero, Fraction(-1, 32)).passed
        assert weylreal.cde_images_check(critical, Fraction(-1, 32)).passed
