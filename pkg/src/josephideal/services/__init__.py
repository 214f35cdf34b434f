"""Algebra, tensor calculus, ideal and realization services, plus the suite driver."""

from .hwsolver import beta3_check, highest_weight_vectors, verify_tensor_square
from .joseph import derive_lambda_c, generator, reduce_pair, s_tensor, tau
from .reporting import emit_report
from .superalgebra import bracket, killing, sl_algebra, supertrace
from .suites import list_suites, run_suite, validate_config
from .tensoralg import decompose_sym, phi, psi
from .weylreal import build_realization, check_homomorphism, check_joseph_annihilated, realize_tensor

__all__ = [
    "beta3_check",
    "bracket",
    "build_realization",
    "check_homomorphism",
    "check_joseph_annihilated",
    "decompose_sym",
    "derive_lambda_c",
    "emit_report",
    "generator",
    "highest_weight_vectors",
    "killing",
    "list_suites",
    "phi",
    "psi",
    "realize_tensor",
    "reduce_pair",
    "run_suite",
    "s_tensor",
    "sl_algebra",
    "supertrace",
    "tau",
    "validate_config",
    "verify_tensor_square",
]
