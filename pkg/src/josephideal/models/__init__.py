"""Value types: weights, super matrices and tensors, filtered elements, operators, reports."""

from .filtered import FilteredElement
from .lambda_linear import LambdaLinear
from .reports import (
    CaseReport,
    CheckResult,
    ReportDocument,
    SubspaceBasis,
    SuiteConfig,
    SuiteReport,
    WeightSpaceEntry,
    WeightSpaceReport,
)
from .supermatrix import SuperMatrix, check_case, index_parity
from .supertensor import Slot, SlotPermutation, SuperTensor, g_signature
from .weight import RootSystem, Weight, format_rational, parse_rational
from .weyl_op import WeylOp, weyl_mul

__all__ = [
    "CaseReport",
    "CheckResult",
    "FilteredElement",
    "LambdaLinear",
    "ReportDocument",
    "RootSystem",
    "Slot",
    "SlotPermutation",
    "SubspaceBasis",
    "SuiteConfig",
    "SuiteReport",
    "SuperMatrix",
    "SuperTensor",
    "Weight",
    "WeightSpaceEntry",
    "WeightSpaceReport",
    "WeylOp",
    "check_case",
    "format_rational",
    "g_signature",
    "index_parity",
    "parse_rational",
    "weyl_mul",
]
