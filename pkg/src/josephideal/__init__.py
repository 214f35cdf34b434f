"""josephideal - exact computer algebra for sl(m|n) and its Joseph ideal."""

__version__ = "1.0.0"

from .models import FilteredElement, LambdaLinear, SuperMatrix, SuperTensor, Weight, WeylOp
from .services import derive_lambda_c, emit_report, run_suite, sl_algebra

__all__ = [
    'FilteredElement',
    'LambdaLinear',
    'SuperMatrix',
    'SuperTensor',
    'Weight',
    'WeylOp',
    'derive_lambda_c',
    'emit_report',
    'run_suite',
    'sl_algebra',
]
