"""Exception hierarchy for josephideal."""


class JosephError(Exception):
    """Base class for all errors raised by the package."""


class InvalidCaseError(JosephError, ValueError):
    """The pair (m, n) is outside the range an operation supports."""


class WeightError(JosephError, ValueError):
    """A weight violates the zero-sum convention or belongs to another algebra."""


class NonIntegralWeightError(WeightError):
    """A weight pairs non-integrally with some even coroot."""


class IsotropicRootError(WeightError):
    """A coroot was requested for an odd (isotropic) root."""


class TensorShapeError(JosephError, ValueError):
    """Slot signature, slot permutation or contraction pattern is invalid."""


class NotInSubspaceError(JosephError, ValueError):
    """An input is not in the subspace an operation requires (g, g⊙g, ...)."""


class ReductionError(JosephError):
    """A reduction modulo the quadratic ideal hit a nonzero Cartan component."""


class RealizationError(JosephError):
    """Two bracket routes gave different images for the same element."""


class ResourceLimitError(JosephError):
    """A dense linear-algebra block would exceed the configured memory cap."""


class ConfigError(JosephError):
    """The suite configuration is invalid."""
