"""Exception types shared across the package."""


class CubelikeError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatchError(CubelikeError, ValueError):
    """Operands live in Boolean groups of different dimension, or a sequence has a bad length."""


class StructureError(CubelikeError, ValueError):
    """A matrix lacks the structure an operation requires (circulant, symmetric, orthogonal)."""


class DomainError(CubelikeError, ValueError):
    """Integer-only or real-only operation applied to data outside its domain."""


class ParityError(CubelikeError, ValueError):
    """An eigenvalue difference is odd; the spectrum cannot belong to an integer weight vector."""


class ConsistencyError(CubelikeError):
    """A cross-check between two independent computations failed."""


class ReconstructionError(CubelikeError):
    """The reconstruction system is singular or too ill-conditioned to solve."""


class ResourceLimitError(CubelikeError):
    """Requested dimension exceeds the supported dense-computation limit."""


class OverflowGuardError(CubelikeError, OverflowError):
    """Exact integer computation would exceed the 64-bit range; refusing to wrap."""


class VerificationError(CubelikeError):
    """Numerical evolution contradicts a claimed classification."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
