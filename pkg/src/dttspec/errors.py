"""Exception types shared across the package."""


class DttError(Exception):
    """Base class for every error this package raises on purpose."""


class SizeTooSmall(DttError, ValueError):
    """Matrix order below the minimum admissible size for the transform kind."""


class DimensionMismatch(DttError, ValueError):
    """Operands have incompatible shapes."""


class DivisibilityViolation(DttError, ValueError):
    """Identity parameter lies outside the identity's validity domain.

    The closed forms are false (the generic term degenerates) when the free
    integer parameter is a multiple of the forbidden modulus, so evaluation
    refuses instead of returning a silently wrong value.
    """


class DegenerateSpectrum(DttError, ArithmeticError):
    """Analytic eigenvalue table produced an impossible multiplicity set.

    Never expected for admissible input; raised so a contradiction between
    the closed-form tables and the requested order cannot pass unnoticed.
    """


class NotInvariant(DttError, ArithmeticError):
    """A supposedly invariant subspace leaked: projection residual too large."""


class DegenerateSystem(DttError, ArithmeticError):
    """Reduced 2x2 eigen-system is defective within tolerance."""


class NotSymmetric(DttError, ValueError):
    """Eigensolver input deviates from symmetry beyond tolerance."""


class NoConvergence(DttError, RuntimeError):
    """Jacobi iteration hit the sweep limit; carries the partial result."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
