"""Exception types shared across the package.

Everything raised on purpose by this package derives from :class:`AnnulusError`,
so callers (and the service layer) can catch domain failures in one place
without swallowing genuine bugs.
"""


class AnnulusError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidRadius(AnnulusError):
    """Outer radius does not define a proper annulus (needs R > 1 + 1e-6)."""


class GridTooCoarse(AnnulusError):
    """Quadrature grid was requested with too few nodes per circle."""


class LengthMismatch(AnnulusError):
    """Array of samples does not line up with the quadrature grid."""


class EvalAtZero(AnnulusError):
    """A function with negative exponents was evaluated at z = 0."""


class DegenerateFunction(AnnulusError):
    """All coefficients of a trial function vanished (cannot normalize)."""


class OnBoundary(AnnulusError):
    """Kernel evaluation point coincides with a boundary node."""


class ResolventSingular(AnnulusError):
    """A boundary node is (numerically) an eigenvalue of the matrix."""


class SingularMatrix(AnnulusError):
    """Matrix inverse required but the matrix is singular."""


class SpectrumOutside(AnnulusError):
    """Matrix spectrum is not strictly inside the annulus."""


class PointOutside(AnnulusError):
    """Evaluation point is not strictly inside the annulus."""


class NotNormalized(AnnulusError):
    """Operation requires sup |f| = 1 on the boundary."""


class NotMember(AnnulusError):
    """Matrix does not belong to the operator class the check assumes."""


class SamplerExhausted(AnnulusError):
    """Rejection sampler hit its attempt limit without producing a member."""


class NegativeInput(AnnulusError):
    """Scalar input that must be nonnegative was negative."""
