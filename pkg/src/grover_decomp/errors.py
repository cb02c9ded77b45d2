"""Exception hierarchy shared by all modules."""


class GroverDecompError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(GroverDecompError):
    """Operands have incompatible dimensions."""


class NonSquare(GroverDecompError):
    """A square matrix was required."""


class DegenerateSeed(GroverDecompError):
    """A Gram-Schmidt seed is (numerically) dependent on the accepted basis."""


class OutOfRange(GroverDecompError):
    """A scalar parameter lies outside its admissible range."""


class InfeasibleK(GroverDecompError):
    """The requested iteration count admits no matching phase."""


class TooLargeForDense(GroverDecompError):
    """Dimension exceeds the dense-matrix cap."""


class NonIntegralM(GroverDecompError):
    """lambda * N does not round to an integer target count."""


class ThetaInconsistent(UserWarning):
    """Rotation phase does not satisfy cos(theta) = 1 - lambda*(1 - cos(alpha))."""
