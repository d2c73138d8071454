"""Exception types raised by dipolar_qc."""


class DipolarQCError(Exception):
    """Base class for all errors raised by this package."""


class NotHermitianError(DipolarQCError, ValueError):
    pass


class NoConvergenceError(DipolarQCError, RuntimeError):
    pass


class NotPSDError(DipolarQCError, ValueError):
    pass


class NotDensityMatrixError(DipolarQCError, ValueError):
    pass


class DimensionMismatchError(DipolarQCError, ValueError):
    pass


class BoltzmannOverflowError(DipolarQCError, OverflowError):
    """A Boltzmann exponent is too large to evaluate in double precision."""


class InvalidTemperatureError(DipolarQCError, ValueError):
    pass


class GibbsMismatchError(DipolarQCError, RuntimeError):
    """Closed-form and numerically diagonalized Gibbs states disagree."""


class OracleMismatchError(DipolarQCError, RuntimeError):
    """A closed-form correlation value disagrees with the brute-force minimum."""


class SweepError(DipolarQCError, RuntimeError):
    """A sweep row failed; ``x`` holds the offending axis value."""

    def __init__(self, message, x=None):
        super().__init__(message)
        self.x = x
