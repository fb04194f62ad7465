class QillumError(ValueError):
    """Base class for input validation failures."""


class DimensionError(QillumError):
    pass


class NotHermitianError(QillumError):
    pass


class InvalidStateError(QillumError):
    pass


class InvalidMeasurementError(QillumError):
    pass


class NoClosedFormError(QillumError):
    """Raised when an exact value is requested for a non-commuting ensemble.

    Use :func:`qillum.oracle.optimize_accessible_info` for a numerical lower bound.
    """
