"""Exception types raised across the package."""


class GatempError(Exception):
    """Base class for all package errors."""


class LocalUncertaintyViolation(GatempError):
    """A local 2x2 covariance block violates the uncertainty relation."""


class BadVariance(GatempError):
    """Thermal variance below the vacuum value."""


class BadTransmissivity(GatempError):
    """Transmissivity outside [0, 1]."""


class NotStandardForm(GatempError):
    """Operation requires a covariance matrix in standard form."""


class NotApplicable(GatempError):
    """Operation undefined for this input (e.g. zero robustness)."""


class NegativeRadicand(GatempError):
    """Symplectic-eigenvalue formula received a non-CM input."""


class NotASpatialState(GatempError):
    """Entanglement quantities are undefined for aspatial correlations."""


class UnsamplableMarginal(GatempError):
    """The requested setting pair has no joint outcome distribution."""


class InsufficientSamples(GatempError):
    """Too few samples to form an estimate."""
