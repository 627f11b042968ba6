"""Exception types shared across the package."""


class QsubradError(Exception):
    """Base class for every package-specific error."""


class NoCherenkovEmission(QsubradError):
    """Emission is kinematically forbidden: n(omega) * beta <= 1."""


class UnequalCovariance(QsubradError):
    """Analytic overlap requested for Gaussian modes with different sigmas."""


class GridTooCoarse(QsubradError):
    """Sample grid does not resolve the requested phase oscillation."""


class NotNormalized(QsubradError):
    """State coefficients do not satisfy sum |c|^2 = 1."""


class TooManyParticles(QsubradError):
    """Particle number exceeds the exact-enumeration bound."""


class DuplicateCarrier(QsubradError):
    """Two modes share the same carrier wavevector."""


class ConfigError(QsubradError):
    """Invalid, missing, or unknown configuration entry."""
