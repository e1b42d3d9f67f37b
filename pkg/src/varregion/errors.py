"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class AccuracyError(RuntimeError):
    """Adaptive quadrature failed to meet the requested tolerance.

    Carries the best available estimate and its error bound so callers can
    decide whether to accept a degraded result.
    """

    def __init__(self, message, estimate=None, error_bound=None):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound


class DegenerateRegionError(ValueError):
    """The region collapsed to a single point; polygon operations do not apply."""


class GeometryError(RuntimeError):
    """A computed polygon violates convexity beyond tolerance."""


class InconclusiveError(RuntimeError):
    """A winding-number count could not be trusted (curve too close to zero)."""
