"""Exception types raised by the film plasmon library."""


class FilmPlasmonError(Exception):
    """Base class for all library errors."""


class DomainError(FilmPlasmonError, ValueError):
    """An input lies outside the physical or mathematical domain."""


class NonConvergentIntegralError(DomainError):
    """The conductivity integral does not converge (Re w <= 0 with p < 1)."""


class QuadratureAccuracyError(FilmPlasmonError, ArithmeticError):
    """Requested accuracy was not reached.

    The best available estimate is kept on ``estimate`` together with its
    error bound on ``error``.
    """

    def __init__(self, message, estimate=None, error=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class ResonanceSingularityError(FilmPlasmonError, ArithmeticError):
    """Evaluation hit the plasma resonance, where the wave number diverges."""


class AmbiguousCrossingError(FilmPlasmonError):
    """More critical-frequency crossings than a band can describe."""

    def __init__(self, message, crossings=()):
        super().__init__(message)
        self.crossings = tuple(crossings)
