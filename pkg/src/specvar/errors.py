"""Exception types shared across the package."""


class SpecvarError(Exception):
    """Base class for all errors raised by this package."""


class InvalidMatrix(SpecvarError):
    """Input is not a finite square complex matrix of supported size."""


class SolverFailure(SpecvarError):
    """An iterative solver failed to converge."""

    def __init__(self, message, iterations=None):
        super().__init__(message)
        self.iterations = iterations


class InvalidSpectrum(SpecvarError):
    """A zero/eigenvalue multiset violates the closed-unit-disk constraint."""


class DegenerateInput(SpecvarError):
    """Geometric input is degenerate (boundary coincidence, zero denominator)."""


class OutOfDomain(SpecvarError):
    """A parameter lies outside the domain of the requested curve or map."""


class DomainOverflow(SpecvarError):
    """Series evaluation was requested too close to the unit nome."""


class PoleEvaluation(SpecvarError):
    """Evaluation point collides with (or is dangerously close to) a pole."""


class NotAContraction(SpecvarError):
    """Matrix operator norm exceeds 1 beyond tolerance."""


class SizeMismatch(SpecvarError):
    """Two spectra or matrices that must agree in size do not."""


class InvalidInputs(SpecvarError):
    """Bound inputs violate a precondition of the requested formula."""


class ConfigError(SpecvarError):
    """Experiment configuration is invalid (unknown suite, bad trial count)."""


class CurveResolutionFailure(SpecvarError):
    """Eigenvalue-curve refinement hit its subdivision cap."""

    def __init__(self, message, interval=None):
        super().__init__(message)
        self.interval = interval
