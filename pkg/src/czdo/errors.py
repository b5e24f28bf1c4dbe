"""Exception types shared across the package."""


class CzdoError(Exception):
    """Base class for all package-specific errors."""


class MixedBoundError(CzdoError):
    """An interval has exactly one infinite endpoint; only fully finite or
    whole-line dimensions are supported."""


class EmptySetError(CzdoError):
    """A set operation required a nonempty set but the constraints are
    infeasible."""


class IterationLimitError(CzdoError):
    """The LP solver stalled or lost feasibility; the result must be treated
    as a failure, never as a set answer."""


class NotExistentError(CzdoError):
    """No bounded disturbance observer exists for the given plant."""


class DeltaTooSmallError(CzdoError):
    """The filtering interval is below the observability-index requirement."""


class InternalDisagreementError(CzdoError):
    """Two equivalent numerical tests disagreed beyond tolerance; the system
    is numerically borderline and no verdict is returned."""


class EmptyPosteriorError(CzdoError):
    """A measurement is inconsistent with the propagated set beyond the
    feasibility tolerance (model mismatch or numerical failure)."""

    def __init__(self, step, message=""):
        self.step = step
        super().__init__(message or f"empty posterior at step {step}")


class RejectionStallError(CzdoError):
    """Rejection sampling from a disturbance-step set accepted fewer than 1%
    of proposals; the set is too thin to sample this way."""


class InfeasibleTrajectoryError(CzdoError):
    """Measurements handed to the trajectory oracle are inconsistent with the
    model (usually a harness bug)."""


class ConfigError(CzdoError):
    """A scenario config file failed to parse; message carries the field
    path."""
