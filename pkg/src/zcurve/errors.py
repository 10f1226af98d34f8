"""Exception and warning types shared across the package."""


class DomainError(ValueError):
    """Argument outside the domain where an evaluation is defined."""


class ConstraintError(ValueError):
    """Parameters violate a structural constraint (ordering, ranges)."""


class ConvergenceError(RuntimeError):
    """An iteration hit its cap before reaching the requested accuracy."""


class GridInsufficiencyError(RuntimeError):
    """Zero counts on the scan grid and the half-step grid disagree."""


class QuadratureError(RuntimeError):
    """Adaptive integration exhausted its subdivision budget."""

    def __init__(self, message, deepest=None):
        super().__init__(message)
        self.deepest = deepest


class IntervalOverlapError(ConstraintError):
    """Intervals that should be disjoint intersect."""


class SuspectPairWarning(UserWarning):
    """Two located zeros are close enough that an extremum may be missing."""


class InterlacingWarning(UserWarning):
    """A zero gap holds no stationary point or more than one."""


class SignChangeWarning(UserWarning):
    """Z' changes sign inside a piece that was assumed one-signed."""
