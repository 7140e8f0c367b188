"""Exception hierarchy shared by every nanoloop module."""


class NanoloopError(Exception):
    """Base class for all library errors."""


class DomainError(NanoloopError, ValueError):
    """An input lies outside the physical or mathematical domain of an operation."""


class RangeError(NanoloopError, ValueError):
    """An Airy argument is outside the supported evaluation range."""


class NaNError(NanoloopError, ValueError):
    """A non-finite value was passed where a finite one is required."""


class NotASolutionError(NanoloopError):
    """Coefficients were requested at a point where the determinant is not zero."""


class SingularityError(NanoloopError, ArithmeticError):
    """A closed-form expression is indeterminate at the requested point."""


class DegenerateSystemError(NanoloopError, ArithmeticError):
    """Every reduced linear subsystem is numerically singular."""


class PoleError(NanoloopError, ArithmeticError):
    """tan(ka) is undefined, so the delta model has no finite solution."""


class SolverError(NanoloopError):
    """Base class for root-finding failures.

    ``point`` optionally carries the parameter values at which the solve failed.
    """

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = dict(point) if point else {}

    def __str__(self):
        msg = super().__str__()
        if self.point:
            where = ", ".join(f"{k}={v!r}" for k, v in self.point.items())
            return f"{msg} [at {where}]"
        return msg


class NoBracketError(SolverError):
    """f(lo) and f(hi) have the same sign."""


class MaxIterError(SolverError):
    """Bisection did not converge within the iteration budget."""


class NoRootInWindowError(SolverError):
    """A scan found no root; ``extrema`` holds the (min, max) sampled values."""

    def __init__(self, message, extrema=None, point=None):
        super().__init__(message, point)
        self.extrema = extrema


class ConfigError(NanoloopError, ValueError):
    """A run configuration is malformed or inconsistent."""
