"""Exception hierarchy for spa-outage.

Library code raises these; only the command-line layer turns them into exit codes.
"""

from typing import Optional, Tuple


class SpaOutageError(Exception):
    """Base class for every error raised by the package."""


class DomainError(SpaOutageError, ValueError):
    """Argument outside the domain of a special function or distribution."""


class SpecialFunctionOverflow(SpaOutageError, OverflowError):
    """A special function result is not representable as a finite float."""


class StripViolation(SpaOutageError, ValueError):
    """CGF evaluated outside its convergence strip."""

    def __init__(self, t: float, lo: float, hi: float):
        self.t = t
        self.lo = lo
        self.hi = hi
        super().__init__(f"t={t!r} lies outside the convergence strip ({lo!r}, {hi!r})")


class EmptyStripError(SpaOutageError, ValueError):
    """Composed CGF strips do not overlap around zero."""


class QuadratureError(SpaOutageError, ArithmeticError):
    """Adaptive quadrature did not reach the requested tolerance."""

    def __init__(self, message: str, estimate: float, error: float):
        self.estimate = estimate
        self.error = error
        super().__init__(f"{message} (estimate={estimate!r}, error={error!r})")


class SaddleRangeError(SpaOutageError, ValueError):
    """x lies outside the range of K' over the strip."""

    def __init__(self, x: float, attainable: Tuple[float, float]):
        self.x = x
        self.attainable = attainable
        super().__init__(
            f"x={x!r} is outside the attainable range of K' "
            f"({attainable[0]!r}, {attainable[1]!r})"
        )


class SaddleConvergenceError(SpaOutageError):
    """Saddle point iteration hit its cap."""

    def __init__(self, message: str, last: Optional[float] = None):
        self.last = last
        super().__init__(message)


class ConditionViolated(SpaOutageError):
    """A sufficient condition for an NIG base does not hold."""

    def __init__(self, condition: str):
        self.condition = condition
        super().__init__(condition)


class DegenerateC(SpaOutageError):
    """c = K(t) - x t is numerically zero (x at the mean)."""


class NonFiniteError(SpaOutageError, ArithmeticError):
    """An intermediate quantity became inf or nan."""

    def __init__(self, quantity: str, value: float):
        self.quantity = quantity
        self.value = value
        super().__init__(f"{quantity} is not finite ({value!r})")


class InversionError(SpaOutageError):
    """Gil-Pelaez inversion did not converge within the panel budget."""

    def __init__(self, message: str, partial: float):
        self.partial = partial
        super().__init__(f"{message} (partial estimate {partial!r})")


class ConfigError(SpaOutageError, ValueError):
    """Invalid scenario file or command-line configuration."""
