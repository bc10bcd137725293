"""Modified Bessel function of the second kind, order one."""

import math

from scipy import special

from ..errors import DomainError


def bessel_k1(x: float) -> float:
    """K₁(x) for x > 0; underflows to 0 for very large x."""
    if not x > 0 or not math.isfinite(x):
        raise DomainError(f"K1 needs a positive finite argument, got {x!r}")
    return float(special.k1(x))


def bessel_k1e(x: float) -> float:
    """Exponentially scaled K₁: e^x K₁(x)."""
    if not x > 0 or not math.isfinite(x):
        raise DomainError(f"K1 needs a positive finite argument, got {x!r}")
    return float(special.k1e(x))
