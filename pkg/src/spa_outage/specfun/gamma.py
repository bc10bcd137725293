"""Incomplete gamma functions, including negative orders."""

import math

from scipy import special

from ..errors import DomainError, SpecialFunctionOverflow


def _finite(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise SpecialFunctionOverflow(f"{name} is not finite ({value!r})")
    return value


def _check_args(a: float, z: float) -> None:
    if not (math.isfinite(a) and math.isfinite(z)):
        raise DomainError(f"non-finite argument a={a!r}, z={z!r}")
    if z < 0:
        raise DomainError(f"z must be nonnegative, got {z!r}")


def upper_inc_gamma(a: float, z: float) -> float:
    """
    Upper incomplete gamma function Γ(a, z) = ∫_z^∞ x^(a-1) e^(-x) dx.

    Positive orders go through scipy's regularized function. Non-positive orders
    are reduced with Γ(a, z) = (Γ(a+1, z) - z^a e^(-z)) / a until the order is
    positive, or zero where Γ(0, z) = E1(z).

    Args:
        a: Order, any finite real
        z: Lower integration limit, z > 0 (z = 0 allowed for a > 0)

    Returns:
        Γ(a, z)

    Raises:
        DomainError: z < 0, or z = 0 with a <= 0 (divergent integral)
        SpecialFunctionOverflow: Result not representable
    """
    _check_args(a, z)
    if z == 0.0:
        if a <= 0:
            raise DomainError(f"Γ({a!r}, 0) diverges for non-positive order")
        return _finite(special.gamma(a), "Γ(a)")
    if a > 0:
        return _finite(special.gammaincc(a, z) * special.gamma(a), "Γ(a, z)")

    steps = int(math.ceil(-a)) if a != math.floor(a) else int(-a)
    order = a + steps
    if order == 0.0:
        value = float(special.exp1(z))
    else:
        value = float(special.gammaincc(order, z) * special.gamma(order))
    # walk the recurrence down from the positive (or zero) order
    for _ in range(steps):
        order -= 1.0
        value = (value - math.exp(order * math.log(z) - z)) / order
    return _finite(value, "Γ(a, z)")


def lower_inc_gamma(a: float, z: float) -> float:
    """
    Lower incomplete gamma function γ(a, z) = ∫_0^z x^(a-1) e^(-x) dx.

    Raises:
        DomainError: a <= 0 or z < 0
    """
    _check_args(a, z)
    if a <= 0:
        raise DomainError(f"lower incomplete gamma needs a > 0, got {a!r}")
    if z == 0.0:
        return 0.0
    return _finite(special.gammainc(a, z) * special.gamma(a), "γ(a, z)")


def generalized_inc_gamma(a: float, z0: float, z1: float) -> float:
    """Γ(a, z0, z1) = Γ(a, z0) - Γ(a, z1)."""
    if z0 <= 0 or z1 <= 0:
        raise DomainError(f"limits must be positive, got z0={z0!r}, z1={z1!r}")
    if z0 == z1:
        return 0.0
    return upper_inc_gamma(a, z0) - upper_inc_gamma(a, z1)
