"""Closed-form and approximate saddle points for the aggregation and COMP models.

All values are in the plus convention used by the CGF models.
"""

import math

from ..cgf import GainLaw


def analytic_saddle_poisson_nakagami(
    lam1: float, lam2: float, theta: float, gain: GainLaw
) -> float:
    """
    Exact saddle at x = 0 of Ω for Poisson(λ₁) signal and Poisson(λ₂) interference
    summands with Gamma(m, r) gains: t̂ = r(ζ - 1)/(1 + θζ), ζ = (θλ₂/λ₁)^(-1/(m+1)).

    With λ₂ = 0 the value is the ζ -> ∞ limit r/θ.
    """
    if not lam1 > 0:
        raise ValueError(f"lam1 must be positive, got {lam1!r}")
    if lam2 < 0:
        raise ValueError(f"lam2 must be nonnegative, got {lam2!r}")
    r = gain.r_f
    if lam2 == 0:
        return r / theta
    zeta = (theta * lam2 / lam1) ** (-1.0 / (gain.m_f + 1.0))
    return r * (zeta - 1.0) / (1.0 + theta * zeta)


def binomial_saddle_residual(t: float, L: int, prob: float, theta: float, gain: GainLaw) -> float:
    """
    Polynomial whose root is the x = 0 saddle of the binomial-split model:
    p²(1 - θt/r)^(m+1) + pq(1 - θ - 2θt/r) - θq²(1 + t/r)^(m+1).

    L cancels from the saddle equation and is accepted for a uniform signature.
    """
    p, q = prob, 1.0 - prob
    m, r = gain.m_f, gain.r_f
    return (
        p * p * (1.0 - theta * t / r) ** (m + 1.0)
        + p * q * (1.0 - theta - 2.0 * theta * t / r)
        - theta * q * q * (1.0 + t / r) ** (m + 1.0)
    )


def rayleigh_binomial_saddle(prob: float, theta: float, gain: GainLaw) -> float:
    """
    Root of binomial_saddle_residual for m = 1 in closed form.

    The residual is the quadratic θ(θp² - q²)τ² - 2θ(1 - pq)τ + (p - θq) in τ = t/r;
    the root is taken in the form 2C/(-B + √D), which stays finite through the
    linear case θp² = q².
    """
    p, q, r = prob, 1.0 - prob, gain.r_f
    root = math.sqrt(p * q * theta * (theta + q) * (1.0 + p * theta))
    return r * (p - theta * q) / (theta * (1.0 - p * q) + root)


def approx_saddle_binomial(L: int, prob: float, theta: float, gain: GainLaw) -> float:
    """
    Initialization t̂ ≈ r(p - θq)/(1 - q[1 - θ² - m(θ² + 1)(1 - q)]); tends to r as q -> 0
    and to -r/θ as q -> 1.
    """
    p, q = prob, 1.0 - prob
    m, r = gain.m_f, gain.r_f
    return r * (p - theta * q) / (1.0 - q * (1.0 - theta**2 - m * (theta**2 + 1.0) * (1.0 - q)))


def approx_saddle_comp(
    regime: str, a: float, R: float, alpha_pl: float, P: float, theta: float, gain: GainLaw
) -> float:
    """
    Two-moment saddle approximation for the COMP model at x = 0.

    Args:
        regime: "small_theta" (C a^α/P), "large_theta" (-C R^α/(θP)) or "general",
            C = 2(α-1)/(α-2) · μ₁/μ₂
    """
    alpha = alpha_pl
    scale = 2.0 * (alpha - 1.0) / (alpha - 2.0) * gain.moment(1) / gain.moment(2)
    if regime == "small_theta":
        return scale * a**alpha / P
    if regime == "large_theta":
        return -scale * R**alpha / (theta * P)
    if regime == "general":
        u = R / a
        ratio = (1.0 - (1.0 + theta) * u ** (2.0 - alpha)) / (
            1.0 - (1.0 - theta**2) * u ** (2.0 - 2.0 * alpha)
        )
        return scale * a**alpha / P * ratio
    raise ValueError(f"unknown regime {regime!r}")
