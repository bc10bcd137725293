"""NIG base distributions matched to the target's skewness and kurtosis at the saddle.

The asymmetric base has μ = 0 and δ = 1 and needs c < 0 with
0 < ρ - 5η/3 <= 6/|c|. The symmetric base (β = μ = 0, α = δ) comes from a
cubic in v that always has one negative root when c < 0; if that root is not
below -1 the fixed substitute SUBSTITUTE_ROOT is used.
"""

import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from ..errors import ConditionViolated, DegenerateC, DomainError
from ..saddle import SaddleInfo
from ..specfun import NigParams, nig_cdf, nig_pdf
from .types import BaseEvaluation, BaseKind

logger = logging.getLogger(__name__)

ETA_MIN = 1e-12
SUBSTITUTE_ROOT = -1.000001


def degenerate_c_threshold(k: float) -> float:
    return 1e-14 * max(1.0, abs(k))


def nig_condition(saddle: SaddleInfo) -> Optional[str]:
    """
    Check the sufficient condition for the asymmetric NIG base.

    Returns:
        None when it holds, otherwise a description of the failed inequality
    """
    c, eta, rho = saddle.c, saddle.eta, saddle.rho
    if not c < -degenerate_c_threshold(saddle.k):
        return f"c = {c!r} is not negative"
    d = rho - 5.0 * eta / 3.0
    if not d > 0.0:
        return f"rho - 5 eta/3 = {d!r} is not positive"
    if d > 6.0 / abs(c):
        return f"rho - 5 eta/3 = {d!r} exceeds 6/|c| = {6.0 / abs(c)!r}"
    return None


def cubic_real_roots(a3: float, a2: float, a1: float, a0: float) -> List[float]:
    """
    Real roots of a3 v³ + a2 v² + a1 v + a0 in ascending order.

    Trigonometric form for three real roots, Cardano otherwise, then one Newton
    step on each root.
    """
    if a3 == 0.0:
        raise ValueError("leading coefficient must be nonzero")
    b, c, d = a2 / a3, a1 / a3, a0 / a3
    shift = b / 3.0
    p = c - b * b / 3.0
    q = 2.0 * b**3 / 27.0 - b * c / 3.0 + d
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3

    if p == 0.0 and q == 0.0:
        depressed = [0.0]
    elif disc < 0.0:
        radius = 2.0 * math.sqrt(-p / 3.0)
        arg = 3.0 * q / (2.0 * p) * math.sqrt(-3.0 / p)
        phi = math.acos(min(1.0, max(-1.0, arg))) / 3.0
        depressed = [radius * math.cos(phi - 2.0 * math.pi * k / 3.0) for k in range(3)]
    elif disc == 0.0:
        depressed = [3.0 * q / p, -3.0 * q / (2.0 * p)]
    else:
        root = math.sqrt(disc)
        depressed = [float(np.cbrt(-q / 2.0 + root) + np.cbrt(-q / 2.0 - root))]

    def polish(v: float) -> float:
        f = ((a3 * v + a2) * v + a1) * v + a0
        df = (3.0 * a3 * v + 2.0 * a2) * v + a1
        return v - f / df if df != 0.0 else v

    return sorted(polish(y - shift) for y in depressed)


def _base_values(params: NigParams, z: float) -> Tuple[float, float, float]:
    mirrored = NigParams(params.alpha, -params.beta, -params.mu, params.delta)
    return nig_cdf(z, params), nig_cdf(-z, mirrored), nig_pdf(z, params)


def nig_spa_params(saddle: SaddleInfo) -> BaseEvaluation:
    """
    Asymmetric NIG(α, β, 0, 1) base.

    ẑ = sgn(K''')(3ρ/η - 5)^(-1/2), α = 9[(3ρ - 5η)(3ρ - 4η)]^(-1/2) and β is the
    root of (e - βẑ)² = α² - β², e = c + α√(1 + ẑ²), with e - βẑ >= 0 and ŝ =
    -β + αẑ/√(1 + ẑ²) on the side of t̂. L''(ŝ) = (1 + ẑ²)^(3/2)/α and L'''(ŝ)
    has the sign of ẑ. For η <= ETA_MIN the limit ẑ = 0, α = 3/ρ is used.

    Raises:
        DegenerateC: |c| is numerically zero
        ConditionViolated: The sufficient condition fails or no admissible β exists
    """
    c, eta, rho = saddle.c, saddle.eta, saddle.rho
    if abs(c) < degenerate_c_threshold(saddle.k):
        raise DegenerateC(f"c = {c!r} is numerically zero")
    failed = nig_condition(saddle)
    if failed is not None:
        raise ConditionViolated(failed)

    if eta > ETA_MIN and saddle.k3 != 0.0:
        z = math.copysign((3.0 * rho / eta - 5.0) ** -0.5, saddle.k3)
    else:
        z = 0.0
    alpha = 9.0 / math.sqrt((3.0 * rho - 5.0 * eta) * (3.0 * rho - 4.0 * eta))
    hyp = math.sqrt(1.0 + z * z)
    e = c + alpha * hyp
    disc = alpha * alpha * (1.0 + z * z) - e * e
    if disc < 0.0:
        if disc < -1e-12 * alpha * alpha * (1.0 + z * z):
            raise ConditionViolated(f"asymmetry discriminant {disc!r} is negative")
        disc = 0.0

    # (β, ŝ) pairs giving a real law whose saddle lies on the same side as t̂
    admissible = []
    for sign in (1.0, -1.0):
        beta = (e * z + sign * math.sqrt(disc)) / (1.0 + z * z)
        s = -beta + alpha * z / hyp
        if e - beta * z >= 0.0 and abs(beta) < alpha and s * saddle.t_hat > 0.0:
            admissible.append((beta, s))
    if not admissible:
        raise ConditionViolated("no asymmetry root gives a real NIG law with a matching saddle")
    beta, s = admissible[0]

    try:
        params = NigParams(alpha, beta)
    except DomainError as exc:
        raise ConditionViolated(str(exc)) from exc

    cdf, sf, pdf = _base_values(params, z)
    logger.debug(f"Asymmetric NIG base alpha={alpha} beta={beta} z={z} s={s}")
    return BaseEvaluation(
        kind=BaseKind.ASYMMETRIC_NIG,
        z_hat=z,
        s_hat=s,
        lpp=hyp**3 / alpha,
        cdf=cdf,
        sf=sf,
        pdf=pdf,
        params=params,
        legendre_residual=params.cgf(s) - z * s - c,
    )


def sym_nig_spa_params(saddle: SaddleInfo) -> BaseEvaluation:
    """
    Symmetric NIG(α, 0, 0, δ) base with α = δ = √(c/(1 + v)) and ẑ = sgn(t̂)√(c(v - 1)),
    v the negative root of 5v³ - 5v² + (ρc/3 - 4)v + 4 = 0.

    Raises:
        DegenerateC: |c| is numerically zero
        ConditionViolated: The base parameters are not a valid NIG law
    """
    c = saddle.c
    if abs(c) < degenerate_c_threshold(saddle.k):
        raise DegenerateC(f"c = {c!r} is numerically zero")

    root = cubic_real_roots(5.0, -5.0, saddle.rho * c / 3.0 - 4.0, 4.0)[0]
    v = root
    substituted = False
    if not v < -1.0:
        logger.debug(f"Cubic root {root} is not below -1, using {SUBSTITUTE_ROOT}")
        v = SUBSTITUTE_ROOT
        substituted = True

    alpha = delta = math.sqrt(c / (1.0 + v))
    z = math.copysign(math.sqrt(c * (v - 1.0)), saddle.t_hat)
    s = alpha * z / math.sqrt(delta * delta + z * z)
    try:
        params = NigParams(alpha, 0.0, 0.0, delta)
    except DomainError as exc:
        raise ConditionViolated(str(exc)) from exc

    cdf, sf, pdf = _base_values(params, z)
    return BaseEvaluation(
        kind=BaseKind.SYMMETRIC_NIG,
        z_hat=z,
        s_hat=s,
        lpp=(delta * delta + z * z) ** 1.5 / (alpha * delta * delta),
        cdf=cdf,
        sf=sf,
        pdf=pdf,
        params=params,
        cubic_root=root,
        substituted=substituted,
        legendre_residual=params.cgf(s) - z * s - c,
    )
