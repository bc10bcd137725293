"""Saddle point CDF formula for an arbitrary base distribution, and the normal base."""

import math
from typing import NamedTuple

from ..errors import NonFiniteError
from ..saddle import SaddleInfo
from ..specfun import normal_cdf, normal_pdf
from .types import BaseEvaluation, BaseKind

_NEAR_MEAN = 1e-6


class WbbValue(NamedTuple):
    cdf: float
    ccdf: float
    u_hat: float
    near_mean: bool


def near_mean_threshold(k2: float) -> float:
    """|t̂| below which 1/ŝ - 1/û cancels catastrophically."""
    return _NEAR_MEAN * math.sqrt(1.0 / k2)


def near_mean_limit(k2: float, k3: float) -> float:
    """Limit of the normal-base formula as x approaches the mean."""
    return 0.5 + k3 / (6.0 * math.sqrt(2.0 * math.pi) * k2**1.5)


def _finite(name: str, value: float) -> float:
    if not math.isfinite(value):
        raise NonFiniteError(name, value)
    return value


def wbb_cdf(saddle: SaddleInfo, base: BaseEvaluation) -> WbbValue:
    """
    F̂(x) = G(ẑ) + g(ẑ)(1/ŝ - 1/û) with û = t̂ √(K''(t̂)/L''(ŝ)).

    The complement is formed from the base survival function so deep tails keep
    their relative accuracy. Near the mean the normal limit is returned.

    Raises:
        NonFiniteError: Any intermediate quantity is inf or nan
    """
    if abs(saddle.t_hat) < near_mean_threshold(saddle.k2):
        value = near_mean_limit(saddle.k2, saddle.k3)
        return WbbValue(value, 1.0 - value, 0.0, True)

    u_hat = _finite("u_hat", saddle.t_hat * math.sqrt(saddle.k2 / base.lpp))
    if base.s_hat == 0.0 or u_hat == 0.0:
        raise NonFiniteError("1/s_hat - 1/u_hat", math.inf)
    correction = _finite("correction", base.pdf * (1.0 / base.s_hat - 1.0 / u_hat))
    return WbbValue(
        _finite("cdf", base.cdf + correction),
        _finite("ccdf", base.sf - correction),
        u_hat,
        False,
    )


def normal_base(saddle: SaddleInfo) -> BaseEvaluation:
    """Standard normal base: ŝ = ẑ = sgn(t̂)√(-2c) and L'' = 1."""
    z = math.copysign(math.sqrt(-2.0 * saddle.c), saddle.t_hat)
    return BaseEvaluation(
        kind=BaseKind.NORMAL,
        z_hat=z,
        s_hat=z,
        lpp=1.0,
        cdf=normal_cdf(z),
        sf=normal_cdf(-z),
        pdf=normal_pdf(z),
    )
