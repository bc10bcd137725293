"""Channel power gain laws: Gamma (Nakagami-m fading) and deterministic (no fading)."""

import math
from dataclasses import dataclass

import numpy as np

from .base import CgfModel, ConvergenceStrip


@dataclass(frozen=True)
class GainLaw:
    """Gamma(m_f, r_f) power gain; exponential (Rayleigh) when m_f = 1."""

    m_f: float = 1.0
    r_f: float = 1.0

    def __post_init__(self) -> None:
        if not (self.m_f > 0 and self.r_f > 0):
            raise ValueError(
                f"gain shape and rate must be positive, got {self.m_f!r}, {self.r_f!r}"
            )

    @property
    def tau_max(self) -> float:
        """Upper edge of the MGF's domain."""
        return self.r_f

    def moment(self, n: int) -> float:
        """E[G^n] = m(m+1)...(m+n-1) / r^n."""
        rising = 1.0
        for k in range(n):
            rising *= self.m_f + k
        return rising / self.r_f**n

    def cumulant(self, n: int) -> float:
        return self.m_f * math.factorial(n - 1) / self.r_f**n

    @property
    def skewness_squared(self) -> float:
        return 4.0 / self.m_f

    @property
    def excess_kurtosis(self) -> float:
        return 6.0 / self.m_f

    def mgf_minus_one(self, tau: float) -> float:
        """E[e^(tau G)] - 1 without cancellation near tau = 0."""
        return math.expm1(-self.m_f * math.log1p(-tau / self.r_f))

    def mgf_deriv(self, n: int, tau: float) -> float:
        """n-th derivative of (1 - tau/r)^(-m)."""
        rising = 1.0
        for k in range(n):
            rising *= self.m_f + k
        return rising / self.r_f**n * (1.0 - tau / self.r_f) ** (-self.m_f - n)

    def mgf_complex(self, tau: complex) -> complex:
        return np.exp(-self.m_f * np.log(1.0 - tau / self.r_f))


@dataclass(frozen=True)
class DeterministicGain:
    """Unit gain: the no-fading channel."""

    @property
    def tau_max(self) -> float:
        return math.inf

    def moment(self, n: int) -> float:
        return 1.0

    def mgf_minus_one(self, tau: float) -> float:
        return math.expm1(tau)

    def mgf_deriv(self, n: int, tau: float) -> float:
        return math.exp(tau)

    def mgf_complex(self, tau: complex) -> complex:
        return np.exp(tau)


class GammaGainCgf(CgfModel):
    """K_G(t) = -m ln(1 - t/r) on (-inf, r)."""

    def __init__(self, gain: GainLaw):
        super().__init__(ConvergenceStrip(-math.inf, gain.r_f))
        self.gain = gain

    def _eval(self, t: float) -> float:
        return -self.gain.m_f * math.log1p(-t / self.gain.r_f)

    def _deriv(self, n: int, t: float) -> float:
        g = self.gain
        return g.m_f * math.factorial(n - 1) / (g.r_f - t) ** n

    def cumulant(self, n: int) -> float:
        return self.gain.cumulant(n)

    def char_exponent(self, u: float) -> complex:
        return complex(-self.gain.m_f * np.log(complex(1.0, -u / self.gain.r_f)))


def gamma_gain_cgf(gain: GainLaw) -> CgfModel:
    return GammaGainCgf(gain)
