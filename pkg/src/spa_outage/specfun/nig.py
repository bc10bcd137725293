"""Normal-inverse Gaussian law: parameters, density and distribution function."""

import math
from dataclasses import dataclass

from scipy import integrate, special

from ..errors import DomainError

# discarded tail mass on each side of the CDF quadrature
_TAIL_MASS = 1e-18


@dataclass(frozen=True)
class NigParams:
    """
    NIG(α, β, μ, δ) with tail heaviness α, asymmetry β, location μ and scale δ.

    Raises:
        DomainError: |β| >= α or δ <= 0
    """

    alpha: float
    beta: float
    mu: float = 0.0
    delta: float = 1.0

    def __post_init__(self) -> None:
        values = (self.alpha, self.beta, self.mu, self.delta)
        if not all(math.isfinite(v) for v in values):
            raise DomainError(f"NIG parameters must be finite, got {values!r}")
        if self.delta <= 0:
            raise DomainError(f"NIG scale δ must be positive, got {self.delta!r}")
        if abs(self.beta) >= self.alpha:
            raise DomainError(
                f"NIG needs |β| < α, got α={self.alpha!r}, β={self.beta!r}"
            )

    @property
    def gamma(self) -> float:
        return math.sqrt(self.alpha * self.alpha - self.beta * self.beta)

    @property
    def mean(self) -> float:
        return self.mu + self.delta * self.beta / self.gamma

    @property
    def variance(self) -> float:
        return self.delta * self.alpha**2 / self.gamma**3

    @property
    def skewness(self) -> float:
        return 3.0 * self.beta / (self.alpha * math.sqrt(self.delta * self.gamma))

    @property
    def excess_kurtosis(self) -> float:
        return 3.0 * (1.0 + 4.0 * self.beta**2 / self.alpha**2) / (self.delta * self.gamma)

    def cgf(self, s: float) -> float:
        """K(s) = μs + δ(γ - √(α² - (β+s)²)), valid for -α-β < s < α-β."""
        w = self.beta + s
        return self.mu * s + self.delta * (self.gamma - math.sqrt(self.alpha**2 - w * w))


def nig_logpdf(z: float, p: NigParams) -> float:
    """Log density, computed with the scaled Bessel function so large αδ stays finite."""
    y = (z - p.mu) / p.delta
    q = math.hypot(1.0, y)
    arg = p.alpha * p.delta * q
    return (
        math.log(p.alpha / math.pi)
        + p.delta * p.gamma
        + p.beta * (z - p.mu)
        - arg
        + math.log(special.k1e(arg))
        - math.log(q)
    )


def nig_pdf(z: float, p: NigParams) -> float:
    """
    NIG density (α/π) exp(δγ + β(z-μ)) K₁(αδq) / q with q = √(1 + ((z-μ)/δ)²).
    """
    return math.exp(nig_logpdf(z, p))


def _tail_distance(p: NigParams, side: float) -> float:
    """Distance from the mean beyond which the mass on one side is below _TAIL_MASS."""
    d = 10.0 * math.sqrt(p.variance) + p.delta
    for _ in range(200):
        z = p.mean + side * d
        y = abs(z - p.mu)
        # local exponential decay rate of the density towards this tail
        rate = p.alpha * y / math.hypot(p.delta, y) - side * p.beta
        if rate > 0 and math.exp(nig_logpdf(z, p)) / rate < _TAIL_MASS:
            return d
        d *= 1.5
    return d


def _integrate(p: NigParams, lo: float, hi: float) -> float:
    value, _ = integrate.quad(
        nig_pdf, lo, hi, args=(p,), epsabs=1e-18, epsrel=1e-12, limit=400
    )
    return value


def nig_cdf(z: float, p: NigParams) -> float:
    """
    NIG distribution function by adaptive quadrature of the density.

    The integral runs from the nearer truncated tail, split at the mean, so the
    result is accurate in both tails.
    """
    centre = p.mean
    lo = centre - _tail_distance(p, -1.0)
    hi = centre + _tail_distance(p, 1.0)
    if z <= lo:
        return 0.0
    if z >= hi:
        return 1.0
    if z <= centre:
        value = _integrate(p, lo, z)
    else:
        value = 1.0 - _integrate(p, z, hi)
    return min(1.0, max(0.0, value))
