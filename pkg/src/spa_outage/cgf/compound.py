"""Compound aggregation (Poisson and binomial counts) and the Ω = θY - X composition."""

import cmath
import math
from dataclasses import dataclass
from typing import List

from .base import CgfModel


def _exp_derivatives(k: List[float]) -> List[float]:
    """
    Derivatives 1..4 of exp(K) divided by exp(K), from K', K'', K''', K''''.

    These are the complete Bell polynomials in the derivatives of K.
    """
    k1, k2, k3, k4 = k
    return [
        k1,
        k2 + k1 * k1,
        k3 + 3.0 * k1 * k2 + k1**3,
        k4 + 4.0 * k1 * k3 + 3.0 * k2 * k2 + 6.0 * k1 * k1 * k2 + k1**4,
    ]


def _inner_derivatives(inner: CgfModel, t: float) -> List[float]:
    return [inner.deriv(n, t) for n in (1, 2, 3, 4)]


class CompoundPoissonCgf(CgfModel):
    """Sum of a Poisson(λ) number of iid summands: K = λ(exp(K_inner) - 1)."""

    def __init__(self, lambda_pts: float, inner: CgfModel):
        if not lambda_pts > 0:
            raise ValueError(f"Poisson mean must be positive, got {lambda_pts!r}")
        super().__init__(inner.strip)
        self.lambda_pts = lambda_pts
        self.inner = inner

    def _eval(self, t: float) -> float:
        return self.lambda_pts * math.expm1(self.inner.eval(t))

    def _deriv(self, n: int, t: float) -> float:
        scale = self.lambda_pts * math.exp(self.inner.eval(t))
        return scale * _exp_derivatives(_inner_derivatives(self.inner, t))[n - 1]

    def char_exponent(self, u: float) -> complex:
        return self.lambda_pts * (cmath.exp(self.inner.char_exponent(u)) - 1.0)


class CompoundBinomialCgf(CgfModel):
    """Sum of a Binomial(L, p) number of iid summands: K = L ln(1 - p + p exp(K_inner))."""

    def __init__(self, L: int, prob: float, inner: CgfModel):
        if L < 1:
            raise ValueError(f"L must be at least 1, got {L!r}")
        if not 0.0 <= prob <= 1.0:
            raise ValueError(f"prob must lie in [0, 1], got {prob!r}")
        super().__init__(inner.strip)
        self.L = L
        self.prob = prob
        self.inner = inner

    def _eval(self, t: float) -> float:
        return self.L * math.log1p(self.prob * math.expm1(self.inner.eval(t)))

    def _deriv(self, n: int, t: float) -> float:
        p = self.prob
        if p == 0.0:
            return 0.0
        e = math.exp(self.inner.eval(t))
        m0 = 1.0 - p + p * e
        # ratios M^(k)/M of M(t) = 1 - p + p exp(K_inner)
        bell = _exp_derivatives(_inner_derivatives(self.inner, t))
        r1, r2, r3, r4 = (p * e * b / m0 for b in bell)
        h = [
            r1,
            r2 - r1 * r1,
            r3 - 3.0 * r2 * r1 + 2.0 * r1**3,
            r4 - 4.0 * r3 * r1 - 3.0 * r2 * r2 + 12.0 * r2 * r1 * r1 - 6.0 * r1**4,
        ]
        return self.L * h[n - 1]

    def char_exponent(self, u: float) -> complex:
        p = self.prob
        return self.L * cmath.log(1.0 - p + p * cmath.exp(self.inner.char_exponent(u)))


@dataclass(frozen=True)
class OmegaSpec:
    """Signal X, interference Y and threshold θ of Ω = θY - X."""

    signal: CgfModel
    interference: CgfModel
    theta: float

    def __post_init__(self) -> None:
        if not self.theta > 0:
            raise ValueError(f"theta must be positive, got {self.theta!r}")


class OmegaCgf(CgfModel):
    """K_Ω(t) = K_Y(θt) + K_X(-t) for independent X and Y."""

    def __init__(self, spec: OmegaSpec):
        strip = spec.interference.strip.scaled(spec.theta).intersect(spec.signal.strip.scaled(-1.0))
        super().__init__(strip)
        self.spec = spec

    def _eval(self, t: float) -> float:
        s = self.spec
        return s.interference.eval(s.theta * t) + s.signal.eval(-t)

    def _deriv(self, n: int, t: float) -> float:
        s = self.spec
        interference = s.theta**n * s.interference.deriv(n, s.theta * t)
        return interference + (-1.0) ** n * s.signal.deriv(n, -t)

    def cumulant(self, n: int) -> float:
        s = self.spec
        return s.theta**n * s.interference.cumulant(n) + (-1.0) ** n * s.signal.cumulant(n)

    def char_exponent(self, u: float) -> complex:
        s = self.spec
        return s.interference.char_exponent(s.theta * u) + s.signal.char_exponent(-u)


def compound_poisson_cgf(lambda_pts: float, inner: CgfModel) -> CgfModel:
    return CompoundPoissonCgf(lambda_pts, inner)


def compound_binomial_cgf(L: int, prob: float, inner: CgfModel) -> CgfModel:
    return CompoundBinomialCgf(L, prob, inner)


def omega_cgf(spec: OmegaSpec) -> CgfModel:
    return OmegaCgf(spec)
