"""CGF abstraction: convergence strips, the model interface and quadrature helpers.

All models use the plus convention K(t) = ln E[exp(tV)].
"""

import cmath
import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate

from ..errors import EmptyStripError, QuadratureError, StripViolation
from ..specfun import NigParams

logger = logging.getLogger(__name__)

STRIP_MARGIN = 1e-9


@dataclass(frozen=True)
class ConvergenceStrip:
    """Open interval (lo, hi) of real t where K is finite; always contains 0."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not self.lo < 0.0 < self.hi:
            raise EmptyStripError(f"strip ({self.lo!r}, {self.hi!r}) does not contain 0")

    def shrunk(self, margin: float = STRIP_MARGIN) -> "ConvergenceStrip":
        """Strip pulled towards 0 by a relative margin at each finite edge."""
        return ConvergenceStrip(self.lo * (1.0 - margin), self.hi * (1.0 - margin))

    def contains(self, t: float) -> bool:
        return self.lo < t < self.hi

    def scaled(self, factor: float) -> "ConvergenceStrip":
        """Strip of t -> K(factor * t)."""
        if factor > 0:
            return ConvergenceStrip(self.lo / factor, self.hi / factor)
        return ConvergenceStrip(self.hi / factor, self.lo / factor)

    def intersect(self, other: "ConvergenceStrip") -> "ConvergenceStrip":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if not lo < 0.0 < hi:
            raise EmptyStripError(f"strips {self} and {other} do not overlap around 0")
        return ConvergenceStrip(lo, hi)


@dataclass(frozen=True)
class QuadratureSettings:
    """Tolerances for every adaptive integral a CGF evaluates (limit = max subintervals)."""

    epsabs: float = 1e-12
    epsrel: float = 1e-10
    limit: int = 200

    @classmethod
    def from_settings(cls, settings) -> "QuadratureSettings":
        return cls(settings.quad_epsabs, settings.quad_epsrel, settings.quad_limit)


def quad_real(
    func: Callable[[float], float], lo: float, hi: float, quad: QuadratureSettings
) -> float:
    """
    scipy quad with failure promoted to QuadratureError.

    QUADPACK flags (ier > 0) are tolerated when the reported error is still within
    a thousand times the request; round-off warnings on tiny integrals are common.

    Raises:
        QuadratureError: Integral did not converge
    """
    out = integrate.quad(
        func, lo, hi, epsabs=quad.epsabs, epsrel=quad.epsrel, limit=quad.limit, full_output=1
    )
    value, error = out[0], out[1]
    if len(out) > 3:
        budget = 1e3 * max(quad.epsabs, quad.epsrel * abs(value))
        if not math.isfinite(value) or error > budget:
            raise QuadratureError(f"quadrature on [{lo!r}, {hi!r}] failed: {out[3]}", value, error)
        logger.debug(f"Quadrature flag on [{lo}, {hi}] accepted: error={error}")
    return value


def quad_complex(
    func: Callable[[float], complex], lo: float, hi: float, quad: QuadratureSettings
) -> complex:
    """Integrate a complex-valued integrand as one two-component vector."""

    def pair(x: float) -> np.ndarray:
        v = func(x)
        return np.array([v.real, v.imag])

    value, error = integrate.quad_vec(
        pair, lo, hi, epsabs=quad.epsabs, epsrel=quad.epsrel, limit=quad.limit
    )
    if not np.all(np.isfinite(value)):
        raise QuadratureError(f"complex quadrature on [{lo!r}, {hi!r}] failed", float("nan"), error)
    return complex(value[0], value[1])


class CgfModel(ABC):
    """
    A cumulant generating function with derivatives 1-4 and its values on the
    imaginary axis.

    Subclasses implement _eval, _deriv and char_exponent; evaluation outside the
    strip (shrunk by STRIP_MARGIN) raises StripViolation.
    """

    def __init__(self, strip: ConvergenceStrip):
        self.strip = strip
        self._usable = strip.shrunk()

    def _check(self, t: float) -> None:
        if not self._usable.contains(t):
            raise StripViolation(t, self._usable.lo, self._usable.hi)

    @property
    def usable_strip(self) -> ConvergenceStrip:
        return self._usable

    def eval(self, t: float) -> float:
        self._check(t)
        if t == 0.0:
            return 0.0
        return self._eval(t)

    def deriv(self, n: int, t: float) -> float:
        """n-th derivative of K at t, n in 0..4."""
        if n == 0:
            return self.eval(t)
        if n not in (1, 2, 3, 4):
            raise ValueError(f"derivative order must be 0..4, got {n!r}")
        self._check(t)
        return self._deriv(n, t)

    def cumulant(self, n: int) -> float:
        return self.deriv(n, 0.0)

    @abstractmethod
    def _eval(self, t: float) -> float:
        ...

    @abstractmethod
    def _deriv(self, n: int, t: float) -> float:
        ...

    @abstractmethod
    def char_exponent(self, u: float) -> complex:
        """K(ju)."""


class GaussianCgf(CgfModel):
    """K(t) = m t + v t² / 2."""

    def __init__(self, mean: float, variance: float):
        if not variance > 0:
            raise ValueError(f"variance must be positive, got {variance!r}")
        super().__init__(ConvergenceStrip(-math.inf, math.inf))
        self.mean = mean
        self.variance = variance

    def _eval(self, t: float) -> float:
        return self.mean * t + 0.5 * self.variance * t * t

    def _deriv(self, n: int, t: float) -> float:
        if n == 1:
            return self.mean + self.variance * t
        if n == 2:
            return self.variance
        return 0.0

    def char_exponent(self, u: float) -> complex:
        return complex(-0.5 * self.variance * u * u, self.mean * u)


class NigCgf(CgfModel):
    """CGF of an NIG law: μs + δ(γ - √(α² - (β+s)²))."""

    def __init__(self, params: NigParams):
        p = params
        super().__init__(ConvergenceStrip(-p.alpha - p.beta, p.alpha - p.beta))
        self.params = p

    def _eval(self, t: float) -> float:
        return self.params.cgf(t)

    def _deriv(self, n: int, t: float) -> float:
        p = self.params
        w = p.beta + t
        r = p.alpha**2 - w * w
        if n == 1:
            return p.mu + p.delta * w / math.sqrt(r)
        if n == 2:
            return p.delta * p.alpha**2 / r**1.5
        if n == 3:
            return 3.0 * p.delta * p.alpha**2 * w / r**2.5
        return 3.0 * p.delta * p.alpha**2 * (p.alpha**2 + 4.0 * w * w) / r**3.5

    def char_exponent(self, u: float) -> complex:
        p = self.params
        w = complex(p.beta, u)
        return complex(0.0, p.mu * u) + p.delta * (p.gamma - cmath.sqrt(p.alpha**2 - w * w))


class AffineCgf(CgfModel):
    """CGF of scale * V + shift for a model of V (scale != 0)."""

    def __init__(self, inner: CgfModel, scale: float, shift: float = 0.0):
        if scale == 0 or not math.isfinite(scale):
            raise ValueError(f"scale must be finite and nonzero, got {scale!r}")
        super().__init__(inner.strip.scaled(scale))
        self.inner = inner
        self.scale = scale
        self.shift = shift

    def _eval(self, t: float) -> float:
        return self.shift * t + self.inner.eval(self.scale * t)

    def _deriv(self, n: int, t: float) -> float:
        value = self.scale**n * self.inner.deriv(n, self.scale * t)
        return value + self.shift if n == 1 else value

    def cumulant(self, n: int) -> float:
        value = self.scale**n * self.inner.cumulant(n)
        return value + self.shift if n == 1 else value

    def char_exponent(self, u: float) -> complex:
        return complex(0.0, self.shift * u) + self.inner.char_exponent(self.scale * u)


def gaussian_cgf(mean: float, variance: float) -> CgfModel:
    return GaussianCgf(mean, variance)


def nig_cgf(params: NigParams) -> CgfModel:
    return NigCgf(params)


def affine_cgf(inner: CgfModel, scale: float, shift: float = 0.0) -> CgfModel:
    return AffineCgf(inner, scale, shift)
