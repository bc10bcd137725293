"""PPP coordinated multi-point (COMP) model.

Base stations form a PPP of intensity λ outside an exclusion disk of radius a.
Those in the annulus [a, R) jointly serve the user, the rest interfere, and the
received power from distance r is G P r^(-α). Ω = θY - X.

The CGF is built for the dimensionless variable V = Ω / (P a^(-α)) (radii in
units of a, intensity λa²) and rescaled, so quadrature tolerances apply to O(1)
numbers. Radial integrals use v = ρ^(2-α), which maps [ρ0, ∞) to the finite
interval (0, ρ0^(2-α)] with a bounded integrand.
"""

import math
from typing import Tuple, Union

from scipy import special

from ..specfun import lower_inc_gamma
from .base import (
    AffineCgf,
    CgfModel,
    ConvergenceStrip,
    QuadratureSettings,
    quad_complex,
    quad_real,
)
from .gain import DeterministicGain, GainLaw


Gain = Union[GainLaw, DeterministicGain]


def _check_geometry(lam: float, a: float, R: float, alpha_pl: float, P: float) -> None:
    if not lam > 0:
        raise ValueError(f"intensity must be positive, got {lam!r}")
    if not 0 < a < R:
        raise ValueError(f"need 0 < a < R, got a={a!r}, R={R!r}")
    if not alpha_pl > 2:
        raise ValueError(f"path-loss exponent must exceed 2, got {alpha_pl!r}")
    if not P > 0:
        raise ValueError(f"transmit power must be positive, got {P!r}")


class UnitCompCgf(CgfModel):
    """
    CGF of V for inner radius 1, outer radius u = R/a, density Λ = λa² and unit power.
    """

    def __init__(
        self, density: float, u: float, alpha_pl: float, theta: float, gain: Gain,
        quad: QuadratureSettings,
    ):
        strip = ConvergenceStrip(-gain.tau_max, gain.tau_max * u**alpha_pl / theta)
        super().__init__(strip)
        self.density = density
        self.u = u
        self.alpha_pl = alpha_pl
        self.theta = theta
        self.gain = gain
        self.quad = quad
        self.q = alpha_pl / (alpha_pl - 2.0)
        self.v_split = u ** (2.0 - alpha_pl)
        self.weight = 2.0 * math.pi * density

    # radial integrals in v; w = v^q = ρ^(-α)

    def _radial(self, n: int, coeff: float, lo: float, hi: float) -> float:
        gain, q = self.gain, self.q

        if n == 0:
            def integrand(v: float) -> float:
                w = v**q
                return gain.mgf_minus_one(coeff * w) / w
        else:
            def integrand(v: float) -> float:
                w = v**q
                return w ** (n - 1) * gain.mgf_deriv(n, coeff * w)

        return quad_real(integrand, lo, hi, self.quad) / (self.alpha_pl - 2.0)

    def _signal(self, n: int, t: float) -> float:
        """n-th derivative of ∫_1^u (E[exp(-t ρ^(-α) G)] - 1) ρ dρ."""
        return (-1.0) ** n * self._radial(n, -t, self.v_split, 1.0)

    def _interference(self, n: int, t: float) -> float:
        """n-th derivative of ∫_u^∞ (E[exp(θ t ρ^(-α) G)] - 1) ρ dρ."""
        return self.theta**n * self._radial(n, self.theta * t, 0.0, self.v_split)

    def _eval(self, t: float) -> float:
        return self.weight * (self._signal(0, t) + self._interference(0, t))

    def _deriv(self, n: int, t: float) -> float:
        return self.weight * (self._signal(n, t) + self._interference(n, t))

    def cumulant(self, n: int) -> float:
        return unit_comp_cumulant(n, self.density, self.u, self.alpha_pl, self.theta, self.gain)

    def char_exponent(self, u: float) -> complex:
        if isinstance(self.gain, GainLaw):
            return self._char_hypergeometric(u)
        return self._char_quadrature(u)

    def _char_quadrature(self, freq: float) -> complex:
        gain, q = self.gain, self.q

        def make(coeff: complex):
            def integrand(v: float) -> complex:
                w = v**q
                return (gain.mgf_complex(coeff * w) - 1.0) / w
            return integrand

        signal = quad_complex(make(complex(0.0, -freq)), self.v_split, 1.0, self.quad)
        interference = quad_complex(
            make(complex(0.0, self.theta * freq)), 0.0, self.v_split, self.quad
        )
        return self.weight * (signal + interference) / (self.alpha_pl - 2.0)

    def _char_hypergeometric(self, freq: float) -> complex:
        """
        Closed form through ∫_ρ^∞ [(1 - τ r^(-α))^(-m) - 1] r dr
        = (ρ²/2) [1 - 2F1(m, -2/α; 1 - 2/α; τ ρ^(-α))].

        The Pfaff transformation maps the imaginary argument z to z/(z - 1),
        which stays inside the unit disk for every frequency.
        """
        gain = self.gain
        b = 2.0 / self.alpha_pl

        def tail(rho: float, tau: complex) -> complex:
            z = tau * rho ** (-self.alpha_pl)
            pfaff = (1.0 - z) ** b * special.hyp2f1(1.0 - b - gain.m_f, -b, 1.0 - b, z / (z - 1.0))
            return 0.5 * rho * rho * (1.0 - complex(pfaff))

        tau_signal = complex(0.0, -freq / gain.r_f)
        tau_interference = complex(0.0, self.theta * freq / gain.r_f)
        signal = tail(1.0, tau_signal) - tail(self.u, tau_signal)
        return self.weight * (signal + tail(self.u, tau_interference))


def annulus_integral_nofading(n: int, s: float, lo: float, hi: float, alpha_pl: float) -> float:
    """
    n-th s-derivative of ∫_lo^hi (exp(-s r^(-α)) - 1) r dr for s > 0, hi may be inf.

    Uses lower incomplete gammas of order n - 2/α (order 1 - 2/α for n = 0, after
    integrating by parts), all real for s > 0.
    """
    if not s > 0:
        raise ValueError(f"closed form needs s > 0, got {s!r}")
    b = 2.0 / alpha_pl
    z_lo = s * lo ** (-alpha_pl)
    z_hi = 0.0 if math.isinf(hi) else s * hi ** (-alpha_pl)

    def gamma_span(order: float) -> float:
        return lower_inc_gamma(order, z_lo) - lower_inc_gamma(order, z_hi)

    if n == 0:
        edge = 0.5 * lo * lo * -math.expm1(-z_lo)
        if not math.isinf(hi):
            edge -= 0.5 * hi * hi * -math.expm1(-z_hi)
        return edge - 0.5 * s**b * gamma_span(1.0 - b)
    return (-1.0) ** n / alpha_pl * s ** (b - n) * gamma_span(n - b)


class UnitNoFadingCgf(UnitCompCgf):
    """Deterministic-gain COMP model; incomplete-gamma closed forms where they are real."""

    def __init__(
        self, density: float, u: float, alpha_pl: float, theta: float, quad: QuadratureSettings
    ):
        super().__init__(density, u, alpha_pl, theta, DeterministicGain(), quad)

    def _signal(self, n: int, t: float) -> float:
        if t > 0:
            return annulus_integral_nofading(n, t, 1.0, self.u, self.alpha_pl)
        return super()._signal(n, t)

    def _interference(self, n: int, t: float) -> float:
        s = -self.theta * t
        if s > 0:
            tail = annulus_integral_nofading(n, s, self.u, math.inf, self.alpha_pl)
            return (-self.theta) ** n * tail
        return super()._interference(n, t)


def unit_comp_cumulant(
    n: int, density: float, u: float, alpha_pl: float, theta: float, gain: Gain
) -> float:
    limit = (-1.0) ** n * 2.0 * math.pi * density * gain.moment(n) / (n * alpha_pl - 2.0)
    return limit * (1.0 + ((-theta) ** n - 1.0) * u ** (2.0 - n * alpha_pl))


def ppp_comp_cumulant(
    n: int, lam: float, a: float, R: float, alpha_pl: float, P: float, gain: Gain, theta: float
) -> float:
    """
    n-th cumulant of Ω: κ_lim [1 + ((-θ)^n - 1) u^(2-nα)] with u = R/a and
    κ_lim = (-1)^n 2πλ μ_n(G) P^n a^(2-nα) / (nα - 2).
    """
    _check_geometry(lam, a, R, alpha_pl, P)
    unit = unit_comp_cumulant(n, lam * a * a, R / a, alpha_pl, theta, gain)
    return unit * (P * a ** (-alpha_pl)) ** n


def ppp_comp_skew_kurt(lam: float, a: float, alpha_pl: float, gain: Gain) -> Tuple[float, float]:
    """
    Squared skewness and excess kurtosis of Ω in the a << R limit.

    Returns:
        (skew², kurtosis) = ((2(α-1))³/((3α-2)² 2πλa²) μ3²/μ2³,
                             (α-1)²/((2α-1) πλa²) μ4/μ2²)
    """
    alpha = alpha_pl
    m2, m3, m4 = gain.moment(2), gain.moment(3), gain.moment(4)
    skew2 = (2.0 * (alpha - 1.0)) ** 3 / ((3.0 * alpha - 2.0) ** 2 * 2.0 * math.pi * lam * a * a)
    kurt = (alpha - 1.0) ** 2 / ((2.0 * alpha - 1.0) * math.pi * lam * a * a)
    return skew2 * m3 * m3 / m2**3, kurt * m4 / (m2 * m2)


def ppp_comp_cgf(
    lam: float, a: float, R: float, alpha_pl: float, P: float, gain: GainLaw, theta: float,
    quad: QuadratureSettings = QuadratureSettings(),
) -> CgfModel:
    _check_geometry(lam, a, R, alpha_pl, P)
    unit = UnitCompCgf(lam * a * a, R / a, alpha_pl, theta, gain, quad)
    return AffineCgf(unit, P * a ** (-alpha_pl))


def nofading_cgf(
    lam: float, a: float, R: float, alpha_pl: float, P: float, theta: float,
    quad: QuadratureSettings = QuadratureSettings(),
) -> CgfModel:
    _check_geometry(lam, a, R, alpha_pl, P)
    unit = UnitNoFadingCgf(lam * a * a, R / a, alpha_pl, theta, quad)
    return AffineCgf(unit, P * a ** (-alpha_pl))
