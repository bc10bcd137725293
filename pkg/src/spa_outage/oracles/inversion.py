"""Gil-Pelaez inversion of the characteristic function.

Q(ω) = Pr(V > ω) = 1/2 + (1/π) ∫₀^∞ Im{exp(K(ju) - juω)} / u du.

The integral is split into panels that double in width from 1/√κ₂. When ω != 0
they give way to half periods π/|ω| of the phase, whose alternating partial
sums are accelerated by repeated averaging.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import numpy as np
from scipy import integrate

from ..cgf import CgfModel
from ..errors import InversionError

logger = logging.getLogger(__name__)

_ACCEL_MIN_PANELS = 10
_ACCEL_WINDOW = 12


@dataclass(frozen=True)
class InversionSettings:
    """Tolerances of the panel quadrature; tail_cut optionally bounds the frequency range."""

    abs_tol: float = 1e-9
    rel_tol: float = 1e-7
    max_panels: int = 2**14
    tail_cut: Optional[float] = None

    def __post_init__(self) -> None:
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("inversion tolerances must be positive")
        if self.max_panels < 16:
            raise ValueError(f"max_panels must be at least 16, got {self.max_panels!r}")
        if self.tail_cut is not None and not self.tail_cut > 0:
            raise ValueError(f"tail_cut must be positive, got {self.tail_cut!r}")

    @classmethod
    def from_settings(cls, settings) -> "InversionSettings":
        return cls(
            settings.inversion_abs_tol, settings.inversion_rel_tol, settings.inversion_max_panels
        )


@dataclass(frozen=True)
class InversionResult:
    value: float
    err_est: float
    unstable: bool
    panels: int = 0


def _repeated_average(sums: List[float]) -> Tuple[float, float]:
    """Average neighbouring partial sums until two remain; returns (estimate, spread)."""
    level = np.asarray(sums, dtype=float)
    while level.size > 2:
        level = 0.5 * (level[1:] + level[:-1])
    return float(0.5 * (level[0] + level[1])), float(abs(level[1] - level[0]))


def _panel_edges(h0: float, omega: float) -> Iterator[Tuple[float, bool]]:
    """
    Right panel edges and whether each closes a half period of the phase.

    Edges double from h0; for ω != 0 they switch to multiples of π/|ω| once the
    doubling reaches the first half period.
    """
    hi = h0
    width = math.pi / abs(omega) if omega != 0.0 else math.inf
    while hi < width:
        yield hi, False
        hi *= 2.0
    k = 1
    while True:
        yield k * width, True
        k += 1


def gil_pelaez_ccdf(
    cgf: CgfModel, omega: float, settings: InversionSettings = InversionSettings()
) -> InversionResult:
    """
    Pr(V > ω) by numerical inversion of exp(K(ju)).

    Args:
        cgf: Model providing char_exponent
        omega: Abscissa
        settings: Inversion tolerances

    Returns:
        InversionResult; unstable is set when |value| < 10 err_est

    Raises:
        InversionError: max_panels exhausted, carrying the partial estimate
    """
    kappa1 = cgf.cumulant(1)
    h0 = 1.0 / math.sqrt(cgf.cumulant(2))
    slope = kappa1 - omega
    near_zero = 1e-6 * h0

    def integrand(u: float) -> float:
        if u < near_zero:
            return slope
        return cmath.exp(cgf.char_exponent(u) - 1j * u * omega).imag / u

    def envelope(u: float) -> float:
        return math.exp(cgf.char_exponent(u).real) * h0 / u

    panel_tol = 0.1 * settings.abs_tol

    total = 0.0
    abserr = 0.0
    accel_err = 0.0
    small = 0
    sums: List[float] = []
    previous: Optional[float] = None
    lo = 0.0
    edges = _panel_edges(h0, omega)
    for panel in range(1, settings.max_panels + 1):
        hi, periodic = next(edges)
        value, error = integrate.quad(
            integrand, lo, hi, epsabs=panel_tol, epsrel=settings.rel_tol, limit=200
        )
        total += value
        abserr += error
        small = small + 1 if abs(value) < settings.abs_tol else 0

        if small >= 2 or envelope(hi) < settings.abs_tol:
            break
        if settings.tail_cut is not None and hi >= settings.tail_cut:
            break
        if periodic:
            sums.append(total)
        if len(sums) >= _ACCEL_MIN_PANELS:
            estimate, _ = _repeated_average(sums[-_ACCEL_WINDOW:])
            if previous is not None:
                accel_err = abs(estimate - previous)
                if accel_err < max(settings.abs_tol, settings.rel_tol * abs(estimate)):
                    total = estimate
                    break
            previous = estimate
        lo = hi
    else:
        partial = 0.5 + total / math.pi
        raise InversionError(
            f"Gil-Pelaez inversion at omega={omega!r} did not converge in "
            f"{settings.max_panels} panels",
            partial,
        )

    result = 0.5 + total / math.pi
    err_est = max(settings.abs_tol, (abserr + accel_err) / math.pi)
    unstable = abs(result) < 10.0 * err_est
    logger.debug(f"Gil-Pelaez Q({omega}) = {result} +/- {err_est} after {panel} panels")
    return InversionResult(result, err_est, unstable, panel)
