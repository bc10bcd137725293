"""Saddle point equation K'(t) = x, solved by bracketed Newton iteration."""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from ..cgf import CgfModel
from ..errors import SaddleConvergenceError, SaddleRangeError

logger = logging.getLogger(__name__)

MAX_ITERATIONS = 200
_MAX_PROBES = 2000


@dataclass(frozen=True)
class SaddleInfo:
    """Saddle point t̂ of K at x and the derived quantities every SPA variant consumes."""

    t_hat: float
    x: float
    k: float
    c: float
    k2: float
    k3: float
    k4: float
    iterations: int = 0

    @property
    def eta(self) -> float:
        return self.k3 * self.k3 / self.k2**3

    @property
    def rho(self) -> float:
        return self.k4 / (self.k2 * self.k2)


def initial_guess(x: float, kappa1: float, kappa2: float) -> float:
    """Two-moment saddle approximation (x - κ₁)/κ₂."""
    if not kappa2 > 0:
        raise ValueError(f"kappa2 must be positive, got {kappa2!r}")
    return (x - kappa1) / kappa2


def saddle_info(cgf: CgfModel, x: float, t_hat: float, iterations: int = 0) -> SaddleInfo:
    k = cgf.eval(t_hat)
    return SaddleInfo(
        t_hat=t_hat,
        x=x,
        k=k,
        c=min(k - x * t_hat, 0.0),
        k2=cgf.deriv(2, t_hat),
        k3=cgf.deriv(3, t_hat),
        k4=cgf.deriv(4, t_hat),
        iterations=iterations,
    )


def _residual(cgf: CgfModel, t: float, x: float) -> float:
    """K'(t) - x, with overflow mapped to ±inf in the direction of t."""
    try:
        value = cgf.deriv(1, t) - x
    except (OverflowError, ZeroDivisionError):
        value = math.nan
    if math.isnan(value):
        value = math.copysign(math.inf, t)
    return value


def _edge_slope(cgf: CgfModel, side: float) -> float:
    """K' just inside the strip edge on one side (±inf for an unbounded side)."""
    edge = cgf.usable_strip.hi if side > 0 else cgf.usable_strip.lo
    if math.isinf(edge):
        return side * math.inf
    return _residual(cgf, edge * (1.0 - 1e-9), 0.0)


def _bracket(cgf: CgfModel, x: float, start: float, side: float) -> Tuple[float, float, int]:
    """
    Probe from 0 towards the strip edge on the given side until K' - x changes sign.

    Doubling steps are used until they would cross a finite edge, after which the
    gap to the edge is halved each probe.

    Returns:
        (inner, outer, probes) with the root between inner and outer
    """
    edge = cgf.usable_strip.hi if side > 0 else cgf.usable_strip.lo
    inner = 0.0
    t = side * abs(start)
    last = -side * math.inf
    for probe in range(1, _MAX_PROBES + 1):
        if not math.isfinite(t):
            break
        if side * t >= side * edge:
            t = inner + (edge - inner) / 2.0
        f = _residual(cgf, t, x)
        if side * f >= 0:
            return inner, t, probe
        inner, last = t, f + x
        if not math.isinf(edge) and abs(edge - t) <= 1e-9 * abs(edge):
            break
        t *= 2.0
    attainable = (last, _edge_slope(cgf, -side)) if side < 0 else (_edge_slope(cgf, -side), last)
    raise SaddleRangeError(x, attainable)


def solve_saddle(cgf: CgfModel, x: float, initial: Optional[float] = None) -> SaddleInfo:
    """
    Solve K'(t̂) = x.

    Newton steps on K'(t) - x are kept inside a bracket found by probing towards
    the strip edges; a step leaving the bracket is replaced by bisection.

    Args:
        cgf: Model to solve
        x: Abscissa
        initial: Optional starting point (defaults to the two-moment guess)

    Returns:
        SaddleInfo at t̂

    Raises:
        SaddleRangeError: x outside the attainable range of K'
        SaddleConvergenceError: Iteration cap reached
    """
    kappa1 = cgf.cumulant(1)
    if x == kappa1:
        return saddle_info(cgf, x, 0.0)

    side = 1.0 if x > kappa1 else -1.0
    guess = initial if initial is not None else initial_guess(x, kappa1, cgf.cumulant(2))
    if not (math.isfinite(guess) and side * guess > 0):
        guess = side * 1e-3 / math.sqrt(cgf.cumulant(2))
    inner, outer, probes = _bracket(cgf, x, guess, side)
    lo, hi = min(inner, outer), max(inner, outer)
    logger.debug(f"Saddle bracket for x={x}: [{lo}, {hi}] after {probes} probes")

    tol = max(1e-12 * math.sqrt(cgf.cumulant(2)), 1e-10 * abs(x))
    t = guess if lo < guess < hi else 0.5 * (lo + hi)
    for iteration in range(1, MAX_ITERATIONS + 1):
        f = _residual(cgf, t, x)
        if abs(f) <= tol:
            return saddle_info(cgf, x, t, iteration)
        if f < 0:
            lo = t
        else:
            hi = t
        try:
            df = cgf.deriv(2, t)
        except (OverflowError, ZeroDivisionError):
            df = math.nan
        step_ok = df > 0 and math.isfinite(df) and math.isfinite(f)
        t_new = t - f / df if step_ok else math.nan
        if not (lo <= t_new <= hi):
            t_new = 0.5 * (lo + hi)
        if t_new == t or hi - lo <= 4.0 * math.ulp(max(abs(lo), abs(hi))):
            # bracket at machine resolution
            logger.debug(f"Saddle bracket collapsed at t={t} with residual {f}")
            return saddle_info(cgf, x, t_new, iteration)
        t = t_new

    raise SaddleConvergenceError(
        f"saddle iteration for x={x!r} did not converge in {MAX_ITERATIONS} steps", last=t
    )
