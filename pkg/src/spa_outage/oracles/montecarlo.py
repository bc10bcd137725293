"""Monte Carlo outage estimates.

Trials run in blocks of stream_block; block k draws from Philox keyed by
(seed, k), so the estimate does not depend on how blocks are spread over threads.
A draw with no serving base station has SIR 0 and counts as an outage.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable, List, Optional, Tuple

import numpy as np

from ..cgf import GainLaw
from ..scenario import PPP_MODELS, Scenario

logger = logging.getLogger(__name__)

_Z95 = 1.96

BlockSampler = Callable[[np.random.Generator, int], int]


@dataclass(frozen=True)
class McSettings:
    trials: int = 100_000
    seed: int = 20240601
    r_tot: float = 1000.0
    stream_block: int = 2**14
    threads: int = 1

    def __post_init__(self) -> None:
        if self.trials < 1 or self.stream_block < 1 or self.threads < 1:
            raise ValueError("trials, stream_block and threads must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if not self.r_tot > 0:
            raise ValueError(f"r_tot must be positive, got {self.r_tot!r}")

    @classmethod
    def from_settings(cls, settings, r_tot: float = 1000.0) -> "McSettings":
        return cls(
            trials=settings.mc_trials,
            seed=settings.seed,
            r_tot=r_tot,
            stream_block=settings.mc_stream_block,
            threads=settings.threads,
        )


@dataclass(frozen=True)
class McResult:
    p_hat: float
    ci_halfwidth: float
    trials: int
    outages: int


def block_generator(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=[seed, block]))


def run_blocks(sampler: BlockSampler, mc: McSettings) -> McResult:
    """
    Run mc.trials trials through sampler(rng, n) -> outage count, one stream per block.

    Returns:
        McResult with the 95% normal-approximation half-width
    """
    blocks = math.ceil(mc.trials / mc.stream_block)
    sizes = [min(mc.stream_block, mc.trials - k * mc.stream_block) for k in range(blocks)]

    def job(block: int) -> int:
        return int(sampler(block_generator(mc.seed, block), sizes[block]))

    if mc.threads == 1:
        counts: List[int] = [job(k) for k in range(blocks)]
    else:
        with ThreadPoolExecutor(max_workers=mc.threads) as pool:
            counts = list(pool.map(job, range(blocks)))

    outages = sum(counts)
    p_hat = outages / mc.trials
    ci = _Z95 * math.sqrt(p_hat * (1.0 - p_hat) / mc.trials)
    logger.info(f"Monte Carlo: {outages}/{mc.trials} outages in {blocks} blocks")
    return McResult(p_hat, ci, mc.trials, outages)


def _gain_sums(rng: np.random.Generator, counts: np.ndarray, gain: GainLaw) -> np.ndarray:
    """Sum of counts[i] iid Gamma(m, r) gains: Gamma(counts[i] m, r)."""
    return rng.gamma(counts * gain.m_f, 1.0 / gain.r_f)


def mc_outage_compound(
    aggregation: str,
    theta: float,
    gain: GainLaw,
    mc: McSettings,
    *,
    lam1: float = 0.0,
    lam2: float = 0.0,
    L: int = 0,
    prob: float = 0.0,
    sigma2: float = 0.0,
) -> McResult:
    """
    Outage of X = signal gain sum over M stations vs Y = interference sum over N.

    Args:
        aggregation: "poisson" (M ~ Poisson(lam1), N ~ Poisson(lam2)) or "binomial"
            (M ~ Binomial(L, prob), N ~ Binomial(L, 1 - prob), drawn independently)
    """
    if aggregation == "poisson":
        if lam1 < 0 or lam2 < 0:
            raise ValueError("Poisson means must be nonnegative")

        def counts(rng: np.random.Generator, n: int) -> Tuple[np.ndarray, np.ndarray]:
            return rng.poisson(lam1, n), rng.poisson(lam2, n)

    elif aggregation == "binomial":
        if L < 1 or not 0.0 <= prob <= 1.0:
            raise ValueError("binomial aggregation needs L >= 1 and 0 <= prob <= 1")

        def counts(rng: np.random.Generator, n: int) -> Tuple[np.ndarray, np.ndarray]:
            return rng.binomial(L, prob, n), rng.binomial(L, 1.0 - prob, n)

    else:
        raise ValueError(f"unknown aggregation {aggregation!r}")

    def sampler(rng: np.random.Generator, n: int) -> int:
        m, k = counts(rng, n)
        x = _gain_sums(rng, m, gain)
        y = _gain_sums(rng, k, gain)
        return int(np.count_nonzero((x < theta * (y + sigma2)) | (m == 0)))

    return run_blocks(sampler, mc)


def mc_outage_link(theta: float, gain: GainLaw, mc: McSettings, sigma2: float = 0.0) -> McResult:
    """Single Gamma signal gain against a single Gamma interference gain."""

    def sampler(rng: np.random.Generator, n: int) -> int:
        x = rng.gamma(gain.m_f, 1.0 / gain.r_f, n)
        y = rng.gamma(gain.m_f, 1.0 / gain.r_f, n)
        return int(np.count_nonzero(x < theta * (y + sigma2)))

    return run_blocks(sampler, mc)


def _annulus_power(
    rng: np.random.Generator,
    counts: np.ndarray,
    lo: float,
    hi: float,
    alpha_pl: float,
    power: float,
    gain: Optional[GainLaw],
) -> np.ndarray:
    """Per-trial received power from counts[i] stations uniform on the annulus [lo, hi)."""
    total = int(counts.sum())
    owner = np.repeat(np.arange(counts.size), counts)
    radii = np.sqrt(rng.random(total) * (hi * hi - lo * lo) + lo * lo)
    fades = np.ones(total) if gain is None else rng.gamma(gain.m_f, 1.0 / gain.r_f, total)
    received = power * fades * radii ** (-alpha_pl)
    return np.bincount(owner, weights=received, minlength=counts.size)


def mc_outage_ppp_comp(
    lam: float,
    a: float,
    R: float,
    alpha_pl: float,
    P: float,
    gain: Optional[GainLaw],
    theta: float,
    mc: McSettings,
    sigma2: float = 0.0,
) -> McResult:
    """
    COMP outage with stations of a PPP(lam) in [a, R) serving and those in [R, r_tot)
    interfering; gain None simulates the no-fading model.
    """
    if not 0 < a < R < mc.r_tot:
        raise ValueError(f"need 0 < a < R < r_tot, got {a!r}, {R!r}, {mc.r_tot!r}")
    tail = (mc.r_tot / R) ** (2.0 - alpha_pl)
    if tail > 0.01:
        logger.warning(
            f"Interference beyond r_tot={mc.r_tot} carries {tail:.2%} of the mean interference"
        )
    mean_in = lam * math.pi * (R * R - a * a)
    mean_out = lam * math.pi * (mc.r_tot**2 - R * R)

    def sampler(rng: np.random.Generator, n: int) -> int:
        inside = rng.poisson(mean_in, n)
        outside = rng.poisson(mean_out, n)
        x = _annulus_power(rng, inside, a, R, alpha_pl, P, gain)
        y = _annulus_power(rng, outside, R, mc.r_tot, alpha_pl, P, gain)
        return int(np.count_nonzero((x < theta * (y + sigma2)) | (inside == 0)))

    return run_blocks(sampler, mc)


def mc_outage(scenario: Scenario, mc: McSettings) -> McResult:
    """
    Dispatch a scenario to the matching simulator.

    The scenario's r_tot_m, seed and mc_trials take precedence over mc.
    """
    mc = replace(
        mc,
        r_tot=scenario.r_tot_m,
        seed=scenario.seed if scenario.seed is not None else mc.seed,
        trials=scenario.mc_trials if scenario.mc_trials is not None else mc.trials,
    )
    theta, gain, sigma2 = scenario.theta, scenario.gain, scenario.sigma2
    if scenario.model == "poisson_nakagami":
        lam = scenario.intensity()
        return mc_outage_compound(
            "poisson",
            theta,
            gain,
            mc,
            lam1=scenario.p * lam,
            lam2=(1.0 - scenario.p) * lam,
            sigma2=sigma2,
        )
    if scenario.model == "binomial_nakagami":
        return mc_outage_compound(
            "binomial", theta, gain, mc, L=scenario.L, prob=scenario.p, sigma2=sigma2
        )
    if scenario.model in PPP_MODELS:
        return mc_outage_ppp_comp(
            scenario.intensity(),
            scenario.a_m,
            scenario.R_m,
            scenario.alpha_pl,
            scenario.power,
            gain if scenario.model == "ppp_comp" else None,
            theta,
            mc,
            sigma2,
        )
    return mc_outage_link(theta, gain, mc, sigma2)
