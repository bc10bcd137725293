"""Outage probability from the saddle point CDF of Ω = θY - X."""

import logging
from dataclasses import dataclass
from typing import Dict, Optional

from ..cgf import QuadratureSettings
from ..errors import ConfigError
from ..scenario import Scenario
from .engine import spa_cdf
from .types import BaseKind, ConditionReport

logger = logging.getLogger(__name__)

METHOD_BASES: Dict[str, Optional[BaseKind]] = {
    "auto": None,
    "nig": BaseKind.ASYMMETRIC_NIG,
    "sym_nig": BaseKind.SYMMETRIC_NIG,
    "normal": BaseKind.NORMAL,
}


@dataclass(frozen=True)
class OutageResult:
    """
    Outage probability for one scenario and method.

    p_out is clamped to [0, 1] and raw keeps the unclamped value. Oracle methods
    fill err_est/unstable (Gil-Pelaez) or ci_halfwidth (Monte Carlo).
    """

    p_out: float
    raw: float
    method: str
    method_used: str
    fell_back: bool = False
    condition_report: Optional[ConditionReport] = None
    err_est: Optional[float] = None
    ci_halfwidth: Optional[float] = None
    unstable: Optional[bool] = None
    wall_time_ms: Optional[float] = None


def outage(
    scenario: Scenario,
    method: Optional[str] = None,
    quad: QuadratureSettings = QuadratureSettings(),
) -> OutageResult:
    """
    P_out = 1 - F̂_Ω(-θσ²), formed from the saddle point survival function.

    Args:
        scenario: Validated scenario
        method: One of auto, nig, sym_nig, normal (defaults to scenario.method)
        quad: Tolerances for CGFs evaluated by quadrature

    Raises:
        ConfigError: method is not a saddle point method
        SaddleRangeError: -θσ² is outside the range of K'_Ω
    """
    name = method or scenario.method
    if name not in METHOD_BASES:
        raise ConfigError(f"{name!r} is not a saddle point method")

    cgf = scenario.build_cgf(quad)
    result = spa_cdf(cgf, scenario.evaluation_point, METHOD_BASES[name], scenario.initial_saddle())
    logger.debug(
        f"Outage {scenario.model} theta_db={scenario.theta_db} via {result.method_used.value}: "
        f"{result.ccdf}"
    )
    return OutageResult(
        p_out=result.ccdf,
        raw=result.raw_ccdf,
        method=name,
        method_used=result.method_used.value,
        fell_back=result.fell_back,
        condition_report=result.condition_report,
    )
