"""Saddle point CDF with base selection and the fallback chain."""

import logging
from typing import Callable, Dict, List, Optional, Tuple

from ..cgf import CgfModel
from ..errors import ConditionViolated, DegenerateC, NonFiniteError, SpaOutageError
from ..saddle import SaddleInfo, solve_saddle
from .nig_base import nig_condition, nig_spa_params, sym_nig_spa_params
from .types import BaseEvaluation, BaseKind, ConditionReport, SpaResult
from .wbb import near_mean_limit, near_mean_threshold, normal_base, wbb_cdf

logger = logging.getLogger(__name__)

FALLBACK_CHAINS: Dict[Optional[BaseKind], Tuple[BaseKind, ...]] = {
    None: (BaseKind.ASYMMETRIC_NIG, BaseKind.SYMMETRIC_NIG, BaseKind.NORMAL),
    BaseKind.ASYMMETRIC_NIG: (BaseKind.ASYMMETRIC_NIG, BaseKind.SYMMETRIC_NIG, BaseKind.NORMAL),
    BaseKind.SYMMETRIC_NIG: (BaseKind.SYMMETRIC_NIG, BaseKind.NORMAL),
    BaseKind.NORMAL: (BaseKind.NORMAL,),
}

_BUILDERS: Dict[BaseKind, Callable[[SaddleInfo], BaseEvaluation]] = {
    BaseKind.NORMAL: normal_base,
    BaseKind.SYMMETRIC_NIG: sym_nig_spa_params,
    BaseKind.ASYMMETRIC_NIG: nig_spa_params,
}

_RECOVERABLE = (ConditionViolated, DegenerateC, NonFiniteError)


def _clamp(value: float) -> float:
    return min(1.0, max(0.0, value))


def _report(
    saddle: SaddleInfo,
    failures: List[Tuple[str, str]],
    base: Optional[BaseEvaluation] = None,
    near_mean: bool = False,
) -> ConditionReport:
    condition = nig_condition(saddle)
    return ConditionReport(
        c=saddle.c,
        eta=saddle.eta,
        rho=saddle.rho,
        nig_condition_holds=condition is None,
        nig_condition=condition,
        cubic_root=base.cubic_root if base is not None else None,
        near_mean=near_mean,
        legendre_residual=base.legendre_residual if base is not None else None,
        failures=tuple(failures),
    )


def spa_from_saddle(saddle: SaddleInfo, requested: Optional[BaseKind] = None) -> SpaResult:
    """
    Evaluate the saddle point CDF at a solved saddle, walking the fallback chain.

    Args:
        saddle: Solved saddle point of the target
        requested: First base to try; None selects the full chain

    Returns:
        SpaResult from the first base that applies

    Raises:
        NonFiniteError: Even the normal base produced a non-finite value
    """
    chain = FALLBACK_CHAINS[requested]

    if abs(saddle.t_hat) < near_mean_threshold(saddle.k2):
        raw = near_mean_limit(saddle.k2, saddle.k3)
        return SpaResult(
            cdf=_clamp(raw),
            raw=raw,
            ccdf=_clamp(1.0 - raw),
            raw_ccdf=1.0 - raw,
            method_used=BaseKind.NORMAL,
            fell_back=chain[0] is not BaseKind.NORMAL,
            condition_report=_report(saddle, [], near_mean=True),
            t_hat=saddle.t_hat,
            z_hat=0.0,
            s_hat=0.0,
            u_hat=0.0,
        )

    failures: List[Tuple[str, str]] = []
    last_error: Optional[SpaOutageError] = None
    for kind in chain:
        try:
            base = _BUILDERS[kind](saddle)
            value = wbb_cdf(saddle, base)
        except _RECOVERABLE as exc:
            failures.append((kind.value, str(exc)))
            last_error = exc
            logger.info(f"Base {kind.value} rejected at x={saddle.x}: {exc}")
            continue

        if not 0.0 <= value.cdf <= 1.0:
            logger.info(f"Base {kind.value} gave {value.cdf} outside [0, 1]; clamped")
        return SpaResult(
            cdf=_clamp(value.cdf),
            raw=value.cdf,
            ccdf=_clamp(value.ccdf),
            raw_ccdf=value.ccdf,
            method_used=kind,
            fell_back=kind != chain[0] or base.substituted,
            condition_report=_report(saddle, failures, base),
            t_hat=saddle.t_hat,
            z_hat=base.z_hat,
            s_hat=base.s_hat,
            u_hat=value.u_hat,
        )

    assert last_error is not None
    raise last_error


def lugannani_rice(saddle: SaddleInfo) -> SpaResult:
    """Saddle point CDF with the standard normal base."""
    return spa_from_saddle(saddle, BaseKind.NORMAL)


def spa_cdf(
    cgf: CgfModel,
    x: float,
    requested: Optional[BaseKind] = None,
    initial: Optional[float] = None,
) -> SpaResult:
    """
    Saddle point approximation of Pr(V <= x) for the law with CGF cgf.

    Args:
        cgf: Target CGF
        x: Abscissa inside the range of K'
        requested: Base to start the fallback chain from (None for automatic)
        initial: Optional starting point for the saddle solver

    Raises:
        SaddleRangeError: x outside the range of K'
    """
    saddle = solve_saddle(cgf, x, initial)
    return spa_from_saddle(saddle, requested)
