"""Saddle point CDF approximation with normal and NIG base distributions."""

from ..specfun import NigParams
from .engine import FALLBACK_CHAINS, lugannani_rice, spa_cdf, spa_from_saddle
from .nig_base import (
    ETA_MIN,
    SUBSTITUTE_ROOT,
    cubic_real_roots,
    nig_condition,
    nig_spa_params,
    sym_nig_spa_params,
)
from .outage import METHOD_BASES, OutageResult, outage
from .types import BaseEvaluation, BaseKind, ConditionReport, SpaResult
from .wbb import near_mean_limit, near_mean_threshold, normal_base, wbb_cdf

__all__ = [
    "ETA_MIN",
    "FALLBACK_CHAINS",
    "METHOD_BASES",
    "SUBSTITUTE_ROOT",
    "BaseEvaluation",
    "BaseKind",
    "ConditionReport",
    "NigParams",
    "OutageResult",
    "SpaResult",
    "cubic_real_roots",
    "lugannani_rice",
    "near_mean_limit",
    "near_mean_threshold",
    "nig_condition",
    "nig_spa_params",
    "normal_base",
    "outage",
    "spa_cdf",
    "spa_from_saddle",
    "sym_nig_spa_params",
    "wbb_cdf",
]
