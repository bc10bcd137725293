"""Result records shared by the saddle point CDF engine."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from ..specfun import NigParams


class BaseKind(str, Enum):
    """Base distribution of the saddle point CDF approximation."""

    NORMAL = "normal"
    SYMMETRIC_NIG = "sym_nig"
    ASYMMETRIC_NIG = "nig"


@dataclass(frozen=True)
class BaseEvaluation:
    """
    A base distribution matched to the target at its saddle point.

    z_hat is the base abscissa, s_hat the base saddle and lpp = L''(ŝ); cdf, sf
    and pdf are the base distribution and density at z_hat.
    """

    kind: BaseKind
    z_hat: float
    s_hat: float
    lpp: float
    cdf: float
    sf: float
    pdf: float
    params: Optional[NigParams] = None
    cubic_root: Optional[float] = None
    substituted: bool = False
    legendre_residual: Optional[float] = None


@dataclass(frozen=True)
class ConditionReport:
    c: float
    eta: float
    rho: float
    nig_condition_holds: bool
    nig_condition: Optional[str] = None
    cubic_root: Optional[float] = None
    near_mean: bool = False
    legendre_residual: Optional[float] = None
    # (base, message) for each base that was tried and rejected
    failures: Tuple[Tuple[str, str], ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class SpaResult:
    """
    Saddle point approximation of F(x) = Pr(V <= x).

    cdf and ccdf are clamped to [0, 1]; raw and raw_ccdf keep the unclamped values.
    """

    cdf: float
    raw: float
    ccdf: float
    raw_ccdf: float
    method_used: BaseKind
    fell_back: bool
    condition_report: ConditionReport
    t_hat: float
    z_hat: float
    s_hat: float
    u_hat: float
