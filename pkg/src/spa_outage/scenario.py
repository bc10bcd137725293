"""Experiment scenarios: model parameters, threshold and evaluation method."""

import math
from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .cgf import (
    CgfModel,
    GainLaw,
    OmegaSpec,
    QuadratureSettings,
    compound_binomial_cgf,
    compound_poisson_cgf,
    gamma_gain_cgf,
    nofading_cgf,
    omega_cgf,
    ppp_comp_cgf,
)
from .saddle import analytic_saddle_poisson_nakagami, approx_saddle_binomial, approx_saddle_comp

ModelName = Literal[
    "poisson_nakagami", "binomial_nakagami", "ppp_comp", "ppp_comp_nofading", "nakagami_link"
]
MethodName = Literal["auto", "nig", "sym_nig", "normal", "gil_pelaez", "mc"]

PPP_MODELS = ("ppp_comp", "ppp_comp_nofading")
SPA_METHODS = ("auto", "nig", "sym_nig", "normal")
ORACLE_METHODS = ("gil_pelaez", "mc")


def db_to_linear(value_db: float) -> float:
    return 10.0 ** (value_db / 10.0)


class Scenario(BaseModel):
    """
    One outage evaluation: Pr(SINR < θ) = Pr(θY - X > -θσ²).

    For poisson_nakagami `lam` is the mean number of base stations (λ₁ = pλ
    serve, λ₂ = qλ interfere); for the PPP models it is the intensity per m²,
    or it is derived from `avg_bs_count` over the disk of radius r_tot_m.
    """

    model_config = ConfigDict(extra="forbid", populate_by_name=True, frozen=True)

    model: ModelName
    theta_db: float
    sigma2: float = Field(0.0, ge=0.0)
    method: MethodName = "auto"

    # aggregation models
    lam: Optional[float] = Field(None, alias="lambda", gt=0.0)
    p: float = Field(0.7, ge=0.0, le=1.0)
    L: int = Field(10, ge=1)

    # Nakagami power gain Gamma(m_f, r_f)
    m_f: float = Field(1.0, gt=0.0)
    r_f: float = Field(1.0, gt=0.0)

    # PPP-COMP geometry
    a_m: float = Field(30.0, gt=0.0)
    R_m: float = Field(150.0, gt=0.0)
    alpha_pl: float = Field(4.0, gt=2.0)
    power_db: float = 0.0
    r_tot_m: float = Field(1000.0, gt=0.0)
    avg_bs_count: Optional[float] = Field(None, gt=0.0)

    # oracle overrides
    seed: Optional[int] = Field(None, ge=0, lt=2**64)
    mc_trials: Optional[int] = Field(None, ge=1)

    @field_validator("theta_db", "power_db")
    @classmethod
    def validate_finite_db(cls, v: float) -> float:
        """Reject ±inf and nan decibel values."""
        if not math.isfinite(v):
            raise ValueError("decibel values must be finite")
        return v

    @model_validator(mode="after")
    def validate_model_parameters(self) -> "Scenario":
        if self.model == "poisson_nakagami":
            if self.lam is None and self.avg_bs_count is None:
                raise ValueError("poisson_nakagami needs lambda or avg_bs_count")
            if not 0.0 < self.p < 1.0:
                raise ValueError("poisson_nakagami needs 0 < p < 1")
        if self.model in PPP_MODELS:
            if self.lam is None and self.avg_bs_count is None:
                raise ValueError(f"{self.model} needs lambda or avg_bs_count")
            if not 0.0 < self.a_m < self.R_m < self.r_tot_m:
                raise ValueError("geometry needs 0 < a_m < R_m < r_tot_m")
        return self

    @property
    def theta(self) -> float:
        return db_to_linear(self.theta_db)

    @property
    def power(self) -> float:
        return db_to_linear(self.power_db)

    @property
    def gain(self) -> GainLaw:
        return GainLaw(self.m_f, self.r_f)

    @property
    def evaluation_point(self) -> float:
        """x at which the CDF of Ω is evaluated: -θσ²."""
        return -self.theta * self.sigma2

    def intensity(self) -> float:
        """Mean BS count (poisson_nakagami) or BS intensity per m² (PPP models)."""
        if self.model in PPP_MODELS:
            if self.avg_bs_count is not None:
                return self.avg_bs_count / (math.pi * self.r_tot_m**2)
            assert self.lam is not None
            return self.lam
        if self.lam is not None:
            return self.lam
        assert self.avg_bs_count is not None
        return self.avg_bs_count

    def with_updates(self, **updates: Any) -> "Scenario":
        """Copy with some fields replaced, validated again."""
        data: Dict[str, Any] = self.model_dump()
        data.update(updates)
        return Scenario.model_validate(data)

    def build_cgf(self, quad: QuadratureSettings = QuadratureSettings()) -> CgfModel:
        """CGF of Ω = θY - X for this scenario."""
        theta, gain = self.theta, self.gain
        if self.model == "poisson_nakagami":
            lam = self.intensity()
            inner = gamma_gain_cgf(gain)
            spec = OmegaSpec(
                signal=compound_poisson_cgf(self.p * lam, inner),
                interference=compound_poisson_cgf((1.0 - self.p) * lam, inner),
                theta=theta,
            )
            return omega_cgf(spec)
        if self.model == "binomial_nakagami":
            inner = gamma_gain_cgf(gain)
            spec = OmegaSpec(
                signal=compound_binomial_cgf(self.L, self.p, inner),
                interference=compound_binomial_cgf(self.L, 1.0 - self.p, inner),
                theta=theta,
            )
            return omega_cgf(spec)
        if self.model == "ppp_comp":
            return ppp_comp_cgf(
                self.intensity(), self.a_m, self.R_m, self.alpha_pl, self.power, gain, theta, quad
            )
        if self.model == "ppp_comp_nofading":
            return nofading_cgf(
                self.intensity(), self.a_m, self.R_m, self.alpha_pl, self.power, theta, quad
            )
        inner = gamma_gain_cgf(gain)
        return omega_cgf(OmegaSpec(signal=inner, interference=inner, theta=theta))

    def initial_saddle(self) -> Optional[float]:
        """Closed-form or approximate saddle at x = 0, used to seed the solver."""
        if self.sigma2 != 0.0:
            return None
        theta, gain = self.theta, self.gain
        if self.model == "poisson_nakagami":
            lam = self.intensity()
            return analytic_saddle_poisson_nakagami(
                self.p * lam, (1.0 - self.p) * lam, theta, gain
            )
        if self.model == "binomial_nakagami" and 0.0 < self.p < 1.0:
            return approx_saddle_binomial(self.L, self.p, theta, gain)
        if self.model == "ppp_comp":
            return approx_saddle_comp(
                "general", self.a_m, self.R_m, self.alpha_pl, self.power, theta, gain
            )
        return None
