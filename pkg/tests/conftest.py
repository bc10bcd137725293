"""Test fixtures and utilities."""

from typing import Callable

import pytest

from spa_outage.cgf import CgfModel, GainLaw, OmegaSpec, gamma_gain_cgf, omega_cgf
from spa_outage.config import Settings
from spa_outage.scenario import Scenario
from spa_outage.specfun import NigParams


@pytest.fixture
def settings() -> Settings:
    """Default settings, independent of any .env file."""
    return Settings(_env_file=None)


@pytest.fixture
def unit_gain() -> GainLaw:
    """Exponential (Rayleigh power) gain with unit mean."""
    return GainLaw(1.0, 1.0)


@pytest.fixture
def exp_exp_cgf(unit_gain) -> Callable[[float], CgfModel]:
    """Ω = θY - X for independent unit exponentials X and Y."""

    def make(theta: float) -> CgfModel:
        inner = gamma_gain_cgf(unit_gain)
        return omega_cgf(OmegaSpec(signal=inner, interference=inner, theta=theta))

    return make


@pytest.fixture
def nig_2_1() -> NigParams:
    """NIG(2, 1, 0, 1)."""
    return NigParams(2.0, 1.0)


@pytest.fixture
def poisson_scenario() -> Scenario:
    """Poisson-Nakagami point with λ = 10, p = 0.7 at θ = 0 dB."""
    return Scenario(model="poisson_nakagami", theta_db=0.0, lam=10.0, p=0.7)


@pytest.fixture
def comp_scenario() -> Scenario:
    """PPP-COMP point: 100 average stations within 1000 m, a = 30 m, R = 150 m."""
    return Scenario(
        model="ppp_comp",
        theta_db=0.0,
        avg_bs_count=100.0,
        a_m=30.0,
        R_m=150.0,
        alpha_pl=4.0,
        r_tot_m=1000.0,
    )


@pytest.fixture
def link_scenario() -> Callable[..., Scenario]:
    """Single exponential signal against a single exponential interferer."""

    def make(theta_db: float = 0.0, **kwargs) -> Scenario:
        return Scenario(model="nakagami_link", theta_db=theta_db, **kwargs)

    return make
