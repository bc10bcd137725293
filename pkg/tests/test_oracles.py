
import math

import pytest

from spa_outage.cgf import affine_cgf, gaussian_cgf, nig_cgf
from spa_outage.errors import InversionError
from spa_outage.oracles import (
    InversionSettings,
    McSettings,
    gil_pelaez_ccdf,
    mc_outage,
    mc_outage_compound,
    mc_outage_link,
    run_blocks,
)
from spa_outage.scenario import Scenario
from spa_outage.specfun import NigParams, nig_cdf, normal_cdf


class TestGilPelaez:
    """Test cases for gil_pelaez_ccdf."""

    def test_gaussian_median(self):
        """Test Q(0) = 1/2 for a centred Gaussian."""
        result = gil_pelaez_ccdf(gaussian_cgf(0.0, 1.0), 0.0)
        assert result.value == pytest.approx(0.5, abs=1e-9)
        assert not result.unstable

    def test_gaussian_tail(self):
        """Test Q(1) = Φ(-1)."""
        result = gil_pelaez_ccdf(gaussian_cgf(0.0, 1.0), 1.0)
        assert result.value == pytest.approx(normal_cdf(-1.0), abs=1e-7)

    def test_exp_exp(self, exp_exp_cgf):
        """Test Pr(2Y - X > 0) = 2/3."""
        result = gil_pelaez_ccdf(exp_exp_cgf(2.0), 0.0)
        assert result.value == pytest.approx(2.0 / 3.0, abs=1e-6)
        assert result.err_est < 1e-6

    def test_nig(self, nig_2_1):
        """Test the NIG survival function."""
        result = gil_pelaez_ccdf(nig_cgf(nig_2_1), 1.0)
        assert result.value == pytest.approx(1.0 - nig_cdf(1.0, nig_2_1), abs=1e-7)

    def test_scaled_variable(self):
        """Test a tiny scale factor does not change Q at the matching abscissa."""
        result = gil_pelaez_ccdf(affine_cgf(gaussian_cgf(0.0, 1.0), 1e-6, 0.0), 1e-6)
        assert result.value == pytest.approx(normal_cdf(-1.0), abs=1e-7)
        assert not result.unstable

    def test_physical_units(self, comp_scenario):
        """Test the PPP CGF in received-power units inverts like its unit-free core."""
        cgf = comp_scenario.build_cgf()
        scaled = gil_pelaez_ccdf(cgf, 0.0)
        unit = gil_pelaez_ccdf(cgf.inner, 0.0)
        assert scaled.value == pytest.approx(unit.value, abs=1e-6)
        assert scaled.value == pytest.approx(0.2637, abs=2e-3)

    def test_unstable_far_tail(self):
        """Test a value below ten error estimates is flagged."""
        result = gil_pelaez_ccdf(gaussian_cgf(0.0, 1.0), 7.0)
        assert result.unstable

    def test_panel_budget(self):
        """Test an exhausted panel budget raises with the partial estimate."""
        cgf = nig_cgf(NigParams(2.0, 1.0, 0.0, 1e-3))
        settings = InversionSettings(abs_tol=1e-14, rel_tol=1e-14, max_panels=16)
        with pytest.raises(InversionError) as exc:
            gil_pelaez_ccdf(cgf, 1.0, settings)
        assert math.isfinite(exc.value.partial)

    def test_settings_validation(self):
        """Test invalid tolerances are rejected."""
        with pytest.raises(ValueError):
            InversionSettings(abs_tol=0.0)
        with pytest.raises(ValueError):
            InversionSettings(max_panels=4)

    def test_from_settings(self, settings):
        """Test tolerances are read from Settings."""
        inv = InversionSettings.from_settings(settings)
        assert inv.abs_tol == settings.inversion_abs_tol
        assert inv.max_panels == settings.inversion_max_panels


class TestMonteCarlo:
    """Test cases for the Monte Carlo simulators."""

    @pytest.mark.parametrize("threads", [4, 8])
    def test_deterministic_across_threads(self, threads, unit_gain):
        """Test the estimate does not depend on the thread count."""
        single = McSettings(trials=5000, seed=7, stream_block=512, threads=1)
        pooled = McSettings(trials=5000, seed=7, stream_block=512, threads=threads)
        one = mc_outage_compound("poisson", 1.0, unit_gain, single, lam1=3.0, lam2=2.0)
        many = mc_outage_compound("poisson", 1.0, unit_gain, pooled, lam1=3.0, lam2=2.0)
        assert one == many

    @pytest.mark.parametrize("threads", [4, 8])
    def test_ppp_deterministic_across_threads(self, threads, comp_scenario):
        """Test the PPP simulator is reproducible for any thread count."""
        one = mc_outage(comp_scenario, McSettings(trials=3000, stream_block=256, threads=1))
        many = mc_outage(
            comp_scenario, McSettings(trials=3000, stream_block=256, threads=threads)
        )
        assert one == many

    def test_seed_changes_estimate(self, unit_gain):
        """Test different seeds give different draws."""
        a = mc_outage_link(1.0, unit_gain, McSettings(trials=2000, seed=1))
        b = mc_outage_link(1.0, unit_gain, McSettings(trials=2000, seed=2))
        assert a.outages != b.outages

    def test_block_sizes(self):
        """Test every trial is simulated exactly once."""
        seen = []

        def sampler(rng, n):
            seen.append(n)
            return n

        result = run_blocks(sampler, McSettings(trials=1000, stream_block=300))
        assert sorted(seen) == [100, 300, 300, 300]
        assert result.p_hat == 1.0
        assert result.ci_halfwidth == 0.0

    def test_no_interference(self, unit_gain):
        """Test λ₂ = 0 gives outage only without a serving station."""
        result = mc_outage_compound(
            "poisson", 1.0, unit_gain, McSettings(trials=20000), lam1=2.0, lam2=0.0
        )
        assert result.p_hat == pytest.approx(math.exp(-2.0), abs=0.01)

    def test_full_cooperation(self, unit_gain):
        """Test p = 1 never has an interferer or an empty serving set."""
        result = mc_outage_compound(
            "binomial", 1.0, unit_gain, McSettings(trials=2000), L=5, prob=1.0
        )
        assert result.outages == 0

    def test_link(self, unit_gain):
        """Test Pr(X < θY) = θ/(1 + θ) for exponential gains."""
        result = mc_outage_link(2.0, unit_gain, McSettings(trials=40000))
        assert result.p_hat == pytest.approx(2.0 / 3.0, abs=0.015)
        assert result.ci_halfwidth < 0.01

    def test_unknown_aggregation(self, unit_gain):
        """Test unknown aggregation names are rejected."""
        with pytest.raises(ValueError):
            mc_outage_compound("geometric", 1.0, unit_gain, McSettings(trials=10))

    def test_scenario_overrides(self, link_scenario):
        """Test scenario seed and trials take precedence."""
        scenario = link_scenario(0.0, seed=11, mc_trials=300)
        result = mc_outage(scenario, McSettings(trials=10, seed=3))
        assert result.trials == 300
        again = mc_outage(scenario, McSettings(trials=10, seed=99))
        assert again == result

    def test_settings_validation(self):
        """Test invalid simulator settings are rejected."""
        with pytest.raises(ValueError):
            McSettings(trials=0)
        with pytest.raises(ValueError):
            McSettings(seed=-1)


MILLION = McSettings(trials=1_000_000, threads=8)


def assert_within_ci(inverted, simulated, atom: float = 0.0) -> None:
    """MC and inversion agree to three CI half-widths plus the inversion error."""
    gap = abs(inverted.value + atom / 2.0 - simulated.p_hat)
    assert gap <= 3.0 * simulated.ci_halfwidth + inverted.err_est


@pytest.mark.slow
class TestOracleAgreement:
    """Test the two oracles against each other at 10⁶ trials."""

    def test_poisson_nakagami(self, poisson_scenario):
        """Test inversion and simulation agree on the Poisson-Nakagami model."""
        inverted = gil_pelaez_ccdf(poisson_scenario.build_cgf(), 0.0)
        simulated = mc_outage(poisson_scenario, MILLION)
        # inversion puts half of the Pr(M = N = 0) atom at 0 above it
        assert_within_ci(inverted, simulated, atom=math.exp(-10.0))

    def test_binomial_nakagami(self):
        """Test inversion and simulation agree on the binomial model."""
        scenario = Scenario(model="binomial_nakagami", theta_db=-5.0, L=10, p=0.7)
        inverted = gil_pelaez_ccdf(scenario.build_cgf(), 0.0)
        simulated = mc_outage(scenario, MILLION)
        assert_within_ci(inverted, simulated, atom=0.7**10 * 0.3**10)

    @pytest.mark.parametrize("theta_db", [-5.0, 0.0, 5.0])
    def test_link(self, theta_db, link_scenario):
        """Test inversion and simulation agree on the single link."""
        scenario = link_scenario(theta_db)
        inverted = gil_pelaez_ccdf(scenario.build_cgf(), 0.0)
        simulated = mc_outage(scenario, MILLION)
        assert_within_ci(inverted, simulated)

    @pytest.mark.parametrize("model", ["ppp_comp", "ppp_comp_nofading"])
    def test_ppp(self, model):
        """Test inversion and simulation agree on both PPP COMP models."""
        scenario = Scenario(
            model=model,
            theta_db=0.0,
            lam=100.0 / (math.pi * 1000.0**2),
            r_tot_m=3000.0,
        )
        inverted = gil_pelaez_ccdf(scenario.build_cgf(), 0.0)
        simulated = mc_outage(scenario, MILLION)
        assert_within_ci(inverted, simulated)
