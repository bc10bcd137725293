"""Tests for the saddle point solver and the closed-form saddles."""

import math

import numpy as np
import pytest

from spa_outage.cgf import (
    GainLaw,
    OmegaSpec,
    compound_binomial_cgf,
    compound_poisson_cgf,
    gamma_gain_cgf,
    gaussian_cgf,
    nig_cgf,
    omega_cgf,
)
from spa_outage.errors import SaddleRangeError
from spa_outage.saddle import (
    analytic_saddle_poisson_nakagami,
    approx_saddle_binomial,
    approx_saddle_comp,
    binomial_saddle_residual,
    initial_guess,
    rayleigh_binomial_saddle,
    solve_saddle,
)


def poisson_omega(lam1: float, lam2: float, theta: float, gain: GainLaw):
    inner = gamma_gain_cgf(gain)
    return omega_cgf(
        OmegaSpec(
            signal=compound_poisson_cgf(lam1, inner),
            interference=compound_poisson_cgf(lam2, inner),
            theta=theta,
        )
    )


def binomial_omega(L: int, prob: float, theta: float, gain: GainLaw):
    inner = gamma_gain_cgf(gain)
    return omega_cgf(
        OmegaSpec(
            signal=compound_binomial_cgf(L, prob, inner),
            interference=compound_binomial_cgf(L, 1.0 - prob, inner),
            theta=theta,
        )
    )


class TestSolveSaddle:
    """Test cases for solve_saddle."""

    def test_gaussian(self):
        """Test t̂ = (x - μ)/σ² exactly."""
        info = solve_saddle(gaussian_cgf(1.0, 4.0), 5.0)
        assert info.t_hat == pytest.approx(1.0, rel=1e-10)
        assert info.k2 == 4.0
        assert info.k3 == 0.0

    def test_at_mean(self):
        """Test x = κ₁ returns t̂ = 0 without iterating."""
        info = solve_saddle(gaussian_cgf(1.0, 4.0), 1.0)
        assert info.t_hat == 0.0
        assert info.iterations == 0
        assert info.c == 0.0

    def test_exp_exp(self, exp_exp_cgf):
        """Test Ω = 2Y - X at x = 0 has t̂ = -1/4 and c = -ln(9/8)."""
        info = solve_saddle(exp_exp_cgf(2.0), 0.0)
        assert info.t_hat == pytest.approx(-0.25, abs=1e-10)
        assert info.c == pytest.approx(-math.log(1.125), rel=1e-9)
        assert info.k2 == pytest.approx(4.0 / 2.25 + 1.0 / 0.5625, rel=1e-9)

    def test_nig(self, nig_2_1):
        """Test the NIG saddle against its closed form."""
        x = 1.5
        w = x * 2.0 / math.hypot(1.0, x)
        info = solve_saddle(nig_cgf(nig_2_1), x)
        assert info.t_hat == pytest.approx(w - 1.0, rel=1e-9)

    def test_near_strip_edge(self, exp_exp_cgf):
        """Test a far right-tail abscissa whose saddle sits close to 1/θ."""
        cgf = exp_exp_cgf(2.0)
        info = solve_saddle(cgf, 50.0)
        assert 0.45 < info.t_hat < 0.5
        assert cgf.deriv(1, info.t_hat) == pytest.approx(50.0, rel=1e-9)

    def test_initial_value_is_optional(self, exp_exp_cgf):
        """Test a poor seed still converges to the same saddle."""
        cgf = exp_exp_cgf(2.0)
        info = solve_saddle(cgf, 0.0, initial=-0.99)
        assert info.t_hat == pytest.approx(-0.25, abs=1e-10)

    def test_out_of_range(self, unit_gain):
        """Test x below the range of K' raises SaddleRangeError."""
        with pytest.raises(SaddleRangeError) as exc:
            solve_saddle(gamma_gain_cgf(unit_gain), -1.0)
        assert exc.value.x == -1.0

    def test_initial_guess(self):
        """Test the two-moment guess and its validation."""
        assert initial_guess(3.0, 1.0, 4.0) == 0.5
        with pytest.raises(ValueError):
            initial_guess(3.0, 1.0, 0.0)


class TestPoissonNakagamiSaddle:
    """Test the exact x = 0 saddle of the Poisson-Nakagami model."""

    @pytest.mark.parametrize("ratio", [0.2, 0.5, 1.0, 2.0, 5.0])
    @pytest.mark.parametrize("theta", [0.25, 0.5, 1.0, 2.0, 4.0])
    @pytest.mark.parametrize("m_f", [1.0, 2.5])
    def test_matches_solver(self, ratio, theta, m_f):
        """Test the closed form against the numeric root over a λ₁/λ₂ by θ grid."""
        lam1, lam2 = 3.0 * ratio, 3.0
        gain = GainLaw(m_f, m_f)
        expected = analytic_saddle_poisson_nakagami(lam1, lam2, theta, gain)
        info = solve_saddle(poisson_omega(lam1, lam2, theta, gain), 0.0)
        assert info.t_hat == pytest.approx(expected, rel=1e-8, abs=1e-12)

    def test_no_interference(self, unit_gain):
        """Test λ₂ = 0 gives r/θ."""
        assert analytic_saddle_poisson_nakagami(5.0, 0.0, 2.0, unit_gain) == 0.5

    def test_invalid(self, unit_gain):
        """Test non-positive signal intensity is rejected."""
        with pytest.raises(ValueError):
            analytic_saddle_poisson_nakagami(0.0, 1.0, 1.0, unit_gain)


class TestBinomialSaddle:
    """Test the binomial-split saddle."""

    @pytest.mark.parametrize(
        "prob,theta,expected", [(0.3, 0.5, -0.064462), (0.7, 1.0, 0.271878)]
    )
    def test_rayleigh_values(self, prob, theta, expected, unit_gain):
        """Test the closed form at tabulated points."""
        assert rayleigh_binomial_saddle(prob, theta, unit_gain) == pytest.approx(
            expected, abs=1e-5
        )

    @pytest.mark.parametrize("prob,theta", [(0.3, 0.5), (0.7, 1.0), (0.5, 4.0), (0.9, 0.1)])
    def test_rayleigh_root(self, prob, theta, unit_gain):
        """Test the closed form zeroes the residual and matches the solver."""
        t = rayleigh_binomial_saddle(prob, theta, unit_gain)
        assert binomial_saddle_residual(t, 10, prob, theta, unit_gain) == pytest.approx(
            0.0, abs=1e-12
        )
        info = solve_saddle(binomial_omega(10, prob, theta, unit_gain), 0.0)
        assert info.t_hat == pytest.approx(t, rel=1e-7, abs=1e-12)

    def test_rayleigh_linear_case(self, unit_gain):
        """Test θp² = q² where the quadratic degenerates."""
        assert rayleigh_binomial_saddle(0.5, 1.0, unit_gain) == 0.0
        t = rayleigh_binomial_saddle(0.6, 4.0 / 9.0, unit_gain)
        assert binomial_saddle_residual(t, 10, 0.6, 4.0 / 9.0, unit_gain) == pytest.approx(
            0.0, abs=1e-12
        )

    def test_residual_independent_of_count(self, unit_gain):
        """Test the solver saddle does not move with L."""
        t5 = solve_saddle(binomial_omega(5, 0.6, 1.5, unit_gain), 0.0).t_hat
        t40 = solve_saddle(binomial_omega(40, 0.6, 1.5, unit_gain), 0.0).t_hat
        assert t5 == pytest.approx(t40, rel=1e-8)

    def test_approx_limits(self):
        """Test the approximation tends to r as q -> 0 and -r/θ as q -> 1."""
        gain = GainLaw(2.0, 3.0)
        assert approx_saddle_binomial(10, 1.0 - 1e-12, 1.5, gain) == pytest.approx(3.0, rel=1e-9)
        assert approx_saddle_binomial(10, 1e-12, 1.5, gain) == pytest.approx(-2.0, rel=1e-9)


class TestCompSaddle:
    """Test the COMP saddle approximations."""

    def test_small_theta(self, unit_gain):
        """Test C a^α/P with C = 2(α-1)/(α-2) μ₁/μ₂."""
        value = approx_saddle_comp("small_theta", 30.0, 150.0, 4.0, 1.0, 1.0, unit_gain)
        assert value == pytest.approx(3.0 * 0.5 * 30.0**4)

    def test_general_tends_to_large_theta(self, unit_gain):
        """Test the general form approaches the large-θ form."""
        general = approx_saddle_comp("general", 1.0, 5.0, 4.0, 1.0, 1e6, unit_gain)
        large = approx_saddle_comp("large_theta", 1.0, 5.0, 4.0, 1.0, 1e6, unit_gain)
        assert general == pytest.approx(large, rel=1e-3)
        assert large < 0

    def test_unknown_regime(self, unit_gain):
        """Test an unknown regime name is rejected."""
        with pytest.raises(ValueError):
            approx_saddle_comp("medium", 30.0, 150.0, 4.0, 1.0, 1.0, unit_gain)


class TestSaddleRoundTrip:
    """Test solve_saddle recovers the saddle that generated its abscissa."""

    def test_recovers_random_saddles(self, unit_gain):
        """Test t₀ -> K'(t₀) -> t̂ returns t₀ across the strip."""
        cgf = poisson_omega(7.0, 3.0, 2.0, unit_gain)
        rng = np.random.default_rng(5)
        for t0 in rng.uniform(-0.9, 0.45, 25):
            info = solve_saddle(cgf, cgf.deriv(1, t0))
            assert info.t_hat == pytest.approx(t0, rel=1e-7, abs=1e-10)

    @pytest.mark.parametrize("x", [-8.0, -1.0, -0.1, 0.1, 1.0, 8.0])
    def test_sign_follows_mean(self, x, unit_gain):
        """Test t̂ is positive exactly when x lies above κ₁."""
        cgf = binomial_omega(10, 0.7, 0.5, unit_gain)
        kappa1 = cgf.cumulant(1)
        info = solve_saddle(cgf, kappa1 + x)
        assert math.copysign(1.0, info.t_hat) == math.copysign(1.0, x)
