"""Saddle point equation solver and closed-form saddle points."""

from .analytic import (
    analytic_saddle_poisson_nakagami,
    approx_saddle_binomial,
    approx_saddle_comp,
    binomial_saddle_residual,
    rayleigh_binomial_saddle,
)
from .solver import MAX_ITERATIONS, SaddleInfo, initial_guess, saddle_info, solve_saddle

__all__ = [
    "MAX_ITERATIONS",
    "SaddleInfo",
    "analytic_saddle_poisson_nakagami",
    "approx_saddle_binomial",
    "approx_saddle_comp",
    "binomial_saddle_residual",
    "initial_guess",
    "rayleigh_binomial_saddle",
    "saddle_info",
    "solve_saddle",
]
