"""Cumulant generating functions for every model, in the plus convention."""

from .base import (
    AffineCgf,
    CgfModel,
    ConvergenceStrip,
    GaussianCgf,
    NigCgf,
    QuadratureSettings,
    affine_cgf,
    gaussian_cgf,
    nig_cgf,
)
from .compound import (
    OmegaSpec,
    compound_binomial_cgf,
    compound_poisson_cgf,
    omega_cgf,
)
from .gain import DeterministicGain, GainLaw, gamma_gain_cgf
from .ppp import (
    annulus_integral_nofading,
    nofading_cgf,
    ppp_comp_cgf,
    ppp_comp_cumulant,
    ppp_comp_skew_kurt,
)

__all__ = [
    "AffineCgf",
    "CgfModel",
    "ConvergenceStrip",
    "DeterministicGain",
    "GainLaw",
    "GaussianCgf",
    "NigCgf",
    "OmegaSpec",
    "QuadratureSettings",
    "affine_cgf",
    "annulus_integral_nofading",
    "compound_binomial_cgf",
    "compound_poisson_cgf",
    "gamma_gain_cgf",
    "gaussian_cgf",
    "nig_cgf",
    "nofading_cgf",
    "omega_cgf",
    "ppp_comp_cgf",
    "ppp_comp_cumulant",
    "ppp_comp_skew_kurt",
]
