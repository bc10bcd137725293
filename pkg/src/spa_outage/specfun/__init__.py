"""Scalar special functions and the NIG law."""

from .bessel import bessel_k1, bessel_k1e
from .gamma import generalized_inc_gamma, lower_inc_gamma, upper_inc_gamma
from .nig import NigParams, nig_cdf, nig_logpdf, nig_pdf
from .normal import normal_cdf, normal_pdf

__all__ = [
    "NigParams",
    "bessel_k1",
    "bessel_k1e",
    "generalized_inc_gamma",
    "lower_inc_gamma",
    "nig_cdf",
    "nig_logpdf",
    "nig_pdf",
    "normal_cdf",
    "normal_pdf",
    "upper_inc_gamma",
]
