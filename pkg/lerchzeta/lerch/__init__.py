"""Evaluation of the Lerch zeta function: series, continuation formula and corollaries."""

from lerchzeta.lerch.series import in_series_region, phi_series
from lerchzeta.lerch.params import default_params, head_branch_ok, validate_params
from lerchzeta.lerch.continuation import (
    choose_contour,
    compute_H,
    compute_I,
    compute_J,
    compute_J_over_gamma,
    decomposition,
    phi_integrand,
    phi_taylor,
    taylor_coefficients,
)
from lerchzeta.lerch.evaluate import lerch_phi, special_value
from lerchzeta.lerch.corollaries import hurwitz, li1_closed, polylog

__all__ = [
    "in_series_region",
    "phi_series",
    "default_params",
    "head_branch_ok",
    "validate_params",
    "choose_contour",
    "compute_H",
    "compute_I",
    "compute_J",
    "compute_J_over_gamma",
    "decomposition",
    "phi_integrand",
    "phi_taylor",
    "taylor_coefficients",
    "lerch_phi",
    "special_value",
    "hurwitz",
    "li1_closed",
    "polylog",
]
