"""Functional equations of the Lerch zeta function as numerical residual checks."""

from lerchzeta.identities.combinations import lambda_minus, lambda_plus, omega
from lerchzeta.identities.equations import (
    apostol_fe_residual,
    apostol_minus_fe_residual,
    diff_diff_residual,
    lerch_fe_residual,
    lerch_pair_residual,
)
from lerchzeta.identities.sampling import RESIDUALS, sample_deq, sweep

__all__ = [
    "lambda_minus",
    "lambda_plus",
    "omega",
    "apostol_fe_residual",
    "apostol_minus_fe_residual",
    "diff_diff_residual",
    "lerch_fe_residual",
    "lerch_pair_residual",
    "RESIDUALS",
    "sample_deq",
    "sweep",
]
