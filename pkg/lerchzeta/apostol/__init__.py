"""Apostol-Bernoulli rational functions B_r(z, w) and Bernoulli polynomials."""

from lerchzeta.apostol.rational import ApostolRational, apostol_exact, render
from lerchzeta.apostol.oracles import (
    bernoulli_numbers,
    bernoulli_oracle,
    bernoulli_poly,
    bernoulli_poly_exact,
    gf_taylor_oracle,
)
from lerchzeta.apostol.evaluate import (
    amplification,
    apostol_eval,
    lemma_b_lhs_minus_rhs,
    lemma_b_sum_residual,
)

__all__ = [
    "ApostolRational",
    "apostol_exact",
    "render",
    "bernoulli_numbers",
    "bernoulli_oracle",
    "bernoulli_poly",
    "bernoulli_poly_exact",
    "gf_taylor_oracle",
    "amplification",
    "apostol_eval",
    "lemma_b_lhs_minus_rhs",
    "lemma_b_sum_residual",
]
