"""Complex gamma function and adaptive path quadrature."""

from lerchzeta.numerics.gamma import gamma, q_factor, recip_gamma
from lerchzeta.numerics.quadrature import integrate_polyline, integrate_tail, tail_cutoff

__all__ = [
    "gamma",
    "q_factor",
    "recip_gamma",
    "integrate_polyline",
    "integrate_tail",
    "tail_cutoff",
]
