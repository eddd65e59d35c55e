"""Seeded sampling of the functional-equation domain and residual sweeps."""

import logging
from functools import partial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from lerchzeta.branch import in_domain_eq
from lerchzeta.config.schemas import BranchConfig, Equation, FEReport
from lerchzeta.identities.equations import (
    apostol_fe_residual,
    apostol_minus_fe_residual,
    diff_diff_residual,
    lerch_fe_residual,
    lerch_pair_residual,
)

logger = logging.getLogger(__name__)

Point = Tuple[complex, complex, complex]

# Distance kept from the poles of Gamma(s) at s = 0, -1, -2, ...
GAMMA_POLE_MARGIN = 0.15
# Step used for the difference quotients in sweeps.
SWEEP_STEP = 1e-5

RESIDUALS: Dict[str, Callable[..., FEReport]] = {
    "lerch": lerch_fe_residual,
    "apostol": apostol_fe_residual,
    "apostol_minus": apostol_minus_fe_residual,
    "lerch_pair": lerch_pair_residual,
    **{f"diff_diff_{k}": partial(diff_diff_residual, k, h=SWEEP_STEP) for k in range(1, 5)},
}


def _near_gamma_pole(s: complex) -> bool:
    if s.real > GAMMA_POLE_MARGIN:
        return False
    return abs(s - min(0, round(s.real))) < GAMMA_POLE_MARGIN


def sample_deq(count: int, seed: int = 0, cfg: Optional[BranchConfig] = None) -> List[Point]:
    """Deterministic pseudo-random points (a, s, w) of the equivalence domain.

    Re(a), Re(w) are drawn from [0.05, 0.95], Im(a), Im(w) from [-0.4, 0.4] and
    s from the box [-3, 3] x [-3, 3]; points outside U or within 0.15 of a pole
    of Gamma(s) are rejected.

    Args:
        count: Number of points
        seed: Seed of the numpy Generator
        cfg: Branch configuration deciding U

    Returns:
        count points in drawing order
    """
    cfg = cfg if cfg is not None else BranchConfig()
    rng = np.random.default_rng(seed)
    points: List[Point] = []
    rejected = 0
    while len(points) < count:
        re_a, re_w = rng.uniform(0.05, 0.95, size=2)
        im_a, im_w = rng.uniform(-0.4, 0.4, size=2)
        re_s, im_s = rng.uniform(-3.0, 3.0, size=2)
        a, w, s = complex(re_a, im_a), complex(re_w, im_w), complex(re_s, im_s)
        if not in_domain_eq(a, w, cfg) or _near_gamma_pole(s):
            rejected += 1
            continue
        points.append((a, s, w))
    logger.debug("sampled %d points of D_eq (seed %d, %d rejected)", count, seed, rejected)
    return points


def sweep(
    equation: Equation,
    points: Sequence[Point],
    cfg: Optional[BranchConfig] = None,
    tol: Optional[float] = None,
) -> List[FEReport]:
    """Residual reports of one equation at every point, evaluating Phi to tol.

    Raises:
        KeyError: For an unknown equation
    """
    cfg = cfg if cfg is not None else BranchConfig()
    residual = RESIDUALS[equation]
    return [residual(a, s, w, cfg, tol=tol) for a, s, w in points]
