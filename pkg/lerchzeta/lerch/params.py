"""Choice and validation of the free constants (alpha, N, m, eps)."""

import logging
import math
from typing import Optional

from lerchzeta.branch import nu, principal_arg
from lerchzeta.branch.principal import TWO_PI
from lerchzeta.config.schemas import BranchConfig, EvalParams
from lerchzeta.errors import ParameterError

logger = logging.getLogger(__name__)

_MAX_HEAD = 10_000


def head_branch_ok(w: complex, N: int, cfg: BranchConfig) -> bool:
    """True iff N + w has the argument 2*pi*nu + Arg(N + w).

    The Mellin representation behind the continuation formula needs
    (n+w)^(-s) = e^(-2*pi*i*nu*s) times the principal power for every n >= N.
    Once this holds at n = N it holds for all larger n, because Arg(n+w)
    moves monotonically towards 0.
    """
    x = complex(w) + N
    if x.real <= 0:
        return False
    shift = principal_arg(x, cfg) - math.atan2(x.imag, x.real)
    return abs(shift - TWO_PI * nu(cfg)) < 1e-9


def default_params(
    z: complex,
    s: complex,
    w: complex,
    cfg: BranchConfig,
    tol: Optional[float] = None,
) -> EvalParams:
    """Default constants for the continuation formula.

    alpha = max(1, ln|z| + 1), N = max(0, ceil(1 - Re w) + 2) raised until the
    head covers every n whose argument does not follow the 2*pi*nu shift, and
    m = max(0, ceil(-Re s) + 2).

    Args:
        z, s, w: Target point
        cfg: Branch configuration
        tol: Quadrature and series tolerance (1e-12 when omitted)

    Returns:
        EvalParams for the point
    """
    z, s, w = complex(z), complex(s), complex(w)
    alpha = 1.0 if z == 0 else max(1.0, math.log(abs(z)) + 1.0)
    N = max(0, math.ceil(1.0 - w.real) + 2)
    while not head_branch_ok(w, N, cfg):
        N += 1
        if N > _MAX_HEAD:
            raise ParameterError(f"no head length makes the branch consistent at w={w}")
    m = max(0, math.ceil(-s.real) + 2)
    tol = tol if tol is not None else 1e-12
    params = EvalParams(alpha=alpha, N=N, m=m, quad_tol=tol, series_tol=tol)
    logger.debug("default params for z=%s s=%s w=%s: %s", z, s, w, params)
    return params


def validate_params(z: complex, s: complex, w: complex, p: EvalParams, cfg: BranchConfig) -> None:
    """Check the invariants of p against the target point.

    Raises:
        ParameterError: If alpha, N, m or eps is unsuitable for (z, s, w)
    """
    z, s, w = complex(z), complex(s), complex(w)
    if z != 0 and p.alpha <= math.log(abs(z)):
        raise ParameterError(f"alpha={p.alpha} must exceed ln|z|={math.log(abs(z)):.6g}")
    if p.N + w.real <= 0:
        raise ParameterError(f"N + Re(w) must be positive, got N={p.N}, w={w}")
    if not head_branch_ok(w, p.N, cfg):
        raise ParameterError(f"N={p.N} leaves terms with a shifted argument outside the head sum")
    if p.m + s.real <= 0:
        raise ParameterError(f"m + Re(s) must be positive, got m={p.m}, s={s}")
    if p.eps is not None:
        if p.eps >= p.alpha:
            raise ParameterError(f"eps={p.eps} must be smaller than alpha={p.alpha}")
        if math.cos(cfg.phi) >= 1.0 / math.sqrt(1.0 + p.eps**2):
            raise ParameterError(f"eps={p.eps} is too large for phi={cfg.phi}")
