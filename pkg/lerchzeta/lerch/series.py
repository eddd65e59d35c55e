"""Direct summation of the defining series sum z^n (n + w)^(-s)."""

import logging
import math

from lerchzeta.branch import classify, cpow, is_excluded_w
from lerchzeta.branch.principal import TWO_PI
from lerchzeta.config import settings
from lerchzeta.config.schemas import BranchConfig, EvalResult
from lerchzeta.errors import ArgumentExcluded, ConvergenceFailure, OutsideSeriesRegion

logger = logging.getLogger(__name__)

_EPS = 2.220446049250313e-16


def in_series_region(z: complex, s: complex) -> bool:
    """|z| < 1, or |z| = 1 with Re(s) > 1."""
    r = abs(complex(z))
    return r < 1.0 or (abs(r - 1.0) <= 1e-15 and complex(s).real > 1.0)


def _tail_bound(n: int, z_abs: float, s: complex, w: complex, cfg: BranchConfig) -> float:
    """Bound on sum_{k >= n} |z|^k |(k+w)^(-s)|, valid when n + Re(w) > 0."""
    # |(k+w)^(-s)| = |k+w|^(-Re s) e^(Im(s) arg(k+w)) with arg in [phi, phi + 2*pi)
    spread = math.exp(max(s.imag * cfg.phi, s.imag * (cfg.phi + TWO_PI)))
    sigma = s.real
    if z_abs < 1.0:
        if sigma >= 0:
            return spread * (n + w.real) ** (-sigma) * z_abs**n / (1.0 - z_abs)
        base = n + abs(w)
        ratio = z_abs * ((base + 1.0) / base) ** (-sigma)
        if ratio >= 1.0:
            return math.inf
        return spread * base ** (-sigma) * z_abs**n / (1.0 - ratio)
    head = (n + w.real) ** (-sigma)
    return spread * (head + (n + w.real) ** (1.0 - sigma) / (sigma - 1.0))


def phi_series(z: complex, s: complex, w: complex, cfg: BranchConfig, tol: float = 1e-12) -> EvalResult:
    """Sum the defining series until the tail bound drops below tol times the partial sum.

    Args:
        z: |z| < 1, or |z| = 1 with Re(s) > 1
        s: Exponent
        w: Shift, not a nonpositive integer
        cfg: Branch configuration for the powers (n + w)^(-s)
        tol: Relative tolerance

    Returns:
        EvalResult with method "series"

    Raises:
        ArgumentExcluded: If w is a nonpositive integer
        OutsideSeriesRegion: If (z, s) lies outside the region of absolute convergence
        ConvergenceFailure: If settings.max_series_terms terms do not suffice
    """
    z, s, w = complex(z), complex(s), complex(w)
    if is_excluded_w(w):
        raise ArgumentExcluded(f"w={w} is a nonpositive integer")
    if not in_series_region(z, s):
        raise OutsideSeriesRegion(f"the series diverges at |z|={abs(z):.6g}, Re(s)={s.real:.6g}")
    z_abs = abs(z)
    total = 0j
    magnitude = 0.0
    zn = 1.0 + 0.0j
    bound = math.inf
    for n in range(settings.max_series_terms):
        term = zn * cpow(w + n, -s, cfg)
        total += term
        magnitude += abs(term)
        zn *= z
        if n + 1 + w.real > 0:
            bound = _tail_bound(n + 1, z_abs, s, w, cfg)
            if bound <= tol * max(abs(total), 1e-300) or zn == 0:
                if zn == 0:
                    bound = 0.0
                logger.debug("series converged after %d terms, tail bound %.3g", n + 1, bound)
                return EvalResult(
                    value=total,
                    abs_err_est=bound + _EPS * magnitude,
                    method="series",
                    domain=classify(z, s, w, cfg),
                )
    raise ConvergenceFailure(
        f"series tail bound {bound:.3g} above tolerance after {settings.max_series_terms} terms"
    )
