"""Residuals of the functional equations and differential-difference relations.

Every residual is lhs - rhs with both sides evaluated independently through
lerch_phi under the same BranchConfig.
"""

import cmath
import logging
import math
from typing import Callable, Optional, Tuple

from lerchzeta.branch import cpow, in_domain_eq, in_domain_lerch
from lerchzeta.config.schemas import BranchConfig, FEReport
from lerchzeta.identities.combinations import TWO_PI_I, lambda_minus, lambda_plus, omega, phi
from lerchzeta.lerch import lerch_phi
from lerchzeta.numerics import gamma, recip_gamma

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi
STENCIL_SERIES_TOL = 1e-14


def _point(a: complex, s: complex, w: complex) -> Tuple[complex, complex, complex]:
    return complex(a), complex(s), complex(w)


def _lerch_rhs(a: complex, s: complex, w: complex, cfg: BranchConfig, tol: Optional[float]) -> complex:
    """(Gamma(s) / (2 pi)^s) times the braces of Lerch's transformation formula."""
    first = cmath.exp(1j * math.pi * (s / 2.0 - 2.0 * a * w)) * phi(cmath.exp(-TWO_PI_I * w), s, a, cfg, tol=tol)
    second = cmath.exp(1j * math.pi * (-s / 2.0 + 2.0 * (1.0 - a) * w)) * phi(
        cmath.exp(TWO_PI_I * w), s, 1.0 - a, cfg, tol=tol
    )
    return gamma(s) / cpow(TWO_PI, s, cfg) * (first + second)


def lerch_fe_residual(
    a: complex,
    s: complex,
    w: complex,
    cfg: Optional[BranchConfig] = None,
    tol: Optional[float] = None,
) -> FEReport:
    """Lerch's transformation formula.

    lhs = Phi(e^(2 pi i a), 1 - s, w);
    rhs = Gamma(s) (2 pi)^(-s) {e^(pi i (s/2 - 2aw)) Phi(e^(-2 pi i w), s, a)
          + e^(pi i (-s/2 + 2(1-a)w)) Phi(e^(2 pi i w), s, 1 - a)}.

    Args:
        a, s, w: The point; in_domain records whether (a, w) lies in the proven domain
        cfg: Branch configuration with phi' in 2*pi*Z
        tol: Tolerance of every Phi evaluation (1e-12 when omitted)

    Returns:
        FEReport tagged "lerch"
    """
    cfg = cfg if cfg is not None else BranchConfig()
    a, s, w = _point(a, s, w)
    lhs = phi(cmath.exp(TWO_PI_I * a), 1.0 - s, w, cfg, tol=tol)
    rhs = _lerch_rhs(a, s, w, cfg, tol)
    return FEReport.build("lerch", (a, s, w), lhs, rhs, in_domain_lerch(a, w, cfg))


def apostol_fe_residual(
    a: complex,
    s: complex,
    w: complex,
    cfg: Optional[BranchConfig] = None,
    tol: Optional[float] = None,
) -> FEReport:
    """Lambda(a, 1 - s, w) against Omega(s) e^(-2 pi i a w) Lambda(-w, s, a)."""
    cfg = cfg if cfg is not None else BranchConfig()
    a, s, w = _point(a, s, w)
    lhs = lambda_plus(a, 1.0 - s, w, cfg, tol)
    rhs = omega(s, cfg) * cmath.exp(-TWO_PI_I * a * w) * lambda_plus(-w, s, a, cfg, tol)
    return FEReport.build("apostol", (a, s, w), lhs, rhs, in_domain_eq(a, w, cfg))


def apostol_minus_fe_residual(
    a: complex,
    s: complex,
    w: complex,
    cfg: Optional[BranchConfig] = None,
    tol: Optional[float] = None,
) -> FEReport:
    """Lambda^-(a, 1 - s, w) against 2i (2 pi)^(-s) sin(pi s/2) Gamma(s) e^(-2 pi i a w) Lambda^-(-w, s, a)."""
    cfg = cfg if cfg is not None else BranchConfig()
    a, s, w = _point(a, s, w)
    lhs = lambda_minus(a, 1.0 - s, w, cfg, tol)
    factor = 2j * cpow(TWO_PI, -s, cfg) * cmath.sin(math.pi * s / 2.0) * gamma(s)
    rhs = factor * cmath.exp(-TWO_PI_I * a * w) * lambda_minus(-w, s, a, cfg, tol)
    return FEReport.build("apostol_minus", (a, s, w), lhs, rhs, in_domain_eq(a, w, cfg))


def lerch_pair_residual(
    a: complex,
    s: complex,
    w: complex,
    cfg: Optional[BranchConfig] = None,
    tol: Optional[float] = None,
) -> FEReport:
    """Apostol's equation rebuilt from two instances of Lerch's formula.

    Substituting Lerch's formula at (a, s, w) and at (1 - a, s, 1 - w) into
    Lambda(a, 1 - s, w) gives
    lhs = (2 pi)^s / Gamma(s) e^(2 pi i a w) [R(a, s, w) + e^(-2 pi i a) R(1 - a, s, 1 - w)]
    with R the right side of Lerch's formula, and
    rhs = 2 cos(pi s / 2) Lambda(-w, s, a).
    """
    cfg = cfg if cfg is not None else BranchConfig()
    a, s, w = _point(a, s, w)
    combined = _lerch_rhs(a, s, w, cfg, tol) + cmath.exp(-TWO_PI_I * a) * _lerch_rhs(
        1.0 - a, s, 1.0 - w, cfg, tol
    )
    lhs = cpow(TWO_PI, s, cfg) * recip_gamma(s) * cmath.exp(TWO_PI_I * a * w) * combined
    rhs = 2.0 * cmath.cos(math.pi * s / 2.0) * lambda_plus(-w, s, a, cfg, tol)
    return FEReport.build("lerch_pair", (a, s, w), lhs, rhs, in_domain_eq(a, w, cfg))


_Args = Tuple[complex, complex, complex]


def _diff_diff_sides(
    k: int, s: complex, w: complex
) -> Tuple[Callable[[complex], _Args], Callable[[complex, Callable[..., complex]], complex]]:
    if k == 1:
        return (
            lambda a: (cmath.exp(TWO_PI_I * a), 1.0 - s, w),
            lambda a, ev: TWO_PI_I
            * (ev(cmath.exp(TWO_PI_I * a), -s, w) - w * ev(cmath.exp(TWO_PI_I * a), 1.0 - s, w)),
        )
    if k == 2:
        return (
            lambda a: (cmath.exp(-TWO_PI_I * a), 1.0 - s, 1.0 - w),
            lambda a, ev: -TWO_PI_I
            * (
                ev(cmath.exp(-TWO_PI_I * a), -s, 1.0 - w)
                + (w - 1.0) * ev(cmath.exp(-TWO_PI_I * a), 1.0 - s, 1.0 - w)
            ),
        )
    if k == 3:
        return (
            lambda a: (cmath.exp(-TWO_PI_I * w), s, a),
            lambda a, ev: -s * ev(cmath.exp(-TWO_PI_I * w), s + 1.0, a),
        )
    if k == 4:
        return (
            lambda a: (cmath.exp(TWO_PI_I * w), s, 1.0 - a),
            lambda a, ev: s * ev(cmath.exp(TWO_PI_I * w), s + 1.0, 1.0 - a),
        )
    raise ValueError(f"k must be 1, 2, 3 or 4, got {k}")


def diff_diff_residual(
    k: int,
    a: complex,
    s: complex,
    w: complex,
    cfg: Optional[BranchConfig] = None,
    h: float = 1e-4,
    tol: Optional[float] = None,
) -> FEReport:
    """Central difference in a of F_k against the k-th differential-difference relation.

    k=1: d/da Phi(e^(2 pi i a), 1-s, w) = 2 pi i {Phi(e^(2 pi i a), -s, w) - w Phi(e^(2 pi i a), 1-s, w)}
    k=2: d/da Phi(e^(-2 pi i a), 1-s, 1-w) = -2 pi i {Phi(e^(-2 pi i a), -s, 1-w) + (w-1) Phi(e^(-2 pi i a), 1-s, 1-w)}
    k=3: d/da Phi(e^(-2 pi i w), s, a) = -s Phi(e^(-2 pi i w), s+1, a)
    k=4: d/da Phi(e^(2 pi i w), s, 1-a) = s Phi(e^(2 pi i w), s+1, 1-a)

    The stencil points reuse the evaluation route and parameters of the
    centre point, so the difference quotient sees one smooth function.

    Args:
        k: Which relation, 1..4
        a, s, w: The point
        cfg: Branch configuration
        h: Step of the central difference
        tol: Tolerance of the Phi evaluations; series stencils are always summed to 1e-14

    Returns:
        FEReport tagged "diff_diff_k"; the residual is O(h^2)

    Raises:
        ValueError: If k is not in 1..4
    """
    cfg = cfg if cfg is not None else BranchConfig()
    a, s, w = _point(a, s, w)
    arguments, right = _diff_diff_sides(k, s, w)
    centre = lerch_phi(*arguments(a), cfg, tol=tol)
    method = centre.method if centre.method in ("series", "continuation") else "auto"
    # Series stencils are summed below the quadrature error floor.
    stencil_tol = STENCIL_SERIES_TOL if method == "series" else tol

    def stencil(z: complex, s_: complex, w_: complex) -> complex:
        return lerch_phi(z, s_, w_, cfg, p=centre.params, method=method, tol=stencil_tol).value  # type: ignore[arg-type]

    lhs = (stencil(*arguments(a + h)) - stencil(*arguments(a - h))) / (2.0 * h)
    rhs = right(a, lambda z, s_, w_: phi(z, s_, w_, cfg, tol=tol))
    logger.debug("diff-diff k=%d at a=%s: |lhs - rhs| = %.3g", k, a, abs(lhs - rhs))
    equation = f"diff_diff_{k}"
    return FEReport.build(equation, (a, s, w), lhs, rhs, in_domain_eq(a, w, cfg))  # type: ignore[arg-type]
