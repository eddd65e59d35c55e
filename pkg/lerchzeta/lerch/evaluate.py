"""Top-level evaluation of Phi(z, s, w): dispatch between the series, the
special values at s = 1 - r and the continuation formula."""

import cmath
import logging
import math
from typing import List, Literal, Optional

from lerchzeta.apostol import amplification, apostol_eval
from lerchzeta.branch import classify, is_nonpositive_integer, nu
from lerchzeta.config.schemas import CUT_TOL, BranchConfig, EvalParams, EvalResult
from lerchzeta.errors import ArgumentExcluded, ConvergenceFailure, PoleAtOne
from lerchzeta.lerch.continuation import compute_H, compute_I, compute_J_over_gamma, head_sum
from lerchzeta.lerch.params import default_params, validate_params
from lerchzeta.lerch.series import phi_series
from lerchzeta.numerics import recip_gamma

logger = logging.getLogger(__name__)

Method = Literal["auto", "series", "continuation"]

_EPS = 2.220446049250313e-16
# |z| up to which the series is preferred over the continuation formula.
SERIES_RADIUS = 0.95
# Distance from z = 1 below which results carry a conditioning warning.
NEAR_ONE = 1e-3
# Quadrature passes spent on reaching the accuracy asked of Phi.
REFINE_PASSES = 3


def special_value(z: complex, r: int, w: complex) -> complex:
    """Phi(z, 1 - r, w) = -B_r(z, w) / r.

    Args:
        z: Any z; z = 1 uses the Bernoulli polynomials
        r: Positive integer
        w: Shift

    Returns:
        The special value

    Raises:
        ValueError: If r < 1
    """
    if r < 1:
        raise ValueError(f"special values exist for r >= 1, got r={r}")
    return -apostol_eval(r, z, w) / r


def _continuation(
    z: complex,
    s: complex,
    w: complex,
    cfg: BranchConfig,
    p: EvalParams,
) -> EvalResult:
    head, head_magnitude = head_sum(z, s, w, p.N, cfg)
    prefactor = z**p.N * cmath.exp(-4j * math.pi * nu(cfg) * s)
    rg = recip_gamma(s)
    warnings: List[str] = []

    j_part = compute_J_over_gamma(z, s, w, p, cfg)
    bracket = j_part
    quad_err = 0.0
    if rg != 0:
        h = compute_H(z, s, w, p, cfg)
        i = compute_I(z, s, w, p, cfg)
        weight = abs(prefactor * rg)
        previous = math.inf
        for _ in range(REFINE_PASSES):
            # absolute accuracy of H + I that gives Phi a relative accuracy of quad_tol
            estimate = head + prefactor * (j_part + rg * (h.value + i.value))
            target = p.quad_tol * max(abs(head), abs(estimate)) / weight if weight else math.inf
            current = h.abs_err_est + i.abs_err_est
            if current <= target or current > 0.5 * previous:
                break
            previous = current
            logger.debug("refining H and I to an absolute error of %.3g", target)
            try:
                h, i = (
                    compute_H(z, s, w, p, cfg, abs_tol=0.5 * target),
                    compute_I(z, s, w, p, cfg, abs_tol=0.5 * target),
                )
            except ConvergenceFailure as e:
                # keep the last pass; its estimate already reports the shortfall
                logger.debug("refinement stopped: %s", e)
                break
        bracket += rg * (h.value + i.value)
        quad_err = abs(rg) * (h.abs_err_est + i.abs_err_est)

    scale = abs(prefactor)
    error = _EPS * head_magnitude + scale * (quad_err + _EPS * (p.m + 1) * abs(j_part))
    distance = abs(z - 1.0)
    if CUT_TOL < distance < NEAR_ONE:
        amp = amplification(p.m + 1, z)
        message = f"z is within {distance:.3g} of 1; Taylor coefficients amplify rounding by {amp:.3g}"
        logger.warning(message)
        warnings.append(message)
        error += scale * _EPS * amp * abs(bracket)

    return EvalResult(
        value=head + prefactor * bracket,
        abs_err_est=error,
        method="continuation",
        domain=classify(z, s, w, cfg),
        params=p,
        warnings=warnings,
    )


def lerch_phi(
    z: complex,
    s: complex,
    w: complex,
    cfg: Optional[BranchConfig] = None,
    p: Optional[EvalParams] = None,
    method: Method = "auto",
    tol: Optional[float] = None,
) -> EvalResult:
    """Evaluate the Lerch zeta function Phi(z, s, w) under the branch cfg.

    With method "auto" a nonpositive integer s goes to special_value, a point
    with |z| <= 0.95 (and no explicit parameters) to the series, and
    everything else to the continuation formula.

    Args:
        z: First argument
        s: Exponent
        w: Shift, not a nonpositive integer
        cfg: Branch configuration; BranchConfig() when omitted
        p: Continuation parameters; validated when given, chosen by default_params otherwise
        method: "auto", "series" or "continuation"
        tol: Tolerance for the series and quadratures (1e-12 when omitted)

    Returns:
        EvalResult

    Raises:
        ArgumentExcluded: If w is a nonpositive integer
        PoleAtOne: If z = 1 and s = 1
        ParameterError: If p does not suit the point
    """
    cfg = cfg if cfg is not None else BranchConfig()
    z, s, w = complex(z), complex(s), complex(w)
    domain = classify(z, s, w, cfg)
    if domain.excluded:
        raise ArgumentExcluded(f"w={w} is a nonpositive integer")
    if domain.pole:
        raise PoleAtOne("simple pole at s=1")
    tol = tol if tol is not None else 1e-12

    if method == "auto" and is_nonpositive_integer(s):
        r = 1 - round(s.real)
        logger.debug("special value at s=%d", 1 - r)
        return EvalResult(
            value=special_value(z, r, w),
            abs_err_est=_EPS * amplification(r, z) * (1.0 + abs(w)) ** r,
            method="special_value",
            domain=domain,
        )
    if method == "series" or (method == "auto" and p is None and abs(z) <= SERIES_RADIUS):
        return phi_series(z, s, w, cfg, tol)

    if p is None:
        p = default_params(z, s, w, cfg, tol)
    else:
        validate_params(z, s, w, p, cfg)
    return _continuation(z, s, w, cfg, p)
