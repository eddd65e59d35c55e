"""The pieces of the continuation formula.

    Phi(z, s, w) = sum_{n<N} z^n (n+w)^(-s)
                   + z^N e^(-4*pi*i*nu*s) / Gamma(s) * (H + I + J)

with
    H = int_[alpha, inf) e^(-t(N+w)) / (1 - e^(-t) z) t^(s-1) dt
    I = int_L (phi_N(t) - phi_{N,m}(t)) t^(s-2) dt,   L from 0 to alpha
    J = sum_{r<=m} B_r(z, N+w)/r! (-1)^r alpha^(s+r-1)/(s+r-1)

where phi_N(t) = t e^(-t(N+w)) / (1 - e^(-t) z) and phi_{N,m} is its Taylor
polynomial of order m at t = 0. Every power of t and alpha uses the branch
of the BranchConfig, so arg t = 2*pi*nu on the positive real axis.
"""

import cmath
import logging
import math
from math import factorial
from typing import List, Optional, Tuple

import numpy as np

from lerchzeta.apostol import amplification, apostol_eval
from lerchzeta.branch import arg_on_cut_complement, cpow, nu, on_cut_z
from lerchzeta.branch.principal import TWO_PI
from lerchzeta.config.schemas import CUT_TOL, BranchConfig, EvalParams, QuadResult
from lerchzeta.errors import (
    ArgumentExcluded,
    IllConditioned,
    ParameterError,
    PoleAtOne,
    PoleOnPath,
)
from lerchzeta.lerch.params import validate_params
from lerchzeta.lerch.series import phi_series
from lerchzeta.numerics import gamma, integrate_polyline, integrate_tail, q_factor

logger = logging.getLogger(__name__)

POLE_GUARD = 1e-13
PATH_GUARD = 1e-10
# Extra Taylor terms used for the remainder series near t = 0.
REMAINDER_TERMS = 40


def _is_one(z: complex) -> bool:
    return abs(complex(z) - 1.0) <= CUT_TOL


def _expm1(t: complex) -> complex:
    """e^t - 1 without cancellation for small |t|."""
    x, y = t.real, t.imag
    return complex(math.expm1(x) * math.cos(y) - 2.0 * math.sin(0.5 * y) ** 2, math.exp(x) * math.sin(y))


def phi_integrand(z: complex, w: complex, t: complex, N: int) -> complex:
    """phi_N(z, w, t) = t e^(-t(N+w)) / (1 - e^(-t) z).

    At t = 0 this is 0 for z != 1 and the limit 1 for z = 1.

    Raises:
        PoleOnPath: If e^t = z to within 1e-13
    """
    z, w, t = complex(z), complex(w), complex(t)
    if t == 0:
        return 1.0 + 0j if _is_one(z) else 0j
    shift = cmath.exp(-t * (N + w))
    one_minus = -_expm1(-t)  # 1 - e^(-t)
    if _is_one(z):
        if abs(t) < 1e-5:
            ratio = 1.0 + t / 2.0 + t * t / 12.0
        else:
            if abs(one_minus) < POLE_GUARD:
                raise PoleOnPath(f"t={t} is a pole of the integrand for z=1")
            ratio = t / one_minus
        return ratio * shift
    denom = (1.0 - z) + z * one_minus
    if abs(denom) < POLE_GUARD:
        raise PoleOnPath(f"t={t} is a pole of the integrand for z={z}")
    return t * shift / denom


def taylor_polynomial(z: complex, w: complex, N: int, m: int) -> List[complex]:
    """Coefficients B_r(z, N+w) (-1)^r / r! of phi_{N,m}, r = 0..m."""
    return [apostol_eval(r, z, N + w) * (-1) ** r / factorial(r) for r in range(m + 1)]


def phi_taylor(z: complex, w: complex, t: complex, N: int, m: int) -> complex:
    """phi_{N,m}(t) = sum_{r<=m} B_r(z, N+w)/r! (-1)^r t^r."""
    total = 0j
    for c in reversed(taylor_polynomial(z, w, N, m)):
        total = total * t + c
    return total


def taylor_coefficients(z: complex, w: complex, N: int, order: int) -> np.ndarray:
    """Taylor coefficients of phi_N at t = 0 up to t^order, by power-series division.

    Args:
        z: Lerch argument
        w: Shift
        N: Head length
        order: Highest power of t

    Returns:
        Complex array of length order + 1
    """
    z = complex(z)
    W = complex(w) + N
    k = np.arange(order + 1)
    fact = np.array([float(factorial(int(j))) for j in k])
    sign = np.where(k % 2 == 0, 1.0, -1.0)
    if _is_one(z):
        # e^(-tW) / ((1 - e^(-t))/t)
        num = np.array([(-W) ** int(j) for j in k], dtype=complex) / fact
        den = (sign / np.array([float(factorial(int(j) + 1)) for j in k])).astype(complex)
    else:
        num = np.zeros(order + 1, dtype=complex)
        num[1:] = np.array([(-W) ** int(j - 1) for j in k[1:]], dtype=complex) / fact[:-1]
        den = (-z * sign / fact).astype(complex)
        den[0] = 1.0 - z
    q = np.zeros(order + 1, dtype=complex)
    for n in range(order + 1):
        acc = num[n] - np.dot(den[1 : n + 1], q[n - 1 :: -1][:n]) if n else num[0]
        q[n] = acc / den[0]
    return q


def head_sum(z: complex, s: complex, w: complex, N: int, cfg: BranchConfig) -> Tuple[complex, float]:
    """sum_{n<N} z^n (n+w)^(-s) term by term with cpow, and the sum of |terms|."""
    total = 0j
    magnitude = 0.0
    zn = 1.0 + 0j
    for n in range(N):
        term = zn * cpow(w + n, -s, cfg)
        total += term
        magnitude += abs(term)
        zn *= z
    return total, magnitude


def compute_H(
    z: complex,
    s: complex,
    w: complex,
    p: EvalParams,
    cfg: BranchConfig,
    abs_tol: Optional[float] = None,
) -> QuadResult:
    """Tail integral H over [alpha, infinity); abs_tol tightens p.quad_tol when given."""
    z, s, w = complex(z), complex(s), complex(w)
    W = w + p.N

    def integrand(t: complex) -> complex:
        return cmath.exp(-t * W) / (1.0 - cmath.exp(-t) * z) * cpow(t, s - 1.0, cfg)

    return integrate_tail(integrand, p.alpha, W.real, p.quad_tol, growth=s.real - 1.0, abs_tol=abs_tol)


def compute_J(z: complex, s: complex, w: complex, p: EvalParams, cfg: BranchConfig) -> complex:
    """Closed-form sum J; the terms with s = 1 - r and B_r != 0 are poles.

    Raises:
        PoleAtOne: For the r = 0 term at z = 1, s = 1
        ArgumentExcluded: For s = 1 - r with r >= 1; use compute_J_over_gamma there
    """
    s = complex(s)
    total = 0j
    for r, c in enumerate(taylor_polynomial(z, w, p.N, p.m)):
        if c == 0:
            continue
        exponent = s + r - 1.0
        if abs(exponent) <= CUT_TOL:
            if r == 0:
                raise PoleAtOne("simple pole at s=1")
            raise ArgumentExcluded(f"J has a pole at s={s}; combine it with 1/Gamma(s)")
        total += c * cpow(p.alpha, exponent, cfg) / exponent
    return total


def compute_J_over_gamma(z: complex, s: complex, w: complex, p: EvalParams, cfg: BranchConfig) -> complex:
    """J / Gamma(s), finite at every s = 1 - r with r >= 1."""
    s = complex(s)
    total = 0j
    for r, c in enumerate(taylor_polynomial(z, w, p.N, p.m)):
        if c == 0:
            continue
        q = q_factor(r, s)
        if q == 0:
            continue
        total += c * cpow(p.alpha, s + r - 1.0, cfg) * q
    return total


def nearest_pole(z: complex) -> complex:
    """The pole Log(z) of phi_N closest to the real segment [0, alpha]."""
    z = complex(z)
    return complex(math.log(abs(z)), cmath.phase(z))


def _distance_to_segment(point: complex, a: complex, b: complex) -> float:
    d = b - a
    if d == 0:
        return abs(point - a)
    u = ((point - a) * d.conjugate()).real / abs(d) ** 2
    u = min(1.0, max(0.0, u))
    return abs(point - (a + u * d))


def _segment_crosses_ray(a: complex, b: complex, direction: complex) -> bool:
    """True iff the segment [a, b] meets the ray r*direction, r >= 0."""
    d = b - a
    det = d.real * (-direction.imag) - d.imag * (-direction.real)
    if abs(det) < 1e-15:
        cross = a.real * direction.imag - a.imag * direction.real
        if abs(cross) > 1e-15:
            return False
        return (a * direction.conjugate()).real >= 0 or (b * direction.conjugate()).real >= 0
    # a + u d = r direction
    rhs = -a
    u = (rhs.real * (-direction.imag) - rhs.imag * (-direction.real)) / det
    r = (d.real * rhs.imag - d.imag * rhs.real) / det
    return 0.0 <= u <= 1.0 and r >= 0.0


def path_runs_above(z: complex, pole: complex, cfg: BranchConfig) -> bool:
    """Which side of the pole Log(z) the path [0, alpha] must pass on.

    The value off the cut is the continuation from |z| < 1 avoiding l'_phi'.
    The straight segment is analytic off z in [1, e^alpha); inside the wedge
    between [1, inf) and l'_phi' the continuation has crossed that segment,
    so the path passes on the far side of the pole. On l'_phi' itself the
    value is the limit from the clockwise side of the cut, which for
    phi' = 0 is the lift above the real axis.
    """
    if on_cut_z(z, cfg):
        return True
    theta = arg_on_cut_complement(z, cfg)
    real_ray = TWO_PI * (math.floor(cfg.phi_prime / TWO_PI) + 1)
    opening = real_ray - cfg.phi_prime
    if abs(theta - real_ray) <= CUT_TOL or abs(pole.imag) <= CUT_TOL and pole.real > 0:
        theta = real_ray
    if opening > math.pi:
        # cut counterclockwise of [1, inf): wedge at theta >= real_ray
        if theta >= real_ray:
            return True
    elif theta <= real_ray:
        # cut clockwise of [1, inf): wedge at theta <= real_ray
        return False
    return pole.imag < 0


def _auto_eps(p: EvalParams, pole: complex, cfg: BranchConfig) -> float:
    eps = min(0.5, p.alpha / 4.0)
    if pole.real > 0:
        eps = min(eps, pole.real / 2.0)
    while math.cos(cfg.phi) >= 1.0 / math.sqrt(1.0 + eps * eps):
        eps /= 2.0
    return eps


def choose_contour(z: complex, p: EvalParams, cfg: BranchConfig, m: int = 0) -> List[complex]:
    """Integration path from 0 to alpha for the I-integral.

    Returns [0, alpha] unless the pole Log(z) lies near the segment or on the
    wrong side of it; then the lifted path [0, eps, eps + ih, alpha + ih, alpha]
    with h = Im(pole) + eps^2 above the pole (or Im(pole) - eps^2 below it).
    For a pole on the real axis this is the path through
    0, eps, eps(1 + i*eps), alpha + i*eps^2, alpha.

    Args:
        z: Lerch argument with |z| < e^alpha
        p: Parameters; p.eps fixes the lift when given
        cfg: Branch configuration
        m: Taylor order, used only for the amplification estimate

    Returns:
        The path vertices

    Raises:
        IllConditioned: If the pole sits too close to t = 0 or a lift would cross the t-plane cut
        ParameterError: If the given eps is too large for this pole
        PoleOnPath: If the path would pass within 1e-10 of a pole
    """
    z = complex(z)
    straight = [0j, complex(p.alpha)]
    if z == 0 or _is_one(z):
        return straight
    pole = nearest_pole(z)
    above = path_runs_above(z, pole, cfg)
    eps = p.eps if p.eps is not None else _auto_eps(p, pole, cfg)
    lift = eps * eps
    need_lift = 0.0 < pole.real < p.alpha and (
        (above and pole.imag > -lift) or (not above and pole.imag < lift)
    )
    if not need_lift:
        vertices = straight
    else:
        if pole.real < 1e-6 * p.alpha:
            raise IllConditioned(
                f"pole of the integrand at t={pole:.3g} is too close to t=0",
                amplification=amplification(m + 1, z),
            )
        if eps >= pole.real:
            raise ParameterError(f"eps={eps} must be smaller than Re(log z)={pole.real:.6g}")
        height = max(pole.imag, 0.0) + lift if above else min(pole.imag, 0.0) - lift
        vertices = [0j, complex(eps), complex(eps, height), complex(p.alpha, height), complex(p.alpha)]
        cut_direction = cmath.exp(1j * cfg.phi)
        for a, b in zip(vertices[1:-1], vertices[2:]):
            if _segment_crosses_ray(a, b, cut_direction):
                raise IllConditioned("the lifted path would cross the cut of t^(s-2)")
        logger.debug("lifted contour for z=%s: eps=%.3g, height=%.3g", z, eps, height)
    for k in (-1, 0, 1):
        candidate = pole + 2j * math.pi * k
        for a, b in zip(vertices[:-1], vertices[1:]):
            if _distance_to_segment(candidate, a, b) < PATH_GUARD:
                raise PoleOnPath(f"the path passes through the pole t={candidate}")
    return vertices


def _convergence_radius(z: complex) -> float:
    if z == 0:
        return math.inf
    if _is_one(z):
        return TWO_PI
    pole = nearest_pole(z)
    return min(abs(pole + 2j * math.pi * k) for k in (-1, 0, 1))


def _i_integrand(z: complex, s: complex, w: complex, p: EvalParams, cfg: BranchConfig):
    """The I-integrand, using the Taylor remainder series near t = 0."""
    poly = taylor_polynomial(z, w, p.N, p.m)
    tail = taylor_coefficients(z, w, p.N, p.m + 1 + REMAINDER_TERMS)[p.m + 1 :][::-1]
    switch = min(_convergence_radius(z) / 4.0, 1.0 / (1.0 + abs(complex(w) + p.N)), p.alpha / 2.0)
    head_exponent = s + p.m - 1.0

    def integrand(t: complex) -> complex:
        if abs(t) < switch:
            rem = 0j
            for c in tail:
                rem = rem * t + c
            return complex(rem) * cpow(t, head_exponent, cfg)
        taylor = 0j
        for c in reversed(poly):
            taylor = taylor * t + c
        return (phi_integrand(z, w, t, p.N) - taylor) * cpow(t, s - 2.0, cfg)

    return integrand


def compute_I(
    z: complex,
    s: complex,
    w: complex,
    p: EvalParams,
    cfg: BranchConfig,
    abs_tol: Optional[float] = None,
) -> QuadResult:
    """Taylor-subtracted integral over the path from choose_contour.

    For z on l'_phi' (other than z = 1) the lifted path is evaluated at eps
    and eps/2 and extrapolated to eps -> 0 as 2 I(eps/2) - I(eps); the
    spread |I(eps) - I(eps/2)| is recorded as the extrapolation error.
    """
    z, s, w = complex(z), complex(s), complex(w)
    vertices = choose_contour(z, p, cfg, p.m)
    integrand = _i_integrand(z, s, w, p, cfg)
    extrapolate = len(vertices) == 5 and on_cut_z(z, cfg)
    if extrapolate and abs_tol is not None:
        abs_tol /= 4.0
    result = integrate_polyline(integrand, vertices, p.quad_tol, abs_tol=abs_tol)
    if extrapolate:
        eps = vertices[1].real
        halved = p.model_copy(update={"eps": eps / 2.0})
        check = integrate_polyline(integrand, choose_contour(z, halved, cfg, p.m), p.quad_tol, abs_tol=abs_tol)
        spread = abs(check.value - result.value)
        logger.debug("on-cut extrapolation: |I(eps) - I(eps/2)| = %.3g", spread)
        result = QuadResult(
            value=2.0 * check.value - result.value,
            abs_err_est=2.0 * check.abs_err_est + result.abs_err_est + spread,
            evaluations=result.evaluations + check.evaluations,
        )
    return result


def decomposition(
    z: complex,
    s: complex,
    w: complex,
    p: EvalParams,
    cfg: BranchConfig,
    phi_value: Optional[complex] = None,
) -> Tuple[complex, complex]:
    """Both sides of e^(4*pi*i*nu*s) Gamma(s) (Phi - head) / z^N = H + I + J.

    Args:
        z, s, w: Point with z != 0
        p: Parameters
        cfg: Branch configuration
        phi_value: Phi(z, s, w) from an independent route; summed from the series when omitted

    Returns:
        (left side, H + I + J)

    Raises:
        ArgumentExcluded: If z = 0
        ParameterError: If p does not suit the point
    """
    z, s, w = complex(z), complex(s), complex(w)
    if z == 0:
        raise ArgumentExcluded("the decomposition divides by z^N")
    validate_params(z, s, w, p, cfg)
    if phi_value is None:
        phi_value = phi_series(z, s, w, cfg, p.series_tol).value
    head, _ = head_sum(z, s, w, p.N, cfg)
    lhs = cmath.exp(4j * math.pi * nu(cfg) * s) * gamma(s) * (phi_value - head) / z**p.N
    rhs = compute_H(z, s, w, p, cfg).value + compute_I(z, s, w, p, cfg).value + compute_J(z, s, w, p, cfg)
    return lhs, rhs
