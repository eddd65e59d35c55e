"""Adaptive Gauss-Kronrod (7, 15) quadrature along complex polygonal paths.

Tolerances are relative to the L1 size of the integrand along the path: a
result is accepted once the summed error estimate is at most tol * integral of |f|.
An optional absolute tolerance tightens this for integrals that cancel far
below their L1 size, down to the rounding floor ROUNDING_FLOOR * integral of |f|.
"""

import heapq
import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

import numpy as np

from lerchzeta.config import settings
from lerchzeta.config.schemas import QuadResult
from lerchzeta.errors import ArgumentExcluded, ConvergenceFailure

logger = logging.getLogger(__name__)

Integrand = Callable[[complex], complex]

_XGK = np.array(
    [
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144845693013,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.000000000000000000000000000000000,
    ]
)
_WGK = np.array(
    [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
    ]
)
_WG = np.array(
    [
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327,
    ]
)

# Full 15-point rule on [-1, 1]; Gauss nodes sit at the odd indices.
NODES = np.concatenate([-_XGK[:7], _XGK[7::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:7], _WGK[7::-1]])
GAUSS_WEIGHTS = np.zeros(15)
GAUSS_WEIGHTS[[1, 3, 5]] = _WG[:3]
GAUSS_WEIGHTS[7] = _WG[3]
GAUSS_WEIGHTS[[13, 11, 9]] = _WG[:3]

_EPS = np.finfo(float).eps
# Smallest accepted error relative to the L1 size; the per-segment floor is half of it.
ROUNDING_FLOOR = 100.0 * _EPS


@dataclass
class _Segment:
    a: complex
    b: complex
    value: complex
    error: float
    l1: float


def _gk15(f: Integrand, a: complex, b: complex) -> _Segment:
    half = 0.5 * (b - a)
    center = 0.5 * (a + b)
    points = center + half * NODES
    values = np.array([f(complex(t)) for t in points], dtype=complex)
    if not np.all(np.isfinite(values)):
        raise ConvergenceFailure(f"integrand is not finite on the segment [{a}, {b}]")
    scale = abs(half)
    kronrod = complex(np.dot(KRONROD_WEIGHTS, values)) * half
    gauss = complex(np.dot(GAUSS_WEIGHTS, values)) * half
    l1 = float(np.dot(KRONROD_WEIGHTS, np.abs(values))) * scale
    mean = kronrod / half if half else 0j
    resasc = float(np.dot(KRONROD_WEIGHTS, np.abs(values - mean))) * scale
    error = abs(kronrod - gauss)
    if resasc and error:
        error = resasc * min(1.0, (200.0 * error / resasc) ** 1.5)
    error = max(error, 0.5 * ROUNDING_FLOOR * l1)
    return _Segment(a, b, kronrod, error, l1)


def integrate_polyline(
    f: Integrand,
    vertices: Sequence[complex],
    tol: float,
    max_evaluations: Optional[int] = None,
    abs_tol: Optional[float] = None,
) -> QuadResult:
    """Integrate f along the polygonal path through vertices.

    Global adaptive bisection: the segment with the largest error estimate is
    split until the total estimate meets the tolerance, so refinement gathers
    at integrable endpoint singularities such as t^beta, beta > -1, at the
    first vertex. f is never evaluated at a vertex.

    Args:
        f: Integrand, finite on the open path
        vertices: At least two complex vertices
        tol: Relative tolerance with respect to the L1 norm of f on the path
        max_evaluations: Evaluation budget; settings.max_quad_evaluations when omitted
        abs_tol: Absolute bound the error estimate must meet as well, clipped
            from below at ROUNDING_FLOOR times the L1 norm

    Returns:
        QuadResult with the value, the absolute error estimate and the evaluation count

    Raises:
        ValueError: If fewer than two vertices are given
        ConvergenceFailure: If the budget runs out before the tolerance is met
    """
    if len(vertices) < 2:
        raise ValueError("a path needs at least two vertices")
    budget = max_evaluations or settings.max_quad_evaluations

    heap: List[tuple] = []
    counter = 0
    evaluations = 0
    for a, b in zip(vertices[:-1], vertices[1:]):
        a, b = complex(a), complex(b)
        if a == b:
            continue
        seg = _gk15(f, a, b)
        evaluations += 15
        heapq.heappush(heap, (-seg.error, counter, seg))
        counter += 1

    def totals() -> tuple:
        segs = [item[2] for item in heap]
        return (
            sum((s.value for s in segs), 0j),
            math.fsum(s.error for s in segs),
            math.fsum(s.l1 for s in segs),
        )

    def target(l1: float) -> float:
        if abs_tol is None:
            return tol * l1
        return max(min(tol * l1, abs_tol), ROUNDING_FLOOR * l1)

    value, error, l1 = totals()
    while error > target(l1):
        if evaluations + 30 > budget:
            raise ConvergenceFailure(
                f"quadrature error {error:.3g} above {target(l1):.3g} after {evaluations} evaluations"
            )
        _, _, worst = heapq.heappop(heap)
        mid = 0.5 * (worst.a + worst.b)
        if mid in (worst.a, worst.b):
            heapq.heappush(heap, (-worst.error, counter, worst))
            raise ConvergenceFailure("segment cannot be bisected further in double precision")
        value -= worst.value
        error -= worst.error
        l1 -= worst.l1
        for a, b in ((worst.a, mid), (mid, worst.b)):
            seg = _gk15(f, a, b)
            heapq.heappush(heap, (-seg.error, counter, seg))
            counter += 1
            value += seg.value
            error += seg.error
            l1 += seg.l1
        evaluations += 30
        if counter % 64 == 0:
            value, error, l1 = totals()

    value, error, l1 = totals()
    logger.debug("polyline quadrature: %d segments, %d evaluations", len(heap), evaluations)
    return QuadResult(value=value, abs_err_est=error, evaluations=evaluations)


def tail_cutoff(alpha: float, decay_rate: float, tol: float, growth: float = 0.0) -> float:
    """Truncation point T beyond which e^(-d (t-alpha)) (t/alpha)^c drops below tol/10.

    Two fixed-point steps of T = alpha + (ln(10/tol) + (c+2) ln(T/alpha))/d from
    T0 = alpha + 40/d.
    """
    cutoff = alpha + 40.0 / decay_rate
    for _ in range(2):
        cutoff = alpha + (
            math.log(10.0 / tol) + (abs(growth) + 2.0) * math.log(cutoff / alpha)
        ) / decay_rate
    return cutoff


def _remainder(g: Integrand, cutoff: float, decay_rate: float, growth: float) -> float:
    # |g(T)| * integral of e^(-(d - c/T)(t - T)) over [T, inf)
    rate = decay_rate - max(growth, 0.0) / cutoff
    return abs(g(complex(cutoff))) / rate if rate > 0 else abs(g(complex(cutoff))) * cutoff


def integrate_tail(
    g: Integrand,
    alpha: float,
    decay_rate: float,
    tol: float,
    growth: float = 0.0,
    max_evaluations: Optional[int] = None,
    abs_tol: Optional[float] = None,
) -> QuadResult:
    """Integrate g over [alpha, infinity) for |g(t)| <= C t^c e^(-decay_rate t).

    Args:
        g: Integrand on the real half line
        alpha: Left endpoint, alpha >= 1
        decay_rate: Exponential decay rate d > 0
        tol: Relative tolerance
        growth: Polynomial growth exponent c of the majorant
        max_evaluations: Evaluation budget
        abs_tol: Absolute bound shared by the quadrature and the truncation;
            T moves right until the truncation bound is below abs_tol / 2

    Returns:
        QuadResult over [alpha, T] with the truncation estimate added to the error

    Raises:
        ArgumentExcluded: If decay_rate <= 0
        ConvergenceFailure: If the tolerance cannot be met
    """
    if decay_rate <= 0:
        raise ArgumentExcluded(f"the tail integral needs a positive decay rate, got {decay_rate}")
    cutoff = tail_cutoff(alpha, decay_rate, tol, growth)
    remainder = _remainder(g, cutoff, decay_rate, growth)
    if abs_tol is not None:
        for _ in range(8):
            if remainder <= 0.5 * abs_tol:
                break
            cutoff += (math.log(2.0 * remainder / max(abs_tol, _EPS * remainder)) + 1.0) / decay_rate
            remainder = _remainder(g, cutoff, decay_rate, growth)
    head = integrate_polyline(
        g,
        [complex(alpha), complex(cutoff)],
        tol,
        max_evaluations,
        abs_tol=None if abs_tol is None else 0.5 * abs_tol,
    )
    logger.debug("tail integral cut at T=%.4g, remainder bound %.3g", cutoff, remainder)
    return QuadResult(
        value=head.value,
        abs_err_est=head.abs_err_est + remainder,
        evaluations=head.evaluations + 1,
    )
