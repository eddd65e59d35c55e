"""Numeric evaluation of B_r(z, w) and the exact shift identities."""

import logging
from fractions import Fraction
from typing import Optional

from lerchzeta.apostol.oracles import bernoulli_poly
from lerchzeta.apostol.rational import Rational, apostol_exact
from lerchzeta.config.schemas import CUT_TOL
from lerchzeta.errors import IllConditioned

logger = logging.getLogger(__name__)

# Below this distance from z = 1 floating-point evaluation loses accuracy noticeably.
AMPLIFICATION_RADIUS = 0.1


def apostol_eval(r: int, z: complex, w: complex, max_amplification: Optional[float] = None) -> complex:
    """B_r(z, w) in floating point.

    Switches to the Bernoulli polynomial when z = 1 within CUT_TOL, where
    B_0 = 1 rather than 0.

    Args:
        r: Nonnegative order
        z: First argument
        w: Second argument
        max_amplification: Largest accepted rounding amplification |z-1|^-r; unchecked when omitted

    Returns:
        The numeric value of B_r(z, w)

    Raises:
        IllConditioned: If amplification(r, z) exceeds max_amplification; the
            exception carries the estimate
    """
    z = complex(z)
    if abs(z - 1.0) <= CUT_TOL:
        return bernoulli_poly(r, w)
    if abs(z - 1.0) < AMPLIFICATION_RADIUS:
        amp = amplification(r, z)
        logger.debug("B_%d evaluated at |z-1| = %.3g, amplification %.3g", r, abs(z - 1.0), amp)
        if max_amplification is not None and amp > max_amplification:
            raise IllConditioned(
                f"B_{r} at |z-1| = {abs(z - 1.0):.3g} amplifies rounding by {amp:.3g}; use exact inputs",
                amplification=amp,
            )
    return apostol_exact(r).evaluate(z, w)


def amplification(r: int, z: complex) -> float:
    """Rounding-error amplification max(1, |z-1|^-r) of apostol_eval."""
    distance = abs(complex(z) - 1.0)
    if distance <= CUT_TOL:
        return 1.0
    try:
        return max(1.0, distance ** (-r))
    except OverflowError:
        return float("inf")


def lemma_b_lhs_minus_rhs(r: int, N: int, z: Rational, w: Rational) -> Fraction:
    """z*B_r(z, N+1+w) - B_r(z, N+w) - r*(N+w)^(r-1), exactly; always zero.

    Args:
        r: Positive order
        N: Nonnegative shift
        z: Rational z != 1
        w: Rational w

    Returns:
        The exact difference of both sides
    """
    if r < 1:
        raise ValueError(f"order must be positive, got {r}")
    z = Fraction(z)
    w = Fraction(w)
    b = apostol_exact(r)
    shifted = N + w
    return z * b.evaluate_exact(z, shifted + 1) - b.evaluate_exact(z, shifted) - r * shifted ** (r - 1)


def lemma_b_sum_residual(r: int, N: int, z: Rational, w: Rational) -> Fraction:
    """B_r(z, N+w) z^N / r - B_r(z, w) / r - sum_{n<N} z^n (n+w)^(r-1), exactly; always zero."""
    if r < 1:
        raise ValueError(f"order must be positive, got {r}")
    z = Fraction(z)
    w = Fraction(w)
    b = apostol_exact(r)
    head = sum((z**n * (n + w) ** (r - 1) for n in range(N)), Fraction(0))
    return b.evaluate_exact(z, N + w) * z**N / r - b.evaluate_exact(z, w) / r - head
