"""Independent oracles by truncated power-series division, and Bernoulli polynomials."""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import List, Sequence, Tuple

from lerchzeta.apostol.rational import Rational
from lerchzeta.errors import ArgumentExcluded


def _series_divide(num: Sequence[Fraction], den: Sequence[Fraction], order: int) -> List[Fraction]:
    """Coefficients q_0..q_order of num/den as formal power series (den[0] != 0)."""
    q: List[Fraction] = []
    for n in range(order + 1):
        acc = num[n] if n < len(num) else Fraction(0)
        for i in range(1, min(n, len(den) - 1) + 1):
            acc -= den[i] * q[n - i]
        q.append(acc / den[0])
    return q


def _exp_series(w: Fraction, order: int) -> List[Fraction]:
    return [w**n / factorial(n) for n in range(order + 1)]


def gf_taylor_oracle(r: int, z: Rational, w: Rational) -> Fraction:
    """Coefficient of t^r/r! in t*e^(t*w)/(e^t*z - 1), exactly.

    Raises:
        ArgumentExcluded: If z = 1; use bernoulli_oracle there
    """
    z = Fraction(z)
    w = Fraction(w)
    if z == 1:
        raise ArgumentExcluded("z = 1 uses the Bernoulli generating function")
    # t*e^(tw): coefficient of t^(n+1) is w^n/n!
    num = [Fraction(0)] + _exp_series(w, r)
    den = [z - 1] + [z / factorial(n) for n in range(1, r + 1)]
    return _series_divide(num, den, r)[r] * factorial(r)


def bernoulli_oracle(r: int, w: Rational) -> Fraction:
    """Coefficient of t^r/r! in t*e^(t*w)/(e^t - 1), exactly.

    The factor t is cancelled against (e^t - 1)/t = sum t^n/(n+1)!.
    """
    w = Fraction(w)
    num = _exp_series(w, r)
    den = [Fraction(1, factorial(n + 1)) for n in range(r + 1)]
    return _series_divide(num, den, r)[r] * factorial(r)


@lru_cache(maxsize=None)
def bernoulli_numbers(n: int) -> Tuple[Fraction, ...]:
    """B_0..B_n from sum_{k<=m} C(m+1, k) B_k = 0, so that B_1 = -1/2."""
    numbers = [Fraction(1)]
    for m in range(1, n + 1):
        acc = sum(comb(m + 1, k) * numbers[k] for k in range(m))
        numbers.append(-acc / (m + 1))
    return tuple(numbers)


@lru_cache(maxsize=None)
def bernoulli_poly_coeffs(r: int) -> Tuple[Fraction, ...]:
    """Coefficients of B_r(w), highest degree first."""
    numbers = bernoulli_numbers(r)
    return tuple(comb(r, k) * numbers[k] for k in range(r + 1))


def bernoulli_poly(r: int, w: complex) -> complex:
    """The Bernoulli polynomial B_r(w).

    Args:
        r: Nonnegative degree
        w: Evaluation point

    Returns:
        B_r(w) in floating point
    """
    total = 0.0 + 0.0j
    for c in bernoulli_poly_coeffs(r):
        total = total * w + float(c)
    return complex(total)


def bernoulli_poly_exact(r: int, w: Rational) -> Fraction:
    """B_r(w) at rational w."""
    w = Fraction(w)
    total = Fraction(0)
    for c in bernoulli_poly_coeffs(r):
        total = total * w + c
    return total
