"""Complex gamma function by the Lanczos approximation (g = 7, 9 terms) with reflection."""

import cmath
import math

from lerchzeta.config.schemas import CUT_TOL
from lerchzeta.errors import ArgumentExcluded, PoleAtOne

_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)


def _is_gamma_pole(s: complex) -> bool:
    n = round(s.real)
    return n <= 0 and abs(s - n) <= CUT_TOL


def _sin_pi(s: complex) -> complex:
    """sin(pi*s), reduced by the nearest integer first."""
    n = round(s.real)
    value = cmath.sin(math.pi * (s - n))
    return -value if n % 2 else value


def _log_gamma_right(s: complex) -> complex:
    """A logarithm of Gamma(s) for Re(s) >= 0.5 (not necessarily the principal one)."""
    z = s - 1.0
    x = _LANCZOS_COEFFS[0]
    for i, coeff in enumerate(_LANCZOS_COEFFS[1:], start=1):
        x += coeff / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def gamma(s: complex) -> complex:
    """Gamma(s) for complex s.

    Args:
        s: Any complex number that is not a nonpositive integer

    Returns:
        Gamma(s)

    Raises:
        ArgumentExcluded: If s is a nonpositive integer within CUT_TOL
    """
    s = complex(s)
    if _is_gamma_pole(s):
        raise ArgumentExcluded(f"Gamma has a pole at s = {s.real:g}")
    if s.real < 0.5:
        return math.pi / (_sin_pi(s) * cmath.exp(_log_gamma_right(1.0 - s)))
    return cmath.exp(_log_gamma_right(s))


def recip_gamma(s: complex) -> complex:
    """1/Gamma(s), an entire function; exactly 0 at the nonpositive integers."""
    s = complex(s)
    if _is_gamma_pole(s):
        return 0j
    if s.real < 0.5:
        return _sin_pi(s) * cmath.exp(_log_gamma_right(1.0 - s)) / math.pi
    return cmath.exp(-_log_gamma_right(s))


def q_factor(r: int, s: complex) -> complex:
    """1/((s + r - 1) Gamma(s)), finite at s = 1 - r for r >= 1.

    For r >= 1 this is s(s+1)...(s+r-2)/Gamma(s+r), using
    Gamma(s+r) = (s+r-1)...(s+1) s Gamma(s).

    Args:
        r: Nonnegative integer
        s: Complex argument

    Returns:
        The value of the analytic function

    Raises:
        PoleAtOne: If r = 0 and s = 1
    """
    s = complex(s)
    if r == 0:
        if abs(s - 1.0) <= CUT_TOL:
            raise PoleAtOne("1/((s-1)Gamma(s)) has a simple pole at s=1")
        return recip_gamma(s) / (s - 1.0)
    product = 1.0 + 0.0j
    for i in range(r - 1):
        product *= s + i
    return product * recip_gamma(s + r)
