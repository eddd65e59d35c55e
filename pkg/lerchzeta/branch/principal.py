"""Principal-branch complex arithmetic with a configurable argument range.

Every logarithm in lerchzeta takes its argument in [phi, phi + 2*pi), so the
complex powers (n + w)^s, t^(s-1) and alpha^(s+r-1) are all single valued and
consistent with one another. The logarithm of a positive real r is then
ln r + 2*pi*i*nu for the integer nu returned by ``nu``.
"""

import cmath
import math

from lerchzeta.config.schemas import BranchConfig
from lerchzeta.errors import ArgumentExcluded

TWO_PI = 2.0 * math.pi


def principal_arg(lam: complex, cfg: BranchConfig) -> float:
    """Argument of lam reduced into [phi, phi + 2*pi).

    Args:
        lam: Nonzero complex number
        cfg: Branch configuration supplying phi

    Returns:
        The unique theta = arg(lam) mod 2*pi with phi <= theta < phi + 2*pi

    Raises:
        ArgumentExcluded: If lam is zero
    """
    if lam == 0:
        raise ArgumentExcluded("the argument of 0 is undefined")
    theta = cmath.phase(lam)
    theta += TWO_PI * math.ceil((cfg.phi - theta) / TWO_PI)
    # ceil can land one period off when phi - theta is a multiple of 2*pi up to rounding
    if theta < cfg.phi:
        theta += TWO_PI
    elif theta >= cfg.phi + TWO_PI:
        theta -= TWO_PI
    return theta


def principal_log(lam: complex, cfg: BranchConfig) -> complex:
    """Logarithm ln|lam| + i*principal_arg(lam).

    Args:
        lam: Nonzero complex number
        cfg: Branch configuration

    Returns:
        The branch logarithm; exp of the result reproduces lam

    Raises:
        ArgumentExcluded: If lam is zero
    """
    theta = principal_arg(lam, cfg)
    return complex(cmath.log(lam).real, theta)


def cpow(base: complex, exponent: complex, cfg: BranchConfig) -> complex:
    """Complex power exp(exponent * principal_log(base)).

    Raises:
        ArgumentExcluded: If base is zero
    """
    if exponent == 0:
        if base == 0:
            raise ArgumentExcluded("0 has no logarithm")
        return 1.0 + 0.0j
    if exponent == 1:
        if base == 0:
            raise ArgumentExcluded("0 has no logarithm")
        return complex(base)
    return cmath.exp(exponent * principal_log(base, cfg))


def nu(cfg: BranchConfig) -> int:
    """The integer nu with phi <= 2*pi*nu < phi + 2*pi.

    For positive reals r this gives log r = ln r + 2*pi*i*nu.
    """
    return math.ceil(cfg.phi / TWO_PI)
