"""The symmetric combinations Lambda, Lambda^- and the factor Omega."""

import cmath
import math
from functools import lru_cache
from typing import Optional

from lerchzeta.branch import cpow, is_nonpositive_integer
from lerchzeta.config.schemas import BranchConfig, EvalParams
from lerchzeta.errors import ArgumentExcluded
from lerchzeta.lerch import lerch_phi
from lerchzeta.numerics import gamma

TWO_PI_I = 2j * math.pi


@lru_cache(maxsize=4096)
def _phi(z: complex, s: complex, w: complex, cfg: BranchConfig, tol: Optional[float]) -> complex:
    return lerch_phi(z, s, w, cfg, tol=tol).value


def phi(
    z: complex,
    s: complex,
    w: complex,
    cfg: BranchConfig,
    p: Optional[EvalParams] = None,
    method: str = "auto",
    tol: Optional[float] = None,
) -> complex:
    """Value of Phi(z, s, w); default evaluations are memoised per point and tolerance."""
    if p is None and method == "auto":
        return _phi(complex(z), complex(s), complex(w), cfg, tol)
    return lerch_phi(z, s, w, cfg, p=p, method=method, tol=tol).value  # type: ignore[arg-type]


def lambda_plus(
    a: complex,
    s: complex,
    w: complex,
    cfg: Optional[BranchConfig] = None,
    tol: Optional[float] = None,
) -> complex:
    """Lambda(a, s, w) = Phi(e^(2 pi i a), s, w) + e^(-2 pi i a) Phi(e^(-2 pi i a), s, 1 - w)."""
    cfg = cfg if cfg is not None else BranchConfig()
    a = complex(a)
    return phi(cmath.exp(TWO_PI_I * a), s, w, cfg, tol=tol) + cmath.exp(-TWO_PI_I * a) * phi(
        cmath.exp(-TWO_PI_I * a), s, 1.0 - complex(w), cfg, tol=tol
    )


def lambda_minus(
    a: complex,
    s: complex,
    w: complex,
    cfg: Optional[BranchConfig] = None,
    tol: Optional[float] = None,
) -> complex:
    """Lambda^-(a, s, w) = Phi(e^(2 pi i a), s, w) - e^(-2 pi i a) Phi(e^(-2 pi i a), s, 1 - w)."""
    cfg = cfg if cfg is not None else BranchConfig()
    a = complex(a)
    return phi(cmath.exp(TWO_PI_I * a), s, w, cfg, tol=tol) - cmath.exp(-TWO_PI_I * a) * phi(
        cmath.exp(-TWO_PI_I * a), s, 1.0 - complex(w), cfg, tol=tol
    )


def omega(s: complex, cfg: Optional[BranchConfig] = None) -> complex:
    """Omega(s) = 2 (2 pi)^(-s) cos(pi s / 2) Gamma(s), with (2 pi)^(-s) on the cfg branch.

    Raises:
        ArgumentExcluded: If s is a pole of Gamma
    """
    cfg = cfg if cfg is not None else BranchConfig()
    s = complex(s)
    if is_nonpositive_integer(s):
        raise ArgumentExcluded(f"Gamma has a pole at s={s}")
    return 2.0 * cpow(2.0 * math.pi, -s, cfg) * cmath.cos(math.pi * s / 2.0) * gamma(s)
