"""Membership predicates for the cut sets and domains.

Cuts:
    l_phi       = {-n + r e^{i phi}        : r >= 0, n in Z>=0}   (w-plane)
    l'_phi'     = {1 + r e^{i phi'}         : r >= 0}             (z-plane)
    ltilde_phi  = {n + 1 + r e^{i(phi+pi)}  : r >= 0, n in Z>=0} U l_phi

Every test uses the absolute distance-to-ray tolerance CUT_TOL; a point within
tolerance of a cut counts as lying on it.
"""

import cmath
import math

from lerchzeta.branch.principal import TWO_PI
from lerchzeta.config.schemas import CUT_TOL, BranchConfig, DomainClass, is_multiple_of_two_pi
from lerchzeta.errors import ArgumentExcluded, BranchConfigInvalid


def _distance_to_ray(point: complex, origin: complex, direction: complex) -> float:
    """Distance from point to the half line origin + r*direction (|direction| = 1)."""
    v = point - origin
    r = (v * direction.conjugate()).real
    if r <= 0.0:
        return abs(v)
    return abs(v - r * direction)


def _on_ray_family(
    point: complex, origin: complex, step: float, direction: complex, tol: float
) -> bool:
    """Membership in the union of rays origin + n*step + r*direction, n >= 0, r >= 0."""
    # Rotate so the rays point along the positive real axis.
    q = (point - origin) * direction.conjugate()
    sigma = step * direction.conjugate()
    if abs(sigma.imag) < 1e-15:
        # All rays lie on one line; the union is a single half line.
        if abs(q.imag) > tol:
            return False
        if sigma.real < 0:
            return True
        return q.real >= -tol
    ratio = q.imag / sigma.imag
    candidates = {0, math.floor(ratio), math.ceil(ratio)}
    for n in candidates:
        if n < 0:
            continue
        if _distance_to_ray(q, n * sigma, 1.0 + 0.0j) <= tol:
            return True
    return False


def on_cut_w(w: complex, cfg: BranchConfig, tol: float = CUT_TOL) -> bool:
    """True iff w = -n + r e^{i phi} for some n in Z>=0 and r >= 0."""
    return _on_ray_family(complex(w), 0.0, -1.0, cmath.exp(1j * cfg.phi), tol)


def on_cut_z(z: complex, cfg: BranchConfig, tol: float = CUT_TOL) -> bool:
    """True iff z = 1 + r e^{i phi'} for some r >= 0."""
    return _distance_to_ray(complex(z), 1.0, cmath.exp(1j * cfg.phi_prime)) <= tol


def on_cut_sym(w: complex, cfg: BranchConfig, tol: float = CUT_TOL) -> bool:
    """True iff w lies on the symmetrised cut ltilde_phi."""
    if on_cut_w(w, cfg, tol):
        return True
    return _on_ray_family(complex(w), 1.0, 1.0, -cmath.exp(1j * cfg.phi), tol)


def is_excluded_w(w: complex, tol: float = CUT_TOL) -> bool:
    """True iff w is (within tol) a nonpositive integer."""
    w = complex(w)
    n = round(-w.real)
    return n >= 0 and abs(w + n) <= tol


def is_nonpositive_integer(s: complex, tol: float = CUT_TOL) -> bool:
    """True iff s is (within tol) in Z<=0."""
    return is_excluded_w(s, tol)


def classify(z: complex, s: complex, w: complex, cfg: BranchConfig) -> DomainClass:
    """Classify (z, s, w) into the domains (D1) of the continuation theorem."""
    w_cut = on_cut_w(w, cfg)
    z_cut = on_cut_z(z, cfg)
    if w_cut and z_cut:
        variant = "D1_both_on_cut"
    elif z_cut:
        variant = "D1_z_on_cut"
    elif w_cut:
        variant = "D1_w_on_cut"
    else:
        variant = "D1_full"
    pole = abs(complex(z) - 1.0) <= CUT_TOL and abs(complex(s) - 1.0) <= CUT_TOL
    return DomainClass(variant=variant, excluded=is_excluded_w(w), pole=pole)


def arg_on_cut_complement(z: complex, cfg: BranchConfig) -> float:
    """Continuous argument of z - 1 on the complement of l'_phi'.

    Returns:
        The argument of z - 1 in (phi', phi' + 2*pi]; points on the cut get phi' + 2*pi

    Raises:
        ArgumentExcluded: If z = 1
    """
    v = complex(z) - 1.0
    if v == 0:
        raise ArgumentExcluded("z = 1 is the apex of the z-cut")
    theta = cmath.phase(v)
    theta += TWO_PI * math.ceil((cfg.phi_prime - theta) / TWO_PI)
    if theta <= cfg.phi_prime:
        theta += TWO_PI
    return theta


def _require_integral_phi_prime(cfg: BranchConfig) -> None:
    if not is_multiple_of_two_pi(cfg.phi_prime):
        raise BranchConfigInvalid(
            f"the functional-equation domains need phi' in 2*pi*Z, got {cfg.phi_prime!r}"
        )


def _near_integer_line(x: complex, tol: float = CUT_TOL) -> bool:
    """True iff Re(x) is within tol of an integer (x on Z + iR)."""
    re = complex(x).real
    return abs(re - round(re)) <= tol


def _in_strip_component(x: complex, cfg: BranchConfig) -> bool:
    """Membership in the component U of C minus (ltilde_phi U (Z + iR)) containing (0, 1)."""
    x = complex(x)
    if not (CUT_TOL < x.real < 1.0 - CUT_TOL):
        return False
    if on_cut_sym(x, cfg):
        return False
    if math.cos(cfg.phi) <= CUT_TOL:
        # The rays run leftwards (or along the integer lines) and never enter the strip.
        return True
    slope = math.tan(cfg.phi)
    upper_from_zero = x.real * slope
    lower_from_one = -(1.0 - x.real) * slope
    low, high = sorted((upper_from_zero, lower_from_one))
    return low < x.imag < high


def in_domain_eq(a: complex, w: complex, cfg: BranchConfig) -> bool:
    """True iff a and w both lie in U, the domain of the equivalence theorem.

    Raises:
        BranchConfigInvalid: If phi' is not a multiple of 2*pi
    """
    _require_integral_phi_prime(cfg)
    return _in_strip_component(a, cfg) and _in_strip_component(w, cfg)


def in_domain_lerch(a: complex, w: complex, cfg: BranchConfig) -> bool:
    """The open-set condition under which both sides of Lerch's equation are holomorphic.

    a must avoid ltilde_phi and Z + iR<=0; w must avoid l_phi and Z + iR.

    Raises:
        BranchConfigInvalid: If phi' is not a multiple of 2*pi
    """
    _require_integral_phi_prime(cfg)
    a = complex(a)
    if on_cut_sym(a, cfg):
        return False
    if _near_integer_line(a) and a.imag <= CUT_TOL:
        return False
    if on_cut_w(w, cfg) or _near_integer_line(w):
        return False
    return True
