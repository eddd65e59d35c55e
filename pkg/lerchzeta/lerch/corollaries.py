"""Hurwitz zeta, polylogarithm and the closed form of Li_1."""

import cmath
import logging
from typing import Optional

from lerchzeta.branch import classify, on_cut_z, principal_arg, principal_log
from lerchzeta.config.schemas import CUT_TOL, BranchConfig, EvalResult
from lerchzeta.errors import ArgumentExcluded, PoleAtOne
from lerchzeta.lerch.evaluate import lerch_phi

logger = logging.getLogger(__name__)


def hurwitz(s: complex, w: complex, cfg: Optional[BranchConfig] = None, tol: Optional[float] = None) -> EvalResult:
    """Hurwitz zeta function zeta(s, w) = Phi(1, s, w).

    Raises:
        PoleAtOne: At s = 1
    """
    if abs(complex(s) - 1.0) <= CUT_TOL:
        raise PoleAtOne("simple pole at s=1")
    return lerch_phi(1.0, s, w, cfg, tol=tol)


def polylog(s: complex, z: complex, cfg: Optional[BranchConfig] = None, tol: Optional[float] = None) -> EvalResult:
    """Polylogarithm Li_s(z) = z Phi(z, s, 1); 0 at z = 0 for every s."""
    cfg = cfg if cfg is not None else BranchConfig()
    z = complex(z)
    if z == 0:
        return EvalResult(value=0j, abs_err_est=0.0, method="closed_form", domain=classify(z, s, 1.0, cfg))
    result = lerch_phi(z, s, 1.0, cfg, tol=tol)
    return result.model_copy(update={"value": z * result.value, "abs_err_est": abs(z) * result.abs_err_est})


def li1_closed(z: complex, cfg: Optional[BranchConfig] = None) -> complex:
    """Closed form of z Phi(z, 1, 1) on the complement of l'_phi'.

    i*arg(-e^(i(phi-phi'))) - log((z-1) e^(i(phi-phi'))), with arg and log from
    cfg; for phi = -pi, phi' = 0 this is -log(1 - z).

    Raises:
        ArgumentExcluded: If z lies on l'_phi'
    """
    cfg = cfg if cfg is not None else BranchConfig()
    z = complex(z)
    if on_cut_z(z, cfg):
        raise ArgumentExcluded(f"z={z} lies on the z-cut")
    rotation = cmath.exp(1j * (cfg.phi - cfg.phi_prime))
    return 1j * principal_arg(-rotation, cfg) - principal_log((z - 1.0) * rotation, cfg)
