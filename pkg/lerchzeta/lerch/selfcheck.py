"""Desk-scale self-test suites for the evaluator.

Each suite draws its points from a seeded numpy Generator, evaluates them
against an independent route and reports the worst discrepancy in a
SuiteReport. Points are drawn for the BranchConfig under test, so the same
suites run for rotated branches.
"""

import cmath
import itertools
import logging
import math
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from lerchzeta.branch import cpow, on_cut_w, on_cut_z
from lerchzeta.config.schemas import BranchConfig, EvalParams, SuiteReport
from lerchzeta.lerch.continuation import decomposition
from lerchzeta.lerch.evaluate import lerch_phi, special_value
from lerchzeta.lerch.params import default_params, head_branch_ok

logger = logging.getLogger(__name__)

Point = Tuple[complex, complex, complex]

SEED = 20240
# Distance kept from both cuts and from z = 1 by points meant to be off the cuts.
CUT_MARGIN = 0.2

PARAMETER_POINTS_PER_VARIANT = 5
DECOMPOSITION_POINTS = 20
CONTIGUOUS_POINTS = 50
SPECIAL_POINTS = 50
SPECIAL_ORDERS = range(1, 13)


def _polar(rng: np.random.Generator, low: float, high: float) -> complex:
    return complex(rng.uniform(low, high) * cmath.exp(1j * rng.uniform(-math.pi, math.pi)))


def _box(rng: np.random.Generator, re: Tuple[float, float], im: Tuple[float, float]) -> complex:
    return complex(rng.uniform(*re), rng.uniform(*im))


def free_z(rng: np.random.Generator, cfg: BranchConfig, low: float = 0.1, high: float = 2.5) -> complex:
    """z with low <= |z| <= high, at least CUT_MARGIN away from l'_phi' and from 1."""
    while True:
        z = _polar(rng, low, high)
        if not on_cut_z(z, cfg, CUT_MARGIN) and abs(z - 1.0) >= CUT_MARGIN:
            return z


def free_w(rng: np.random.Generator, cfg: BranchConfig) -> complex:
    """w in [0.2, 2.5] x [-1, 1], at least CUT_MARGIN away from l_phi."""
    while True:
        w = _box(rng, (0.2, 2.5), (-1.0, 1.0))
        if not on_cut_w(w, cfg, CUT_MARGIN):
            return w


def cut_z(rng: np.random.Generator, cfg: BranchConfig) -> complex:
    """z = 1 + r e^(i phi') on the z-cut, 0.2 <= r <= 1.5."""
    return 1.0 + rng.uniform(0.2, 1.5) * cmath.exp(1j * cfg.phi_prime)


def cut_w(rng: np.random.Generator, cfg: BranchConfig) -> complex:
    """w = -n + r e^(i phi) on the w-cut, n in {0, 1, 2}, 0.2 <= r <= 0.8."""
    return -float(rng.integers(0, 3)) + rng.uniform(0.2, 0.8) * cmath.exp(1j * cfg.phi)


def free_s(rng: np.random.Generator, re: Tuple[float, float], im: Tuple[float, float]) -> complex:
    """s from the box, at least 0.1 away from the nonpositive integers."""
    while True:
        s = _box(rng, re, im)
        if s.real > 0.1 or abs(s - min(0, round(s.real))) >= 0.1:
            return s


def parameter_points(cfg: BranchConfig, seed: int = SEED) -> List[Point]:
    """Five points per domain variant: full, w on the cut, z on the cut, both."""
    rng = np.random.default_rng(seed)
    makers = [
        lambda: (free_z(rng, cfg), free_w(rng, cfg)),
        lambda: (free_z(rng, cfg), cut_w(rng, cfg)),
        lambda: (cut_z(rng, cfg), free_w(rng, cfg)),
        lambda: (cut_z(rng, cfg), cut_w(rng, cfg)),
    ]
    points = []
    for make in makers:
        for _ in range(PARAMETER_POINTS_PER_VARIANT):
            z, w = make()
            points.append((z, free_s(rng, (-1.5, 2.5), (-2.5, 2.5)), w))
    return points


def decomposition_points(cfg: BranchConfig, seed: int = SEED) -> List[Point]:
    """Series-region points whose head of length 2 follows the branch."""
    rng = np.random.default_rng(seed)
    points: List[Point] = []
    while len(points) < DECOMPOSITION_POINTS:
        z = _polar(rng, 0.3, 0.9)
        w = _box(rng, (0.5, 2.5), (-1.0, 1.0))
        if head_branch_ok(w, 2, cfg):
            points.append((z, free_s(rng, (-1.5, 2.0), (-2.0, 2.0)), w))
    return points


def contiguous_points(cfg: BranchConfig, seed: int = SEED) -> List[Point]:
    rng = np.random.default_rng(seed)
    return [
        (free_z(rng, cfg), free_s(rng, (-3.0, 3.0), (-2.0, 2.0)), free_w(rng, cfg))
        for _ in range(CONTIGUOUS_POINTS)
    ]


def special_points(cfg: BranchConfig, seed: int = SEED) -> List[Tuple[complex, complex]]:
    """(z, w) pairs with |z - 1| >= 0.1 on either side of the z-cut."""
    rng = np.random.default_rng(seed)
    points: List[Tuple[complex, complex]] = []
    while len(points) < SPECIAL_POINTS:
        z = _polar(rng, 0.2, 2.5)
        if abs(z - 1.0) >= 0.1:
            points.append((z, free_w(rng, cfg)))
    return points


def _relative(a: complex, b: complex) -> float:
    return abs(a - b) / (1.0 + abs(b))


def _report(name: str, threshold: float, discrepancies: Sequence[Tuple[float, str]]) -> SuiteReport:
    worst, detail = max(discrepancies, default=(0.0, ""))
    passed = worst <= threshold
    logger.debug("suite %s: worst %.3g at %s", name, worst, detail)
    return SuiteReport(
        name=name,
        passed=passed,
        worst=worst,
        threshold=threshold,
        checks=len(discrepancies),
        detail=detail,
    )


def parameters_suite(cfg: BranchConfig) -> SuiteReport:
    """Continuation values must not depend on alpha in {1, 2, 3}, N and m."""
    found = []
    for z, s, w in parameter_points(cfg):
        base = default_params(z, s, w, cfg)
        values = []
        for alpha, dN, dm in itertools.product((1.0, 2.0, 3.0), (0, 3), (0, 4)):
            p = base.model_copy(update={"alpha": max(alpha, base.alpha), "N": base.N + dN, "m": base.m + dm})
            values.append(lerch_phi(z, s, w, cfg, p=p).value)
        spread = max(_relative(a, b) for a, b in itertools.combinations(values, 2))
        found.append((spread, f"z={z}, s={s}, w={w}"))
    return _report("parameters", 1e-8, found)


def decomposition_suite(cfg: BranchConfig) -> SuiteReport:
    """Series value against H + I + J with N = m = 2."""
    found = []
    p = EvalParams(alpha=1.0, N=2, m=2)
    for z, s, w in decomposition_points(cfg):
        lhs, rhs = decomposition(z, s, w, p, cfg)
        found.append((_relative(lhs, rhs), f"z={z}, s={s}, w={w}"))
    return _report("decomposition", 1e-9, found)


def contiguous_suite(cfg: BranchConfig) -> SuiteReport:
    """Phi(z, s, w) = z Phi(z, s, w + 1) + w^(-s)."""
    found = []
    for z, s, w in contiguous_points(cfg):
        left = lerch_phi(z, s, w, cfg).value
        right = z * lerch_phi(z, s, w + 1.0, cfg).value + cpow(w, -s, cfg)
        found.append((_relative(left, right), f"z={z}, s={s}, w={w}"))
    return _report("contiguous", 1e-8, found)


def special_values_suite(cfg: BranchConfig) -> SuiteReport:
    """The continuation formula at s = 1 - r against -B_r(z, w)/r."""
    found = []
    for z, w in special_points(cfg):
        for r in SPECIAL_ORDERS:
            value = lerch_phi(z, 1.0 - r, w, cfg, method="continuation").value
            found.append((_relative(value, special_value(z, r, w)), f"r={r}, z={z}, w={w}"))
    return _report("special-values", 1e-8, found)


SUITES: Dict[str, Callable[[BranchConfig], SuiteReport]] = {
    "parameters": parameters_suite,
    "decomposition": decomposition_suite,
    "contiguous": contiguous_suite,
    "special-values": special_values_suite,
}


def run(names: Optional[Sequence[str]] = None, cfg: Optional[BranchConfig] = None) -> List[SuiteReport]:
    """Run the named suites (all when names is empty).

    Raises:
        KeyError: For an unknown suite name
    """
    cfg = cfg if cfg is not None else BranchConfig()
    selected = list(names) if names else list(SUITES)
    unknown = [name for name in selected if name not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite: {', '.join(unknown)}")
    return [SUITES[name](cfg) for name in selected]
