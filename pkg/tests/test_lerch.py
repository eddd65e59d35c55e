import cmath
import itertools
import math
import unittest
from unittest.mock import patch

import mpmath
import numpy as np

from lerchzeta.branch import classify, cpow, is_nonpositive_integer, on_cut_z
from lerchzeta.config import BranchConfig, EvalParams
from lerchzeta.config.schemas import QuadResult
from lerchzeta.errors import ArgumentExcluded, OutsideSeriesRegion, ParameterError, PoleAtOne, PoleOnPath
from lerchzeta.lerch import (
    choose_contour,
    compute_H,
    compute_I,
    compute_J,
    compute_J_over_gamma,
    decomposition,
    default_params,
    head_branch_ok,
    hurwitz,
    lerch_phi,
    li1_closed,
    phi_integrand,
    phi_series,
    phi_taylor,
    polylog,
    special_value,
    taylor_coefficients,
    validate_params,
)
from lerchzeta.lerch.continuation import taylor_polynomial
from lerchzeta.lerch.selfcheck import SUITES, decomposition_points, parameter_points, run, special_points
from lerchzeta.numerics import recip_gamma

DEFAULT = BranchConfig()
UPPER = BranchConfig(phi=math.pi / 2, phi_prime=math.pi / 2)
UNIT = EvalParams(alpha=1.0, N=0, m=0)

ZETA_2 = math.pi**2 / 6
PHI_HALF_2_1 = 1.1644810529300041


def _close(test: unittest.TestCase, got: complex, expected: complex, rel: float) -> None:
    test.assertLessEqual(abs(got - expected), rel * max(1.0, abs(expected)), f"{got} != {expected}")


class TestSeries(unittest.TestCase):
    def test_known_values(self):
        self.assertEqual(phi_series(0, 2, 1, DEFAULT).value, 1.0)
        _close(self, phi_series(0.5, 1, 1, DEFAULT).value, 2 * math.log(2), 1e-12)
        _close(self, phi_series(0.5, 2, 1, DEFAULT).value, PHI_HALF_2_1, 1e-12)

    def test_unit_circle_with_large_real_part(self):
        result = phi_series(1, 4, 1, DEFAULT, tol=1e-10)
        _close(self, result.value, math.pi**4 / 90, 1e-9)

    def test_error_estimate_and_method(self):
        result = phi_series(0.3 + 0.4j, 1.5 - 1j, 0.5 + 0.5j, DEFAULT)
        self.assertEqual(result.method, "series")
        expected = complex(mpmath.lerchphi(0.3 + 0.4j, 1.5 - 1j, 0.5 + 0.5j))
        self.assertLess(abs(result.value - expected), 1e-11 * abs(expected))

    def test_outside_region(self):
        with self.assertRaises(OutsideSeriesRegion):
            phi_series(2, 2, 1, DEFAULT)
        with self.assertRaises(OutsideSeriesRegion):
            phi_series(1, 0.5, 1, DEFAULT)

    def test_excluded_shift(self):
        with self.assertRaises(ArgumentExcluded):
            phi_series(0.5, 2, -1, DEFAULT)


class TestIntegrand(unittest.TestCase):
    def test_values(self):
        self.assertEqual(phi_integrand(0.5, 0.7, 0, 3), 0)
        self.assertEqual(phi_integrand(1, 0.7, 0, 3), 1)
        self.assertAlmostEqual(phi_integrand(1, 0.0, 1e-8, 0), 1.0, places=7)
        self.assertAlmostEqual(phi_integrand(0, 1, 1, 0), math.exp(-1), places=15)

    def test_pole(self):
        with self.assertRaises(PoleOnPath):
            phi_integrand(2, 1, math.log(2), 0)

    def test_taylor_polynomial_values(self):
        self.assertEqual(phi_taylor(2, 0.4, 0.3, 1, 0), 0)
        self.assertAlmostEqual(phi_taylor(2, 0.4, 0.3, 1, 1), -0.3)
        self.assertAlmostEqual(phi_taylor(1, 0.4, 0.3, 1, 0), 1.0)

    def test_series_division_matches_apostol_coefficients(self):
        for z in (2.0, 1.0, 0.5 + 0.5j):
            exact = taylor_polynomial(z, 0.3, 1, 6)
            divided = taylor_coefficients(z, 0.3, 1, 6)
            for a, b in zip(exact, divided):
                self.assertLess(abs(a - b), 1e-10 * max(1.0, abs(a)), z)

    def test_taylor_polynomial_approximates_integrand(self):
        t = 1e-3
        self.assertLess(abs(phi_integrand(2, 0.3, t, 1) - phi_taylor(2, 0.3, t, 1, 4)), 1e-13)


class TestPieces(unittest.TestCase):
    def test_tail_integral(self):
        self.assertAlmostEqual(compute_H(0, 1, 1, UNIT, DEFAULT).value, math.exp(-1), places=10)
        self.assertAlmostEqual(compute_H(0, 2, 1, UNIT, DEFAULT).value, 2 * math.exp(-1), places=10)
        self.assertAlmostEqual(
            compute_H(0.5, 1, 1, UNIT, DEFAULT).value, -2 * math.log(1 - 1 / (2 * math.e)), places=10
        )

    def test_closed_form_sum(self):
        self.assertEqual(compute_J(2, 1.5, 0.4, UNIT, DEFAULT), 0)
        self.assertAlmostEqual(compute_J(1, 2.5, 0.4, UNIT, DEFAULT), 1 / 1.5)
        self.assertAlmostEqual(compute_J(2, 0.7, 0.4, EvalParams(alpha=1.0, N=0, m=1), DEFAULT), -1 / 0.7)

    def test_closed_form_sum_pole(self):
        with self.assertRaises(PoleAtOne):
            compute_J(1, 1, 0.5, UNIT, DEFAULT)
        with self.assertRaises(ArgumentExcluded):
            compute_J(2, 0, 0.5, EvalParams(alpha=1.0, N=0, m=1), DEFAULT)

    def test_closed_form_over_gamma(self):
        p = EvalParams(alpha=2.0, N=1, m=3)
        s = 0.7 + 0.4j
        self.assertAlmostEqual(
            compute_J_over_gamma(2, s, 0.4, p, DEFAULT), compute_J(2, s, 0.4, p, DEFAULT) * recip_gamma(s), places=12
        )
        self.assertAlmostEqual(compute_J_over_gamma(2, 0, 0.4, EvalParams(alpha=1.0, N=0, m=1), DEFAULT), -1.0)

    def test_contours(self):
        self.assertEqual(choose_contour(0.5, UNIT, DEFAULT), [0j, 1 + 0j])
        self.assertEqual(choose_contour(1 + 0.5j, UNIT, DEFAULT), [0j, 1 + 0j])
        lifted = choose_contour(2, EvalParams(alpha=1.0, N=0, m=0, eps=0.3), DEFAULT)
        for got, expected in zip(lifted, [0, 0.3, 0.3 + 0.09j, 1 + 0.09j, 1]):
            self.assertAlmostEqual(got, expected, places=14)

    def test_contour_below_the_pole(self):
        # just above the z-cut the path passes below the pole
        lifted = choose_contour(2 + 0.01j, EvalParams(alpha=1.0, N=0, m=0, eps=0.3), DEFAULT)
        self.assertEqual(len(lifted), 5)
        self.assertLess(lifted[2].imag, 0)

    def test_contour_eps_too_large(self):
        with self.assertRaises(ParameterError):
            choose_contour(1.5, EvalParams(alpha=1.0, N=0, m=0, eps=0.5), DEFAULT)

    def test_taylor_subtracted_integral(self):
        self.assertAlmostEqual(compute_I(0, 2, 1, UNIT, DEFAULT).value, 1 - 2 / math.e, places=11)
        self.assertAlmostEqual(
            compute_I(0, 2, 1, EvalParams(alpha=1.0, N=0, m=1), DEFAULT).value, 0.5 - 2 / math.e, places=11
        )
        self.assertAlmostEqual(compute_I(0, 3, 1, UNIT, DEFAULT).value, 2 - 5 / math.e, places=11)

    def test_decomposition(self):
        p = EvalParams(alpha=1.0, N=2, m=2)
        points = decomposition_points(DEFAULT, seed=5)
        self.assertEqual(len(points), 20)
        for z, s, w in points:
            lhs, rhs = decomposition(z, s, w, p, DEFAULT)
            self.assertLess(abs(lhs - rhs), 1e-9 * max(1.0, abs(rhs)), (z, s, w))

    def test_decomposition_validates_parameters(self):
        # m + Re(s) <= 0 leaves the Taylor-subtracted integrand non-integrable at t = 0
        with self.assertRaises(ParameterError):
            decomposition(0.5, -2.5, 1, EvalParams(alpha=1.0, N=2, m=2), DEFAULT)

    def test_on_cut_integral_is_extrapolated(self):
        p = EvalParams(alpha=1.0, N=0, m=0, eps=0.2)
        passes = [
            QuadResult(value=1.0, abs_err_est=1e-13, evaluations=15),
            QuadResult(value=1.5, abs_err_est=1e-13, evaluations=15),
        ]
        with patch("lerchzeta.lerch.continuation.integrate_polyline", side_effect=passes) as quad:
            result = compute_I(2, 2, 1, p, DEFAULT)
        self.assertEqual(quad.call_count, 2)
        self.assertEqual(quad.call_args_list[1].args[1][1], 0.1)
        self.assertEqual(result.value, 2.0)
        self.assertGreaterEqual(result.abs_err_est, 0.5)
        self.assertEqual(result.evaluations, 30)

    def test_decomposition_at_zero(self):
        with self.assertRaises(ArgumentExcluded):
            decomposition(0, 2, 1, UNIT, DEFAULT)


class TestParams(unittest.TestCase):
    def test_defaults(self):
        p = default_params(0.5, 2, 1, DEFAULT)
        self.assertEqual((p.alpha, p.N, p.m), (1.0, 2, 0))
        p = default_params(math.exp(3), -2.5, -1.5, DEFAULT)
        self.assertAlmostEqual(p.alpha, 4.0)
        self.assertEqual(p.N, 5)
        self.assertEqual(p.m, 5)

    def test_head_grows_for_rotated_branch(self):
        cfg = BranchConfig(phi=0.5)
        self.assertEqual(default_params(0.5, 2, 0.2 + 5j, cfg).N, 9)
        self.assertFalse(head_branch_ok(0.2 + 5j, 8, cfg))
        self.assertTrue(head_branch_ok(0.2 + 5j, 9, cfg))

    def test_continuation_with_long_head(self):
        cfg = BranchConfig(phi=0.5)
        z, s, w = 0.5, 2 + 0.5j, 0.2 + 5j
        _close(self, lerch_phi(z, s, w, cfg, method="continuation").value, phi_series(z, s, w, cfg).value, 1e-9)

    def test_validation(self):
        with self.assertRaises(ParameterError):
            validate_params(5, 2, 1, UNIT, DEFAULT)
        with self.assertRaises(ParameterError):
            validate_params(0.5, 2, -2.5, EvalParams(alpha=1.0, N=2, m=0), DEFAULT)
        with self.assertRaises(ParameterError):
            validate_params(0.5, -3.5, 1, EvalParams(alpha=1.0, N=1, m=2), DEFAULT)
        with self.assertRaises(ParameterError):
            validate_params(0.5, 2, 1, EvalParams(alpha=1.0, N=1, m=0, eps=1.5), DEFAULT)
        validate_params(0.5, 2, 1, EvalParams(alpha=1.0, N=1, m=0, eps=0.5), DEFAULT)


class TestLerchPhi(unittest.TestCase):
    def test_examples(self):
        s = 2 + 3j
        self.assertEqual(lerch_phi(0, s, 5).value, cpow(5, -s, DEFAULT))
        _close(self, lerch_phi(1, 2, 1).value, ZETA_2, 1e-9)
        _close(self, lerch_phi(2, -1, 1).value, 1.0, 1e-12)
        _close(self, lerch_phi(0.5, 2, 1).value, PHI_HALF_2_1, 1e-12)
        _close(self, lerch_phi(0.5, 2, 1, method="continuation").value, PHI_HALF_2_1, 1e-10)

    def test_routes(self):
        self.assertEqual(lerch_phi(0.5, 2, 1).method, "series")
        self.assertEqual(lerch_phi(2, -1, 1).method, "special_value")
        result = lerch_phi(2, 2, 1)
        self.assertEqual(result.method, "continuation")
        self.assertIsNotNone(result.params)
        self.assertEqual(lerch_phi(0.5, 2, 1, p=EvalParams(alpha=1.0, N=2, m=1)).method, "continuation")

    def test_errors(self):
        with self.assertRaises(PoleAtOne):
            lerch_phi(1, 1, 0.5)
        with self.assertRaises(ArgumentExcluded):
            lerch_phi(0.5, 2, -3)
        with self.assertRaises(ParameterError):
            lerch_phi(5, 2, 1, p=UNIT)

    def test_special_values(self):
        self.assertAlmostEqual(special_value(2, 1, 0.3 + 1j), -1.0)
        self.assertAlmostEqual(special_value(2, 2, 1), 1.0)
        self.assertAlmostEqual(special_value(1, 1, 1), -0.5)
        with self.assertRaises(ValueError):
            special_value(2, 0, 1)

    def test_forced_continuation_at_special_values(self):
        pairs = special_points(DEFAULT, seed=9) + [(1.0, 0.4)]
        self.assertEqual(len(pairs), 51)
        for z, w in pairs:
            for r in range(1, 13):
                got = lerch_phi(z, 1 - r, w, method="continuation").value
                _close(self, got, special_value(z, r, w), 1e-8)

    def test_forced_continuation_agrees_with_series(self):
        rng = np.random.default_rng(7)
        for cfg in (DEFAULT, UPPER):
            for _ in range(200):
                z = 0.9 * math.sqrt(rng.uniform(0, 1)) * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
                s = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
                w = complex(rng.uniform(0.1, 5), rng.uniform(-3, 3))
                if is_nonpositive_integer(s):
                    continue
                expected = phi_series(z, s, w, cfg).value
                got = lerch_phi(z, s, w, cfg, method="continuation").value
                _close(self, got, expected, 1e-9)

    def test_continuation_with_large_imaginary_exponent(self):
        z, s, w = 0.259 + 0.690j, -3.36 - 4.76j, 0.421 + 2.79j
        expected = complex(mpmath.lerchphi(z, s, w))
        result = lerch_phi(z, s, w, method="continuation")
        _close(self, result.value, expected, 1e-9)
        _close(self, phi_series(z, s, w, DEFAULT).value, expected, 1e-10)

    def test_parameter_independence_with_both_arguments_on_the_cuts(self):
        z, s, w = 2.99, 0.733 + 2.93j, -2.32
        base = default_params(z, s, w, DEFAULT)
        values = []
        for alpha, dN, dm in itertools.product((1.0, 2.0, 3.0), (0, 3), (0, 4)):
            p = base.model_copy(update={"alpha": max(alpha, base.alpha), "N": base.N + dN, "m": base.m + dm})
            values.append(lerch_phi(z, s, w, p=p).value)
        for a, b in itertools.combinations(values, 2):
            self.assertLessEqual(abs(a - b), 1e-8 * (1 + abs(b)))

    def test_continuation_against_mpmath(self):
        for z, s, w in ((-3 + 1j, 1.5 + 0.5j, 0.7), (2 + 2j, 2.0, 1.0), (-5.0, 0.5 - 1j, 1.5)):
            expected = complex(mpmath.lerchphi(z, s, w))
            _close(self, lerch_phi(z, s, w).value, expected, 1e-8)

    def test_value_on_the_cut_is_the_limit_from_below(self):
        on_cut = lerch_phi(2, 2, 1).value
        below = lerch_phi(2 - 1e-6j, 2, 1).value
        above = lerch_phi(2 + 1e-6j, 2, 1)
        self.assertLess(abs(on_cut - below), 1e-5)
        self.assertGreater(abs(above.value - below), 2.0)
        self.assertGreater(abs(above.value - below), 10 * above.abs_err_est)
        z = 2 - 1e-6j
        self.assertLess(abs(below - complex(mpmath.polylog(2, z)) / z), 1e-8)

    def test_near_one_warns(self):
        z = 1 + 5e-4j
        with self.assertLogs("lerchzeta.lerch.evaluate", level="WARNING"):
            result = lerch_phi(z, 2, 1)
        self.assertEqual(len(result.warnings), 1)
        self.assertGreater(result.abs_err_est, 0.0)
        expected = complex(mpmath.polylog(2, z)) / z
        self.assertLess(abs(result.value - expected), 1e-6 * abs(expected))


class TestCorollaries(unittest.TestCase):
    def test_hurwitz(self):
        _close(self, hurwitz(2, 1).value, ZETA_2, 1e-9)
        _close(self, hurwitz(0, 0.25).value, 0.25, 1e-12)
        _close(self, hurwitz(-1, 1).value, -1 / 12, 1e-12)
        with self.assertRaises(PoleAtOne):
            hurwitz(1, 0.5)

    def test_hurwitz_residue(self):
        h = 1e-6
        self.assertAlmostEqual((h * hurwitz(1 + h, 0.5).value).real, 1.0, places=5)
        for theta in (0, math.pi / 2, math.pi, 3 * math.pi / 2):
            offset = 1e-4 * cmath.exp(1j * theta)
            for w in (1, 0.3, 2 + 1j):
                self.assertLess(abs(offset * hurwitz(1 + offset, w).value - 1), 1e-3)

    def test_polylog(self):
        _close(self, polylog(1, 0.5).value, math.log(2), 1e-12)
        _close(self, polylog(2, 1).value, ZETA_2, 1e-9)
        _close(self, polylog(-1, 2).value, 2.0, 1e-12)
        zero = polylog(3, 0)
        self.assertEqual((zero.value, zero.method), (0, "closed_form"))

    def test_li1_closed(self):
        self.assertAlmostEqual(li1_closed(0.5), math.log(2), places=14)
        self.assertAlmostEqual(li1_closed(0), 0, places=15)
        self.assertAlmostEqual(li1_closed(-1), -math.log(2), places=14)
        with self.assertRaises(ArgumentExcluded):
            li1_closed(2)

    def test_polylog_order_one_matches_closed_form(self):
        rng = np.random.default_rng(21)
        points = [-2 + 1j, 0.5 + 0.5j, 3 + 2j, 3 - 2j]
        while len(points) < 100:
            z = complex(4.0 * rng.uniform(0.05, 1.0) * cmath.exp(1j * rng.uniform(-math.pi, math.pi)))
            if not on_cut_z(z, DEFAULT, 0.1) and abs(z - 1.0) >= 0.1:
                points.append(z)
        self.assertGreater(sum(abs(z) > 1 for z in points), 30)
        for z in points:
            _close(self, polylog(1, z).value, li1_closed(z), 1e-9)


class TestSelfCheck(unittest.TestCase):
    def test_suites_pass(self):
        reports = run()
        self.assertEqual([r.name for r in reports], list(SUITES))
        for report in reports:
            self.assertTrue(report.passed, f"{report.name}: {report.worst:.3g} at {report.detail}")
        counts = {report.name: report.checks for report in reports}
        self.assertEqual(counts, {"parameters": 20, "decomposition": 20, "contiguous": 50, "special-values": 600})

    def test_unknown_suite(self):
        with self.assertRaises(KeyError):
            run(["nope"])

    def test_parameter_points_cover_every_variant(self):
        for cfg in (DEFAULT, UPPER):
            points = parameter_points(cfg)
            variants = [classify(z, s, w, cfg).variant for z, s, w in points]
            self.assertEqual(len(points), 20)
            for variant in ("D1_full", "D1_w_on_cut", "D1_z_on_cut", "D1_both_on_cut"):
                self.assertEqual(variants.count(variant), 5, variant)


if __name__ == "__main__":
    unittest.main()
