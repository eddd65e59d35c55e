import json
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

import typer
from typer.testing import CliRunner

from lerchzeta.cli import app
from lerchzeta.cli.parsing import format_complex, parse_complex, parse_grid
from lerchzeta.config import BranchConfig, settings
from lerchzeta.identities import sweep
from lerchzeta.lerch import lerch_phi, phi_series

runner = CliRunner()


class TestParsing(unittest.TestCase):
    def test_complex_literals(self):
        self.assertEqual(parse_complex("2"), 2)
        self.assertEqual(parse_complex("-0.5i"), -0.5j)
        self.assertEqual(parse_complex("1.5-0.25i"), 1.5 - 0.25j)
        self.assertEqual(parse_complex("1e-3+2i"), 0.001 + 2j)

    def test_bad_literals(self):
        for text in ("", "abc", "1 + 2i", "1+2k"):
            with self.assertRaises(typer.BadParameter):
                parse_complex(text)

    def test_format_round_trip(self):
        value = 1.1644810529300041 - 1e-300j
        self.assertEqual(parse_complex(format_complex(value)), value)

    def test_grid(self):
        grid = parse_grid("z=0:0.9:10,s=2:2:1,w=1-1i:1+1i:3")
        self.assertEqual(len(grid["z"]), 10)
        self.assertAlmostEqual(grid["z"][-1], 0.9)
        self.assertEqual(grid["s"], [2])
        self.assertEqual(grid["w"][1], 1)
        self.assertEqual(parse_grid(""), {"z": [], "s": [], "w": []})


class TestEval(unittest.TestCase):
    def test_series_point(self):
        result = runner.invoke(app, ["eval", "--z", "0.5", "--s", "2", "--w", "1"])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("1.16448105293", result.output)
        self.assertIn("series", result.output)

    def test_zero(self):
        result = runner.invoke(app, ["eval", "--z", "0", "--s", "2", "--w", "1"])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("1+0i", result.output)

    def test_pole(self):
        result = runner.invoke(app, ["eval", "--z", "1", "--s", "1", "--w", "0.5"])
        self.assertEqual(result.exit_code, 2)
        self.assertIn("simple pole at s=1", result.output)

    def test_excluded(self):
        result = runner.invoke(app, ["eval", "--z", "0.5", "--s", "2", "--w", "0"])
        self.assertEqual(result.exit_code, 2)

    def test_json_reproduces_the_library_value(self):
        args = ["eval", "--z", "2", "--s", "2", "--w", "1", "--format", "json"]
        first = runner.invoke(app, args)
        second = runner.invoke(app, args)
        self.assertEqual(first.exit_code, 0, first.output)
        self.assertEqual(first.output, second.output)
        payload = json.loads(first.output)
        expected = lerch_phi(2, 2, 1).value
        self.assertEqual(complex(payload["value"]["re"], payload["value"]["im"]), expected)
        self.assertEqual(payload["method"], "continuation")
        self.assertEqual(payload["domain"]["variant"], "D1_z_on_cut")
        self.assertIsNotNone(payload["params"])

    def test_parameter_overrides(self):
        result = runner.invoke(
            app,
            ["eval", "--z", "0.5", "--s", "2", "--w", "1", "--method", "continuation", "--alpha", "2", "--N", "3", "--m", "4", "--format", "json"],
        )
        self.assertEqual(result.exit_code, 0, result.output)
        payload = json.loads(result.output)
        self.assertEqual((payload["params"]["alpha"], payload["params"]["N"], payload["params"]["m"]), (2.0, 3, 4))
        self.assertAlmostEqual(payload["value"]["re"], 1.1644810529300041, places=10)

    def test_invalid_override(self):
        result = runner.invoke(app, ["eval", "--z", "0.5", "--s", "2", "--w", "1", "--alpha", "0.5"])
        self.assertEqual(result.exit_code, 2)

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / "value.txt"
            result = runner.invoke(app, ["eval", "--z", "0.5", "--s", "2", "--w", "1", "--out", str(target)])
            self.assertEqual(result.exit_code, 0, result.output)
            self.assertIn("(series)", target.read_text(encoding="utf-8"))

    def test_usage_errors(self):
        for args in (
            ["eval", "--z", "abc", "--s", "2", "--w", "1"],
            ["eval", "--z", "0.5", "--s", "2"],
            ["eval", "--z", "0.5", "--s", "2", "--w", "1", "--format", "xml"],
            ["eval", "--z", "0.5", "--s", "2", "--w", "1", "--method", "magic"],
            ["nosuchcommand"],
        ):
            self.assertEqual(runner.invoke(app, args).exit_code, 64, args)

    def test_invalid_branch(self):
        result = runner.invoke(app, ["eval", "--z", "0.5", "--s", "2", "--w", "1", "--phi", "0"])
        self.assertEqual(result.exit_code, 2)


class TestBernoulli(unittest.TestCase):
    def test_exact(self):
        for r, expected in ((0, "0"), (1, "1·u"), (2, "2·u·w − 2·u − 2·u^2")):
            result = runner.invoke(app, ["bernoulli", "--r", str(r), "--exact"])
            self.assertEqual(result.exit_code, 0, result.output)
            self.assertEqual(result.output.strip(), expected)

    def test_numeric(self):
        result = runner.invoke(app, ["bernoulli", "--r", "2", "--z", "2", "--w", "1"])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(parse_complex(result.output.strip()), -2)

    def test_numeric_needs_both_arguments(self):
        self.assertEqual(runner.invoke(app, ["bernoulli", "--r", "2", "--z", "2"]).exit_code, 64)

    def test_ill_conditioned_near_one(self):
        result = runner.invoke(app, ["bernoulli", "--r", "12", "--z", "1.01", "--w", "0.5"])
        self.assertEqual(result.exit_code, 3)
        self.assertIn("IllConditioned", result.output)


class TestVerify(unittest.TestCase):
    def test_passes(self):
        result = runner.invoke(app, ["verify", "--equation", "lerch", "--samples", "4", "--seed", "0"])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("PASS", result.output)

    def test_threshold_below_rounding(self):
        result = runner.invoke(app, ["verify", "--equation", "lerch", "--samples", "2", "--threshold", "1e-30"])
        self.assertEqual(result.exit_code, 1)

    def test_csv_rows(self):
        result = runner.invoke(app, ["verify", "--equation", "apostol", "--samples", "3", "--format", "csv"])
        self.assertEqual(result.exit_code, 0, result.output)
        lines = result.output.strip().splitlines()
        self.assertEqual(lines[0], "equation,a,s,w,residual")
        self.assertEqual(len(lines), 4)
        self.assertTrue(all(line.startswith("apostol,") for line in lines[1:]))

    def test_deterministic(self):
        args = ["verify", "--equation", "apostol-minus", "--samples", "3", "--seed", "5", "--format", "json"]
        first, second = runner.invoke(app, args), runner.invoke(app, args)
        self.assertEqual(first.output, second.output)
        self.assertTrue(json.loads(first.output)["passed"])

    def test_unknown_equation(self):
        self.assertEqual(runner.invoke(app, ["verify", "--equation", "riemann"]).exit_code, 64)

    def test_tolerance_reaches_sweep(self):
        with patch("lerchzeta.cli.main.sweep", wraps=sweep) as swept:
            result = runner.invoke(app, ["verify", "--equation", "apostol", "--samples", "2", "--tol", "3e-11"])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(swept.call_args.args[3], 3e-11)

    def test_default_tolerance_from_settings(self):
        with patch.object(settings, "default_tol", 4e-11), patch("lerchzeta.cli.main.sweep", wraps=sweep) as swept:
            result = runner.invoke(app, ["verify", "--equation", "lerch", "--samples", "2"])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(swept.call_args.args[3], 4e-11)


class TestSelftest(unittest.TestCase):
    def test_single_suite(self):
        result = runner.invoke(app, ["selftest", "--suite", "decomposition", "--format", "json"])
        self.assertEqual(result.exit_code, 0, result.output)
        reports = json.loads(result.output)
        self.assertEqual([r["name"] for r in reports], ["decomposition"])
        self.assertTrue(reports[0]["passed"])

    def test_all_suites(self):
        result = runner.invoke(app, ["selftest"])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertNotIn("FAIL", result.output)

    def test_unknown_suite(self):
        self.assertEqual(runner.invoke(app, ["selftest", "--suite", "unknown"]).exit_code, 64)


class TestTable(unittest.TestCase):
    def test_series_grid(self):
        result = runner.invoke(app, ["table", "--grid", "z=0:0.9:10,s=2:2:1,w=1:1:1"])
        self.assertEqual(result.exit_code, 0, result.output)
        lines = result.output.strip().splitlines()
        self.assertEqual(lines[0], "z_re,z_im,s_re,s_im,w_re,w_im,phi_re,phi_im,err,method")
        self.assertEqual(len(lines), 11)
        values = [float(line.split(",")[6]) for line in lines[1:]]
        self.assertEqual(values, sorted(values))
        z = float(lines[-1].split(",")[0])
        self.assertAlmostEqual(values[-1], phi_series(z, 2, 1, BranchConfig()).value.real, places=12)

    def test_excluded_row(self):
        result = runner.invoke(app, ["table", "--grid", "z=0.5:0.5:1,s=2:2:1,w=-1:1:2"])
        self.assertEqual(result.exit_code, 0, result.output)
        rows = result.output.strip().splitlines()[1:]
        self.assertTrue(rows[0].endswith(",,,,excluded"))
        self.assertTrue(rows[1].endswith(",series"))

    def test_pole_row(self):
        result = runner.invoke(app, ["table", "--grid", "z=1:1:1,s=1:1:1,w=0.5:0.5:1"])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertTrue(result.output.strip().splitlines()[1].endswith("pole"))

    def test_empty_grid(self):
        result = runner.invoke(app, ["table", "--grid", ""])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(result.output.strip(), "z_re,z_im,s_re,s_im,w_re,w_im,phi_re,phi_im,err,method")

    def test_malformed_grid(self):
        for grid in ("z=0:1", "z=0:1:2,s=1:1:1", "q=0:1:2,s=1:1:1,w=1:1:1"):
            self.assertEqual(runner.invoke(app, ["table", "--grid", grid]).exit_code, 64, grid)


class TestInfo(unittest.TestCase):
    def test_version(self):
        result = runner.invoke(app, ["version"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("lerchzeta version", result.output)

    def test_config(self):
        result = runner.invoke(app, ["config"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("Default tolerance", result.output)


if __name__ == "__main__":
    unittest.main()
