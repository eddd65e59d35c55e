"""Main CLI entry point for lerchzeta."""

import csv
import io
import itertools
import json
import statistics
from pathlib import Path
from typing import Annotated, Any, Dict, List, NoReturn, Optional

import click
import typer
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.table import Table
from typer.core import TyperGroup

from lerchzeta import __version__
from lerchzeta.apostol import apostol_eval, apostol_exact, render
from lerchzeta.cli.parsing import format_complex, parse_complex, parse_grid
from lerchzeta.config import CliConfig, EvalResult, settings
from lerchzeta.errors import (
    EXIT_CHECK_FAILED,
    EXIT_USAGE,
    ArgumentExcluded,
    BranchConfigInvalid,
    LerchError,
    ParameterError,
    PoleAtOne,
    exit_code_for,
    handle_error,
)
from lerchzeta.identities import sample_deq, sweep
from lerchzeta.lerch import default_params, lerch_phi
from lerchzeta.lerch.selfcheck import SUITES
from lerchzeta.lerch.selfcheck import run as run_suites
from lerchzeta.utils.logconfig import configure_logging


class UsageExitGroup(TyperGroup):
    """Command group whose usage errors exit with status 64."""

    _HELP_ERRORS = tuple(
        cls for cls in (getattr(click.exceptions, "NoArgsIsHelpError", None),) if cls is not None
    )

    def _retag(self, error: click.UsageError) -> None:
        if not isinstance(error, self._HELP_ERRORS):
            error.exit_code = EXIT_USAGE

    def make_context(self, *args: Any, **kwargs: Any) -> click.Context:
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as e:
            self._retag(e)
            raise

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            self._retag(e)
            raise


app = typer.Typer(
    name="lerch",
    help="Lerch zeta function evaluator and functional-equation checker",
    add_completion=False,
    no_args_is_help=True,
    cls=UsageExitGroup,
)
console = Console()
err_console = Console(stderr=True)

EQUATIONS = {
    "lerch": ["lerch"],
    "apostol": ["apostol"],
    "apostol-minus": ["apostol_minus"],
    "lerch-pair": ["lerch_pair"],
    "diffdiff": [f"diff_diff_{k}" for k in range(1, 5)],
}
EQUATIONS["all"] = [name for names in list(EQUATIONS.values()) for name in names]

# Largest rounding amplification accepted for numeric B_r near z = 1.
MAX_AMPLIFICATION = 1e8

TABLE_HEADER = ["z_re", "z_im", "s_re", "s_im", "w_re", "w_im", "phi_re", "phi_im", "err", "method"]

# Options shared by every command
PhiOption = Annotated[float, typer.Option("--phi", help="Cut angle of the w-plane")]
PhiPrimeOption = Annotated[float, typer.Option("--phi-prime", help="Cut angle of the z-plane")]
TolOption = Annotated[Optional[float], typer.Option("--tol", help="Target tolerance (LERCH_DEFAULT_TOL)")]
FormatOption = Annotated[str, typer.Option("--format", help="Output format: text, json or csv")]
VerboseOption = Annotated[bool, typer.Option("--verbose", "-v", help="Log parameter and contour choices")]
OutOption = Annotated[Optional[Path], typer.Option("--out", help="Write the output to this file")]
ComplexOption = Annotated[complex, typer.Option(parser=parse_complex, help="Complex literal such as 1.5-0.25i")]


def _setup(
    phi: float,
    phi_prime: float,
    tol: Optional[float],
    output_format: str,
    verbose: bool,
    **overrides: Any,
) -> CliConfig:
    configure_logging(verbose or settings.verbose)
    if output_format not in ("text", "json", "csv"):
        raise typer.BadParameter(f"unknown format {output_format!r}; use text, json or csv")
    try:
        options = CliConfig(
            phi=phi,
            phi_prime=phi_prime,
            tol=tol if tol is not None else settings.default_tol,
            format=output_format,
            **{k: v for k, v in overrides.items() if v is not None},
        )
        options.branch()
    except ValidationError as e:
        first = e.errors()[0]
        field = str(first["loc"][0]) if first["loc"] else ""
        message = f"{field}: {first['msg']}"
        _fail(BranchConfigInvalid(message) if field.startswith("phi") else ParameterError(message))
    return options


def _fail(error: Exception) -> NoReturn:
    err_console.print(f"[bold red]Error:[/bold red] {escape(handle_error(error))}")
    raise typer.Exit(code=exit_code_for(error))


def _emit(text: str, out: Optional[Path]) -> None:
    if out is not None:
        out.write_text(text + "\n", encoding="utf-8")
    else:
        typer.echo(text)


def _csv(rows: List[List[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def _result_json(result: EvalResult) -> Dict[str, Any]:
    return {
        "value": {"re": result.value.real, "im": result.value.imag},
        "err": result.abs_err_est,
        "method": result.method,
        "domain": result.domain.model_dump(),
        "params": result.params.model_dump() if result.params is not None else None,
        "warnings": result.warnings,
    }


@app.command("eval")
def evaluate(
    z: ComplexOption,
    s: ComplexOption,
    w: ComplexOption,
    method: Annotated[str, typer.Option(help="auto, series or continuation")] = "auto",
    alpha: Annotated[Optional[float], typer.Option("--alpha", help="Override for alpha")] = None,
    head: Annotated[Optional[int], typer.Option("--N", help="Override for the head length N")] = None,
    order: Annotated[Optional[int], typer.Option("--m", help="Override for the Taylor order m")] = None,
    phi: PhiOption = settings.phi,
    phi_prime: PhiPrimeOption = settings.phi_prime,
    tol: TolOption = None,
    output_format: FormatOption = "text",
    verbose: VerboseOption = False,
    out: OutOption = None,
):
    """Evaluate Phi(z, s, w).

    Examples:
        lerch eval --z 0.5 --s 2 --w 1
        lerch eval --z 2 --s 2 --w 1 --format json
    """
    if method not in ("auto", "series", "continuation"):
        raise typer.BadParameter(f"unknown method {method!r}")
    options = _setup(phi, phi_prime, tol, output_format, verbose, alpha=alpha, N=head, m=order)
    cfg = options.branch()
    try:
        params = None
        if any(v is not None for v in (options.alpha, options.N, options.m)):
            base = default_params(z, s, w, cfg, options.tol)
            updates = {"alpha": options.alpha, "N": options.N, "m": options.m}
            params = base.model_copy(update={k: v for k, v in updates.items() if v is not None})
        result = lerch_phi(z, s, w, cfg, p=params, method=method, tol=options.tol)  # type: ignore[arg-type]
    except LerchError as e:
        _fail(e)

    if options.format == "json":
        _emit(json.dumps(_result_json(result)), out)
    elif options.format == "csv":
        row = [z.real, z.imag, s.real, s.imag, w.real, w.imag, result.value.real, result.value.imag]
        _emit(_csv([TABLE_HEADER, row + [result.abs_err_est, result.method]]), out)
    elif out is not None:
        _emit(f"{format_complex(result.value)} ± {result.abs_err_est:.3g} ({result.method})", out)
    else:
        console.print(f"[bold]Phi[/bold] = {format_complex(result.value)}")
        console.print(f"[dim]error estimate:[/dim] {result.abs_err_est:.3g}")
        console.print(f"[dim]method:[/dim] {result.method}")
        console.print(f"[dim]domain:[/dim] {result.domain.variant}")
        if result.params is not None:
            p = result.params
            console.print(f"[dim]params:[/dim] alpha={p.alpha:.6g} N={p.N} m={p.m}")
        for warning in result.warnings:
            console.print(f"[yellow]warning:[/yellow] {escape(warning)}")


@app.command()
def bernoulli(
    r: Annotated[int, typer.Option(min=0, help="Order r >= 0")],
    exact: Annotated[bool, typer.Option("--exact", help="Print B_r in the (u, w) basis, u = 1/(z-1)")] = False,
    z: Annotated[Optional[complex], typer.Option(parser=parse_complex, help="z for numeric output")] = None,
    w: Annotated[Optional[complex], typer.Option(parser=parse_complex, help="w for numeric output")] = None,
    output_format: FormatOption = "text",
    verbose: VerboseOption = False,
    out: OutOption = None,
):
    """Print the Apostol-Bernoulli function B_r(z, w).

    Examples:
        lerch bernoulli --r 2 --exact
        lerch bernoulli --r 3 --z 2 --w 0.5
    """
    configure_logging(verbose or settings.verbose)
    if exact:
        text = render(apostol_exact(r))
        if output_format == "json":
            text = json.dumps({"r": r, "exact": text})
        _emit(text, out)
        return
    if z is None or w is None:
        raise typer.BadParameter("numeric output needs --z and --w (or pass --exact)")
    try:
        value = apostol_eval(r, z, w, max_amplification=MAX_AMPLIFICATION)
    except LerchError as e:
        _fail(e)
    if output_format == "json":
        _emit(json.dumps({"r": r, "value": {"re": value.real, "im": value.imag}}), out)
    else:
        _emit(format_complex(value), out)


@app.command()
def verify(
    equation: Annotated[str, typer.Option(help="lerch, apostol, apostol-minus, lerch-pair, diffdiff or all")] = "all",
    samples: Annotated[int, typer.Option(min=1, help="Points sampled from the domain")] = 20,
    seed: Annotated[int, typer.Option(help="Seed of the sampler")] = 0,
    threshold: Annotated[float, typer.Option(help="Largest accepted |residual|/(1+|lhs|)")] = 1e-7,
    phi: PhiOption = settings.phi,
    phi_prime: PhiPrimeOption = settings.phi_prime,
    tol: TolOption = None,
    output_format: FormatOption = "text",
    verbose: VerboseOption = False,
    out: OutOption = None,
):
    """Check the functional equations at seeded random points.

    Examples:
        lerch verify --equation lerch --samples 50 --seed 0
        lerch verify --equation all --format csv
    """
    if equation not in EQUATIONS:
        raise typer.BadParameter(f"unknown equation {equation!r}; choose from {', '.join(EQUATIONS)}")
    options = _setup(phi, phi_prime, tol, output_format, verbose, seed=seed)
    try:
        cfg = options.branch()
        points = sample_deq(samples, options.seed, cfg)
        reports = {
            name: sweep(name, points, cfg, options.tol)  # type: ignore[arg-type]
            for name in EQUATIONS[equation]
        }
    except LerchError as e:
        _fail(e)

    summary = []
    for name, items in reports.items():
        scaled = [r.scaled_residual for r in items]
        summary.append((name, max(scaled), statistics.median(scaled), max(scaled) <= threshold))
    passed = all(ok for *_, ok in summary)

    if options.format == "csv":
        rows: List[List[Any]] = [["equation", "a", "s", "w", "residual"]]
        for name, items in reports.items():
            for r in items:
                a, s_, w_ = r.point
                rows.append([name, format_complex(a), format_complex(s_), format_complex(w_), abs(r.residual)])
        _emit(_csv(rows), out)
    elif options.format == "json":
        payload = [
            {"equation": name, "max": worst, "median": median, "passed": ok}
            for name, worst, median, ok in summary
        ]
        _emit(json.dumps({"passed": passed, "threshold": threshold, "equations": payload}), out)
    else:
        table = Table(title=f"Residuals at {samples} points (seed {options.seed})")
        table.add_column("equation")
        table.add_column("max", justify="right")
        table.add_column("median", justify="right")
        table.add_column("status")
        for name, worst, median, ok in summary:
            table.add_row(name, f"{worst:.3g}", f"{median:.3g}", "[green]PASS[/green]" if ok else "[red]FAIL[/red]")
        console.print(table)

    if not passed:
        raise typer.Exit(code=EXIT_CHECK_FAILED)


@app.command()
def selftest(
    suite: Annotated[Optional[List[str]], typer.Option("--suite", help="Suite to run; repeatable")] = None,
    phi: PhiOption = settings.phi,
    phi_prime: PhiPrimeOption = settings.phi_prime,
    output_format: FormatOption = "text",
    verbose: VerboseOption = False,
    out: OutOption = None,
):
    """Run the built-in consistency suites.

    Suites: parameters, decomposition, contiguous, special-values.
    """
    for name in suite or []:
        if name not in SUITES:
            raise typer.BadParameter(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    options = _setup(phi, phi_prime, None, output_format, verbose)
    try:
        reports = run_suites(suite, options.branch())
    except LerchError as e:
        _fail(e)

    if options.format == "json":
        _emit(json.dumps([r.model_dump() for r in reports]), out)
    elif options.format == "csv":
        rows: List[List[Any]] = [["suite", "passed", "worst", "threshold", "checks"]]
        rows += [[r.name, r.passed, r.worst, r.threshold, r.checks] for r in reports]
        _emit(_csv(rows), out)
    else:
        table = Table(title="Self-test")
        for column in ("suite", "status", "worst", "threshold", "checks"):
            table.add_column(column)
        for r in reports:
            status = "[green]PASS[/green]" if r.passed else "[red]FAIL[/red]"
            table.add_row(r.name, status, f"{r.worst:.3g}", f"{r.threshold:.0e}", str(r.checks))
        console.print(table)

    if not all(r.passed for r in reports):
        raise typer.Exit(code=EXIT_CHECK_FAILED)


@app.command()
def table(
    grid: Annotated[str, typer.Option(help='Grid such as "z=0:0.9:10,s=2:2:1,w=1:1:1"')],
    phi: PhiOption = settings.phi,
    phi_prime: PhiPrimeOption = settings.phi_prime,
    tol: TolOption = None,
    output_format: FormatOption = "csv",
    verbose: VerboseOption = False,
    out: OutOption = None,
):
    """Tabulate Phi on a product grid as CSV.

    Excluded points (w a nonpositive integer) and the pole z = 1, s = 1 get
    empty value fields and their kind in the method column.
    """
    axes = parse_grid(grid)
    options = _setup(phi, phi_prime, tol, output_format, verbose)
    cfg = options.branch()
    rows: List[List[Any]] = []
    for z, s, w in itertools.product(axes["z"], axes["s"], axes["w"]):
        coords: List[Any] = [z.real, z.imag, s.real, s.imag, w.real, w.imag]
        try:
            result = lerch_phi(z, s, w, cfg, tol=options.tol)
        except (ArgumentExcluded, PoleAtOne) as e:
            rows.append(coords + ["", "", "", "pole" if isinstance(e, PoleAtOne) else "excluded"])
            continue
        except LerchError as e:
            _fail(e)
            continue
        rows.append(coords + [result.value.real, result.value.imag, result.abs_err_est, result.method])

    if options.format == "json":
        _emit(json.dumps([dict(zip(TABLE_HEADER, row)) for row in rows]), out)
    else:
        _emit(_csv([TABLE_HEADER] + rows), out)


@app.command()
def version():
    """Display the version of lerchzeta."""
    console.print(f"[bold]lerchzeta[/bold] version {__version__}")


@app.command()
def config():
    """Display current configuration."""
    console.print("\n[bold]Current Configuration:[/bold]\n")
    console.print(f"Default tolerance: {settings.default_tol}")
    console.print(f"phi: {settings.phi}")
    console.print(f"phi': {settings.phi_prime}")
    console.print(f"Max quadrature evaluations: {settings.max_quad_evaluations}")
    console.print(f"Max series terms: {settings.max_series_terms}")
    console.print(f"Verbose: {settings.verbose}")
    console.print()


if __name__ == "__main__":
    app()
