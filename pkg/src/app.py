"""Command-line interface for ore-sra.

Every subcommand builds its algebra from --p/--r/--m/--lambda, runs one
computation and prints the result on stdout as JSON (default), an aligned
text table, or CSV where the result is tabular. Logs go to stderr.

Exit codes: 0 success, 1 failed check, 2 usage or precondition error,
3 resource bound exceeded.
"""

import json
import sys
from typing import Any, Callable, Dict, Iterable, List, Optional

import click
import numpy as np
from rich.console import Console
from rich.table import Table

from . import __version__
from .center import (
    central_generators,
    delta_identity_report,
    is_central,
    ordered_product_big,
    reversed_product_report,
    t1_product_claim,
    verify_presentation,
)
from .combinatorics import (
    andre_triangle,
    delta_lambda_triangle,
    delta_triangle,
    f_sequence,
    f_sequence_closed_form,
    generalized_triangles,
    homogenize,
    triangles_equal,
    weighted_row_sums,
)
from .combinatorics.partitions import delta_power_from_triangle
from .homology import (
    build_resolution,
    ext_dims,
    singular_pair_condition,
    source_resolution,
    t1_singular_variant_report,
    weyl_annihilator_check,
    weyl_ext,
)
from .ore import AlgebraContext, delta_power, format_R
from .ore.element import re_equal
from .reps import (
    bar_dimension,
    is_irreducible,
    reference_bar_dimension,
    simple_module,
    singular_locus_matrices,
    sweep_loci,
    verma_truncation,
)
from .reps.reduction import LocusRow
from .reps.verma import as_scalar
from .scalars.field import format_element
from .utils.config import Config, get_config, reload_config
from .utils.errors import OreAlgebraError, PreconditionError, exit_code_for
from .utils.logging import get_algebra_logger, setup_logging
from .verification import SUITES, VerificationSuite

console = Console()
err_console = Console(stderr=True)
logger = get_algebra_logger(__name__)

FORMATS = ["json", "text", "csv"]


class OreGroup(click.Group):
    """Click group that turns library errors into exit codes."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except OreAlgebraError as e:
            err_console.print(f"[bold red]{type(e).__name__}:[/bold red] {e.message}")
            logger.error("Command failed", data={"error": type(e).__name__, "code": e.code})
            ctx.exit(exit_code_for(e))


# Shared options

def common_options(func: Callable) -> Callable:
    options = [
        click.option("--format", "output_format", type=click.Choice(FORMATS), default="json", help="Output format"),
        click.option("--config", "-c", "config_path", type=click.Path(dir_okay=False), help="Configuration file path"),
        click.option("--seed", type=int, default=None, help="Seed for randomized steps (config default 0)"),
        click.option("--jobs", type=click.IntRange(min=1), default=None, help="Worker threads for sweeps"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def algebra_options(func: Callable) -> Callable:
    options = [
        click.option("--p", "p", type=int, default=None, help="Odd prime characteristic"),
        click.option("--r", "r", type=click.IntRange(min=1), default=1, show_default=True, help="Rank of E = (Z/p)^r"),
        click.option("--m", "m", type=click.IntRange(min=1), default=None, help="Extension degree of the field (default 2r)"),
        click.option("--lambda", "lam", default="g", show_default=True, help="lambda as an expression over g1..gr"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def prepare(config_path: Optional[str], seed: Optional[int], jobs: Optional[int]) -> Config:
    """Load configuration, apply flag overrides and set up logging."""
    config = (reload_config(config_path) if config_path else get_config()).model_copy(deep=True)
    if seed is not None:
        config.compute.seed = seed
    if jobs is not None:
        config.compute.jobs = jobs
    setup_logging(config.logging)
    return config


def build_context(config: Config, p: Optional[int], r: int, m: Optional[int], lam: str) -> AlgebraContext:
    p = p if p is not None else config.scalars.default_p
    m = m if m is not None else config.scalars.default_m
    return AlgebraContext.create(p, r, lam, m=m, config=config.algebra)


# Output

def emit(
    payload: Dict[str, Any],
    output_format: str,
    table: Optional[Table] = None,
    csv_header: Optional[str] = None,
    csv_rows: Optional[Iterable[str]] = None,
) -> None:
    if output_format == "json":
        click.echo(json.dumps(payload, indent=2, default=str))
    elif output_format == "csv":
        if csv_header is None or csv_rows is None:
            raise click.UsageError("csv output is only available for tabular results")
        click.echo(csv_header)
        for row in csv_rows:
            click.echo(row)
    else:
        if table is None:
            table = key_value_table(payload)
        console.print(table)


def key_value_table(payload: Dict[str, Any], title: Optional[str] = None) -> Table:
    table = Table(title=title, show_header=True, header_style="bold magenta")
    table.add_column("Key", style="cyan")
    table.add_column("Value", style="white")
    for key, value in payload.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, default=str)
        table.add_row(str(key), str(value))
    return table


def triangle_csv(rows: List[List[Any]]) -> List[str]:
    return [",".join(str(v) for v in row) for row in rows]


@click.group(cls=OreGroup)
@click.version_option(version=__version__)
def cli() -> None:
    """ore-sra: exact computations in H_lambda = (k<x,y> x E)/(xy - yx - lambda)."""


@cli.command()
@algebra_options
@click.option("--products", is_flag=True, help="Also build the ordered product and t = 1 product forms")
@common_options
def center(p, r, m, lam, products, output_format, config_path, seed, jobs):
    """Central generators of H_lambda with centrality and presentation checks."""
    config = prepare(config_path, seed, jobs)
    ctx = build_context(config, p, r, m, lam)
    gens = central_generators(ctx)
    payload: Dict[str, Any] = {
        "algebra": ctx.describe(),
        "generators": gens.to_json(),
        "is_central": {name: is_central(h, ctx) for name, h in gens.elements().items()},
        "delta_identity": delta_identity_report(ctx),
    }
    if gens.case == "t0":
        report = verify_presentation(gens, ctx)
        payload["presentation"] = {
            k: format_element(v) if not isinstance(v, bool) else v for k, v in report.items()
        }
    if products:
        if ctx.t == 1:
            payload["product_form"] = t1_product_claim(ctx)
        exps = ctx.ga.group_exponent(ctx.lam)
        if exps is not None and any(exps):
            payload["ordered_product_central"] = is_central(ordered_product_big(ctx), ctx)
            payload["reversed_product"] = reversed_product_report(ctx)

    table = Table(title="Central generators", show_header=True, header_style="bold magenta")
    table.add_column("Name", style="cyan")
    table.add_column("Element", style="white")
    table.add_column("Central", style="green")
    for name, h in gens.elements().items():
        table.add_row(name, str(h), "yes" if payload["is_central"][name] else "no")
    emit(payload, output_format, table=table)


@cli.command()
@algebra_options
@click.option("--target", default="g", show_default=True, help="x, g, g1..gr or lambda")
@click.option("--n", "n", type=click.IntRange(min=0), required=True, help="Power of delta")
@common_options
def delta(p, r, m, lam, target, n, output_format, config_path, seed, jobs):
    """delta^n of x, g_i or lambda in R = kE[x]."""
    config = prepare(config_path, seed, jobs)
    ctx = build_context(config, p, r, m, lam)
    value = delta_power(ctx, target, n)
    payload: Dict[str, Any] = {
        "algebra": ctx.describe(),
        "target": target,
        "n": n,
        "x_degree": int(value.shape[0]) - 1,
        "value": format_R(ctx, value),
    }
    if ctx.r == 1 and target in ("g", "g1"):
        payload["matches_triangle"] = re_equal(value, delta_power_from_triangle(ctx, n))
    emit(payload, output_format)


@cli.command()
@click.option("--rows", type=click.IntRange(min=1), default=5, show_default=True, help="Rows n = 0..rows-1")
@click.option("--cols", type=click.IntRange(min=1), default=8, show_default=True, help="Columns k = 0..cols-1")
@common_options
def andre(rows, cols, output_format, config_path, seed, jobs):
    """The Andre array A_(n,k) and its Euler antidiagonal sums."""
    prepare(config_path, seed, jobs)
    tri = andre_triangle(rows - 1, cols - 1)
    grid = [[tri.get(n, k) for k in range(cols)] for n in range(rows)]
    payload = {
        "rows": grid,
        "euler": [tri.antidiagonal_sum(n) for n in range(min(cols, 2 * rows))],
    }
    emit(
        payload,
        output_format,
        table=_grid_table("Andre numbers A(n, k)", grid),
        csv_header="n," + ",".join(f"k{k}" for k in range(cols)),
        csv_rows=triangle_csv([[n] + row for n, row in enumerate(grid)]),
    )


def _grid_table(title: str, grid: List[List[int]]) -> Table:
    table = Table(title=title, show_header=True, header_style="bold magenta")
    table.add_column("n", style="dim")
    for k in range(len(grid[0]) if grid else 0):
        table.add_column(f"k={k}", justify="right")
    for n, row in enumerate(grid):
        table.add_row(str(n), *(str(v) for v in row))
    return table


@cli.command()
@click.option("--n-max", type=click.IntRange(min=2), default=8, show_default=True, help="Largest n")
@common_options
def fseq(n_max, output_format, config_path, seed, jobs):
    """The partition polynomials F_n and their coefficient sums."""
    prepare(config_path, seed, jobs)
    rows = []
    for n in range(2, n_max + 1):
        poly = f_sequence(n)
        rows.append({
            "n": n,
            "F": str(poly),
            "coefficient_sum": poly.coefficient_sum(),
            "closed_form_agrees": poly == f_sequence_closed_form(n),
        })
    table = Table(title="F_n", show_header=True, header_style="bold magenta")
    for column in ("n", "F", "sum", "closed form"):
        table.add_column(column)
    for row in rows:
        table.add_row(str(row["n"]), row["F"], str(row["coefficient_sum"]), "yes" if row["closed_form_agrees"] else "no")
    emit(
        {"sequence": rows},
        output_format,
        table=table,
        csv_header="n,coefficient_sum,closed_form_agrees",
        csv_rows=[f"{row['n']},{row['coefficient_sum']},{str(row['closed_form_agrees']).lower()}" for row in rows],
    )


@cli.command()
@click.option("--kind", type=click.Choice(["generalized", "partition"]), default="generalized", show_default=True)
@click.option("--a", "a", type=click.IntRange(min=1), default=2, show_default=True, help="lambda = g^a")
@click.option("--rows", type=click.IntRange(min=1), default=4, show_default=True)
@click.option("--cols", type=click.IntRange(min=1), default=7, show_default=True)
@common_options
def triangles(kind, a, rows, cols, output_format, config_path, seed, jobs):
    """The T and U triangles for lambda = g^a, or the partition triangles."""
    prepare(config_path, seed, jobs)
    if kind == "partition":
        n_max = rows
        direct = delta_triangle(n_max)
        payload = {
            "delta_g": {f"{n},{k}": str(v) for (n, k), v in sorted(direct.items())},
            "delta_lambda": {f"{n},{k}": str(v) for (n, k), v in sorted(delta_lambda_triangle(n_max).items())},
            "homogenization_matches": triangles_equal(homogenize(direct), delta_lambda_triangle(n_max)),
        }
        emit(payload, output_format)
        return

    T, U = generalized_triangles(a, rows - 1, cols - 1)
    A = andre_triangle(rows - 1, cols - 1)
    t_grid = [[T.get(n, k) for k in range(cols)] for n in range(rows)]
    u_grid = [[U.get(n, k) for k in range(cols)] for n in range(rows)]
    payload = {
        "a": a,
        "T": t_grid,
        "U": u_grid,
        "u_scaling": all(U.get(n, k) == a ** (n + k) * A.get(n, k) for n in range(rows) for k in range(cols)),
        "row_sums": weighted_row_sums(a, rows + cols - 1),
    }
    table = _grid_table(f"T triangle, a = {a}", t_grid)
    csv_rows = triangle_csv([["T", n] + row for n, row in enumerate(t_grid)] + [["U", n] + row for n, row in enumerate(u_grid)])
    emit(payload, output_format, table=table, csv_header="triangle,n," + ",".join(f"k{k}" for k in range(cols)), csv_rows=csv_rows)


@cli.command()
@algebra_options
@click.option("--alpha", default="0", show_default=True, help="x-eigenvalue, a field literal")
@click.option("--beta", default="0", show_default=True, help="Central character of the big generator")
@click.option("--irreducible/--no-irreducible", default=True, show_default=True, help="Run the irreducibility test")
@click.option("--closed-form", is_flag=True, help="Use the closed-form singular-locus matrices (lambda = g, alpha = 0)")
@click.option("--truncation", type=click.IntRange(min=1), default=None, help="Build the reducible quotient of this dimension instead")
@common_options
def simple(p, r, m, lam, alpha, beta, irreducible, closed_form, truncation, output_format, config_path, seed, jobs):
    """The simple module S_(alpha, beta) as explicit matrices."""
    config = prepare(config_path, seed, jobs)
    ctx = build_context(config, p, r, m, lam)
    if closed_form and truncation:
        raise click.UsageError("--closed-form and --truncation are exclusive")
    if closed_form:
        if as_scalar(ctx, alpha) != 0:
            raise PreconditionError("closed-form matrices describe alpha = 0")
        rep = singular_locus_matrices(ctx.p, beta, ctx=ctx)
    elif truncation:
        rep = verma_truncation(alpha, truncation, ctx, beta)
    else:
        rep = simple_module(alpha, beta, ctx)
    payload: Dict[str, Any] = {"algebra": ctx.describe(), "kind": rep.kind, "module": rep.to_json()}
    if irreducible:
        payload["irreducibility"] = is_irreducible(rep, config.reps, rng=np.random.default_rng(config.compute.seed)).to_json()
    emit(payload, output_format)


@cli.command("sweep-loci")
@algebra_options
@click.option("--alphas", default=None, help="Comma-separated alpha values (default F_p)")
@click.option("--betas", default=None, help="Comma-separated beta values (default F_p)")
@common_options
def sweep_loci_command(p, r, m, lam, alphas, betas, output_format, config_path, seed, jobs):
    """Simple modules over a grid of central characters."""
    config = prepare(config_path, seed, jobs)
    ctx = build_context(config, p, r, m, lam)
    split = lambda text: [v.strip() for v in text.split(",")] if text else None  # noqa: E731
    rows = sweep_loci(ctx, split(alphas), split(betas), jobs=config.compute.jobs)
    table = Table(title="Locus of simples", show_header=True, header_style="bold magenta")
    for column in LocusRow.CSV_HEADER.split(",") + ["smooth", "azumaya"]:
        table.add_column(column)
    for row in rows:
        data = row.to_json()
        table.add_row(*(str(data[c]) for c in LocusRow.CSV_HEADER.split(",")), str(row.smooth), str(row.azumaya))
    emit(
        {"algebra": ctx.describe(), "rows": [row.to_json() for row in rows]},
        output_format,
        table=table,
        csv_header=LocusRow.CSV_HEADER,
        csv_rows=[row.to_csv() for row in rows],
    )


@cli.command("bar-dim")
@algebra_options
@click.option("--alpha", default="0", show_default=True)
@click.option("--beta", default="0", show_default=True)
@common_options
def bar_dim(p, r, m, lam, alpha, beta, output_format, config_path, seed, jobs):
    """Dimension of the central reduction at (alpha, beta) (r = 1, t = 0)."""
    config = prepare(config_path, seed, jobs)
    ctx = build_context(config, p, r, m, lam)
    dim = bar_dimension(alpha, beta, ctx)
    reference = reference_bar_dimension(alpha, ctx)
    simple_dim = simple_module(alpha, beta, ctx).dim
    payload = {
        "algebra": ctx.describe(),
        "alpha": format_element(as_scalar(ctx, alpha)),
        "beta": format_element(as_scalar(ctx, beta)),
        "dim": dim,
        "reference": reference,
        "matches_reference": dim == reference,
        "simple_dim": simple_dim,
        "azumaya": dim == simple_dim**2,
    }
    emit(payload, output_format)


@cli.command()
@algebra_options
@click.option("--kind", type=click.Choice(["auto", "azumaya", "singular", "weyl", "t1-variant"]), default="auto", show_default=True)
@click.option("--alpha", default="0", show_default=True)
@click.option("--beta", default="0", show_default=True)
@click.option("--alpha2", default=None, help="Target alpha (default: alpha)")
@click.option("--beta2", default=None, help="Target beta (default: beta)")
@click.option("--imax", type=click.IntRange(min=0), default=None, help="Largest Ext degree (config default 6)")
@click.option("--weyl-target", type=click.Choice(["H", "A"]), default="H", show_default=True)
@click.option("--degree", type=click.IntRange(min=0), default=None, help="PBW truncation for the Weyl module")
@common_options
def ext(p, r, m, lam, kind, alpha, beta, alpha2, beta2, imax, weyl_target, degree, output_format, config_path, seed, jobs):
    """dim Ext^i between simples, from the resolution templates."""
    config = prepare(config_path, seed, jobs)
    ctx = build_context(config, p, r, m, lam)
    i_max = imax if imax is not None else config.homology.i_max

    if kind == "t1-variant":
        emit({"algebra": ctx.describe(), "variant": t1_singular_variant_report(ctx, beta)}, output_format)
        return
    if kind == "weyl":
        degree = degree if degree is not None else config.homology.weyl_truncation
        table = weyl_ext(ctx, weyl_target, degree, i_max)
        payload = {"algebra": ctx.describe(), "ext": table.to_json()}
        if weyl_target == "H":
            payload["annihilator"] = weyl_annihilator_check(ctx, degree)
        emit(payload, output_format, csv_header="i,dim", csv_rows=[f"{i},{d}" for i, d in enumerate(table.dims)])
        return

    resolution = source_resolution(ctx, alpha, beta) if kind == "auto" else build_resolution(kind, ctx, alpha, beta)
    alpha2 = alpha2 if alpha2 is not None else alpha
    beta2 = beta2 if beta2 is not None else beta
    target = simple_module(alpha2, beta2, ctx)
    table = ext_dims(resolution, target, i_max)
    payload = {
        "algebra": ctx.describe(),
        "resolution": resolution.kind,
        "composites_checked": resolution.composites_checked,
        "ext": table.to_json(),
    }
    if resolution.kind == "singular" and target.beta != resolution.beta:
        payload["pair_condition"] = singular_pair_condition(ctx, resolution.beta, target.beta)

    out = Table(title=f"Ext^i (target dimension {table.target_dim})", show_header=True, header_style="bold magenta")
    for column in ("i", "dim", "field dim", "reference"):
        out.add_column(column, justify="right")
    for i, (d, fd) in enumerate(zip(table.dims, table.field_dims)):
        ref = table.reference[i] if table.reference else "-"
        out.add_row(str(i), str(d), str(fd), str(ref))
    emit(payload, output_format, table=out, csv_header="i,dim", csv_rows=[f"{i},{d}" for i, d in enumerate(table.dims)])


@cli.command()
@click.option("--suite", type=click.Choice(list(SUITES)), default="acceptance", show_default=True)
@click.option("--check", "checks", multiple=True, help="Run only the named checks")
@common_options
def verify(suite, checks, output_format, config_path, seed, jobs):
    """Run the acceptance suite (or its quick profile)."""
    config = prepare(config_path, seed, jobs)
    report = VerificationSuite(suite, config=config).run(list(checks) or None)
    table = Table(title=f"{suite} suite", show_header=True, header_style="bold magenta")
    table.add_column("Check", style="cyan")
    table.add_column("Result")
    table.add_column("Error", style="red")
    for result in report.results:
        table.add_row(result.name, "[green]pass[/green]" if result.passed else "[red]FAIL[/red]", result.error or "")
    emit(
        report.to_json(),
        output_format,
        table=table,
        csv_header="check,passed",
        csv_rows=[f"{result.name},{str(result.passed).lower()}" for result in report.results],
    )
    if not report.passed:
        sys.exit(1)


def main() -> None:
    """Main entry point for the CLI application."""
    try:
        cli(prog_name="ore-sra")
    except KeyboardInterrupt:
        err_console.print("\n[yellow]Operation cancelled by user[/yellow]")
        sys.exit(1)


if __name__ == "__main__":
    main()
