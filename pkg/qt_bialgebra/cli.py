from __future__ import annotations

from contextlib import contextmanager
from pathlib import Path
import json
import sys
from typing import Callable, Iterator, TypeVar

import pydantic
import sympy
import typer
from rich.console import Console
from rich.markup import escape
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    SpinnerColumn,
    TextColumn,
    TimeElapsedColumn,
)
from rich.table import Table

from .algebra import D, as_element, basis_in_window, e
from .bialgebra import (
    RMatrix,
    c_of_r,
    check_cybe,
    coalgebra_image_defects,
    cojacobi_defect,
    delta_r,
    mybe_witness,
)
from .cohomology import inner_agreement, reduce_to_inner, windowed_faithfulness
from .config import AppConfig, RuntimeInfo, load_config
from .errors import ParseError, QtbError
from .formats import dump_element, dump_tensor, parse_element, parse_table, parse_tensor2
from .tensor import wedge
from .verify import (
    Advance,
    Status,
    VerifyReport,
    jacobi_plan,
    oracle_plan,
    verify_bialgebra_axioms,
    verify_faithfulness,
    verify_identities,
    verify_inner_roundtrip,
    verify_jacobi,
    verify_module_axioms,
    verify_oracle,
    verify_serialization,
)


app = typer.Typer(no_args_is_help=True)
verify_app = typer.Typer(no_args_is_help=True, help="Run a verification target")
demo_app = typer.Typer(no_args_is_help=True, help="Worked examples")
app.add_typer(verify_app, name="verify")
app.add_typer(demo_app, name="demo")
console = Console()

T = TypeVar("T")

FORMATS = ("text", "json")


# -- helpers -------------------------------------------------------------------


def _check_format(fmt: str) -> str:
    if fmt not in FORMATS:
        raise typer.BadParameter(f"expected one of {', '.join(FORMATS)}", param_hint="--format")
    return fmt


def _load(path: str, parse: Callable[[str], T]) -> T:
    p = Path(path).expanduser()
    try:
        text = p.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        console.print(f"[red]{escape(str(p))}[/red]: not UTF-8 (byte offset {exc.start})")
        raise typer.Exit(code=2)
    except OSError as exc:
        reason = escape(str(exc.strerror or exc))
        console.print(f"[red]Cannot read {escape(str(p))}:[/red] {reason}")
        raise typer.Exit(code=2)
    try:
        return parse(text)
    except ParseError as exc:
        console.print(f"[red]{escape(p.name)}[/red]: {escape(exc.describe())}")
        raise typer.Exit(code=2)


def _settings(
    radius: int | None, seed: int | None, threads: int | None
) -> tuple[AppConfig, int, int, int]:
    cfg = load_config()
    return (
        cfg,
        cfg.radius if radius is None else radius,
        cfg.seed if seed is None else seed,
        max(1, cfg.threads if threads is None else threads),
    )


@contextmanager
def _progress(
    description: str, total: int | None, *, quiet: bool
) -> Iterator[tuple[Advance, Status]]:
    with Progress(
        SpinnerColumn(),
        TextColumn("{task.description}"),
        BarColumn(),
        MofNCompleteColumn(),
        TimeElapsedColumn(),
        console=console,
        disable=quiet,
    ) as progress:
        task = progress.add_task(description, total=total)

        def advance(n: int) -> None:
            progress.advance(task, n)

        def status(msg: str) -> None:
            if not quiet:
                progress.console.log(f"[dim]{escape(description)}[/dim]: {escape(msg)}")

        yield advance, status


def _print_report(report: VerifyReport, limit: int = 10) -> None:
    status = "[green]PASS[/green]" if report.passed else "[red]FAIL[/red]"
    console.print(
        f"{status} {report.suite}: {report.instances_checked} instances, "
        f"{len(report.failures)} failures ({report.wall_time:.2f}s)"
    )
    if report.failures:
        table = Table(title=f"{report.suite} failures", show_lines=True)
        table.add_column("Inputs")
        table.add_column("Expected")
        table.add_column("Actual")
        for failure in report.failures[:limit]:
            table.add_row(escape(failure.inputs), escape(failure.expected), escape(failure.actual))
        console.print(table)
        if len(report.failures) > limit:
            console.print(f"[dim]... {len(report.failures) - limit} more[/dim]")


def _finish(reports: list[VerifyReport], fmt: str) -> None:
    if fmt == "json":
        if len(reports) == 1:
            print(reports[0].model_dump_json(indent=2))
        else:
            print(json.dumps([r.model_dump() for r in reports], ensure_ascii=False, indent=2))
    else:
        for report in reports:
            _print_report(report)
    raise typer.Exit(code=0 if all(r.passed for r in reports) else 1)


RADIUS = typer.Option(None, "--radius", help="Index window radius (defaults to QTB_RADIUS)")
SEED = typer.Option(None, "--seed", help="Random seed (defaults to QTB_SEED)")
THREADS = typer.Option(None, "--threads", help="Worker processes (defaults to QTB_THREADS)")
FORMAT = typer.Option("text", "--format", help="Report format: text or json")


# -- top-level commands ----------------------------------------------------------


@app.command()
def doctor() -> None:
    cfg = load_config()
    info = RuntimeInfo(
        python=sys.version.split()[0],
        sympy=sympy.__version__,
        pydantic=pydantic.VERSION,
        threads=cfg.threads,
    )

    table = Table(title="qt-bialgebra doctor")
    table.add_column("Key")
    table.add_column("Value")
    table.add_row("Python", info.python)
    table.add_row("sympy", info.sympy)
    table.add_row("pydantic", info.pydantic)
    table.add_row("Threads", str(info.threads))
    table.add_row("Radius", str(cfg.radius))
    table.add_row("Seed", str(cfg.seed))
    table.add_row("Module samples", str(cfg.module_samples))
    table.add_row("Co-Jacobi samples", str(cfg.cojacobi_samples))
    table.add_row("Compatibility samples", str(cfg.compat_samples))
    table.add_row("Round-trip samples", str(cfg.roundtrip_samples))
    table.add_row("Faithfulness samples", str(cfg.faithfulness_samples))
    table.add_row("Serialization samples", str(cfg.serialization_samples))
    console.print(table)


@app.command()
def cybe(
    path: str = typer.Argument(..., help="r-matrix in the tensor file format"),
) -> None:
    """Exit 0 if r solves the classical Yang-Baxter equation, 1 (printing c(r)) if not."""
    r = RMatrix(_load(path, parse_tensor2))
    if check_cybe(r):
        console.print("[green]c(r) = 0[/green]: r solves the CYBE")
        raise typer.Exit(code=0)

    console.print("[red]c(r) ≠ 0[/red]: r does not solve the CYBE")
    print(dump_tensor(c_of_r(r)))
    witness = mybe_witness(r)
    if witness is not None:
        console.print(f"Probe {witness} acts nontrivially on c(r), so the MYBE fails too.")
    else:
        console.print(
            "[yellow]No probe acts nontrivially on c(r).[/yellow] "
            "The probe check is one-sided: a witness disproves the MYBE, "
            "its absence proves nothing."
        )
    raise typer.Exit(code=1)


@app.command()
def delta(
    r_path: str = typer.Argument(..., help="r-matrix in the tensor file format"),
    x_path: str = typer.Argument(..., help="Element in the element file format"),
) -> None:
    """Print Δ_r(x) = x·r in the tensor file format."""
    r = _load(r_path, parse_tensor2)
    x = _load(x_path, parse_element)
    print(dump_tensor(delta_r(r, x)))


@app.command()
def triangular(
    path: str = typer.Argument(..., help="r-matrix in the tensor file format"),
) -> None:
    """Report whether r is skew and solves the CYBE (a triangular structure)."""
    r = RMatrix(_load(path, parse_tensor2))
    solves = check_cybe(r)

    table = Table(title="Triangular check")
    table.add_column("Check")
    table.add_column("Result")
    table.add_row("r skew", str(r.skew))
    table.add_row("CYBE", str(solves))
    console.print(table)
    raise typer.Exit(code=0 if r.skew and solves else 1)


@app.command("reduce-derivation")
def reduce_derivation(
    path: str = typer.Argument(..., help="Homogeneous derivation table"),
) -> None:
    """Print v with t = x ↦ x·v and the per-basis agreement report."""
    t = _load(path, parse_table)
    try:
        v = reduce_to_inner(t)
    except (QtbError, ValueError) as exc:
        console.print(f"[red]Cannot reduce:[/red] {escape(str(exc))}")
        raise typer.Exit(code=2)

    print(dump_tensor(v))
    mismatches = inner_agreement(t, v)
    if not mismatches:
        console.print(f"[green]t(x) = x·v for every basis vector of radius {t.window}[/green]")
        raise typer.Exit(code=0)

    table = Table(title="Disagreements t(x) − x·v", show_lines=True)
    table.add_column("Basis")
    table.add_column("Difference")
    for b, diff in mismatches.items():
        table.add_row(str(b), dump_tensor(diff))
    console.print(table)
    raise typer.Exit(code=1)


@app.command()
def faithfulness(
    path: str = typer.Argument(..., help="2-tensor v in the tensor file format"),
) -> None:
    """Find a probe x with x·v ≠ 0; exit 1 if v ≠ 0 and none exists."""
    v = _load(path, parse_tensor2)
    if v.is_zero():
        console.print("v = 0; no witness needed")
        raise typer.Exit(code=0)
    witness = windowed_faithfulness(v)
    if witness is None:
        console.print("[red]No probe acts nontrivially on v[/red]")
        raise typer.Exit(code=1)
    console.print(f"Witness {witness}:")
    print(dump_element(witness))


# -- demo -------------------------------------------------------------------------


@demo_app.command("triangular")
def demo_triangular(
    radius: int = typer.Option(2, help="Probe every basis vector of this radius"),
) -> None:
    """Run r = d⊗e₀ − e₀⊗d end to end: CYBE, skew cobrackets and co-Jacobi."""
    r = RMatrix(wedge(D(), e(0, 0)))
    console.print(f"r = {r.value}")

    probes = [as_element(b) for b in basis_in_window(radius)]
    not_skew = []
    cojacobi_failures = []
    with _progress("Probing", len(probes), quiet=False) as (advance, _):
        for x in probes:
            if coalgebra_image_defects(r, [x]):
                not_skew.append(x)
            if not cojacobi_defect(r, x).is_zero():
                cojacobi_failures.append(x)
            advance(1)

    table = Table(title="d⊗e₀ − e₀⊗d")
    table.add_column("Check")
    table.add_column("Result")
    table.add_row("r skew", str(r.skew))
    table.add_row("c(r) = 0", str(check_cybe(r)))
    table.add_row("Probes", str(len(probes)))
    table.add_row("Δ_r(x) skew for all probes", str(not not_skew))
    table.add_row("Co-Jacobi defect zero for all probes", str(not cojacobi_failures))
    console.print(table)
    for x in not_skew:
        console.print(f"[red]Δ_r({x}) not skew[/red]: {dump_tensor(delta_r(r, x))}")
    for x in cojacobi_failures:
        console.print(f"[red]co-Jacobi fails at {x}[/red]")

    ok = r.skew and check_cybe(r) and not not_skew and not cojacobi_failures
    raise typer.Exit(code=0 if ok else 1)


# -- verify -----------------------------------------------------------------------


@verify_app.command("jacobi")
def verify_jacobi_cmd(
    radius: int | None = RADIUS, threads: int | None = THREADS, fmt: str = FORMAT
) -> None:
    _check_format(fmt)
    _, radius, _, threads = _settings(radius, None, threads)
    with _progress("Jacobi", jacobi_plan(radius).total, quiet=fmt == "json") as (advance, _):
        report = verify_jacobi(radius, threads, advance=advance)
    _finish([report], fmt)


@verify_app.command("oracle")
def verify_oracle_cmd(
    radius: int | None = RADIUS, threads: int | None = THREADS, fmt: str = FORMAT
) -> None:
    _check_format(fmt)
    _, radius, _, threads = _settings(radius, None, threads)
    with _progress("Oracle", oracle_plan(radius).total, quiet=fmt == "json") as (advance, _):
        report = verify_oracle(radius, threads, advance=advance)
    _finish([report], fmt)


@verify_app.command("module-axioms")
def verify_module_axioms_cmd(
    radius: int | None = RADIUS,
    seed: int | None = SEED,
    threads: int | None = THREADS,
    samples: int | None = typer.Option(None, help="Samples (defaults to QTB_MODULE_SAMPLES)"),
    fmt: str = FORMAT,
) -> None:
    _check_format(fmt)
    cfg, radius, seed, threads = _settings(radius, seed, threads)
    with _progress("Module axioms", None, quiet=fmt == "json") as (advance, _):
        report = verify_module_axioms(
            radius, seed, samples or cfg.module_samples, threads, advance=advance
        )
    _finish([report], fmt)


@verify_app.command("identities")
def verify_identities_cmd(
    radius: int | None = RADIUS,
    seed: int | None = SEED,
    suite: list[str] = typer.Option([], "--suite", help="Suite id a..g (repeatable; default all)"),
    fmt: str = FORMAT,
) -> None:
    _check_format(fmt)
    _, radius, seed, _ = _settings(radius, seed, None)
    try:
        with _progress("Identities", None, quiet=fmt == "json") as (advance, status):
            report = verify_identities(
                radius, seed, suite or None, advance=advance, status=status
            )
    except QtbError as exc:
        console.print(f"[red]{escape(str(exc))}[/red]")
        raise typer.Exit(code=2)
    _finish([report], fmt)


@verify_app.command("bialgebra-axioms")
def verify_bialgebra_axioms_cmd(
    radius: int | None = RADIUS,
    seed: int | None = SEED,
    threads: int | None = THREADS,
    fmt: str = FORMAT,
) -> None:
    _check_format(fmt)
    cfg, radius, seed, threads = _settings(radius, seed, threads)
    with _progress("Bialgebra axioms", None, quiet=fmt == "json") as (advance, status):
        report = verify_bialgebra_axioms(
            radius, seed, cfg.cojacobi_samples, cfg.compat_samples, threads,
            advance=advance, status=status,
        )
    _finish([report], fmt)


@verify_app.command("inner-roundtrip")
def verify_inner_roundtrip_cmd(
    radius: int | None = RADIUS,
    seed: int | None = SEED,
    threads: int | None = THREADS,
    fmt: str = FORMAT,
) -> None:
    _check_format(fmt)
    cfg, radius, seed, threads = _settings(radius, seed, threads)
    with _progress("Inner round trip", None, quiet=fmt == "json") as (advance, _):
        report = verify_inner_roundtrip(
            radius, seed, cfg.roundtrip_samples, threads, advance=advance
        )
    _finish([report], fmt)


@verify_app.command("faithfulness-sweep")
def verify_faithfulness_cmd(
    radius: int | None = RADIUS,
    seed: int | None = SEED,
    threads: int | None = THREADS,
    fmt: str = FORMAT,
) -> None:
    _check_format(fmt)
    cfg, radius, seed, threads = _settings(radius, seed, threads)
    with _progress("Faithfulness", None, quiet=fmt == "json") as (advance, _):
        report = verify_faithfulness(
            radius, seed, cfg.faithfulness_samples, threads, advance=advance
        )
    _finish([report], fmt)


@verify_app.command("serialization")
def verify_serialization_cmd(
    radius: int | None = RADIUS,
    seed: int | None = SEED,
    threads: int | None = THREADS,
    fmt: str = FORMAT,
) -> None:
    _check_format(fmt)
    cfg, radius, seed, threads = _settings(radius, seed, threads)
    with _progress("Serialization", None, quiet=fmt == "json") as (advance, _):
        report = verify_serialization(
            radius, seed, cfg.serialization_samples, threads, advance=advance
        )
    _finish([report], fmt)


@verify_app.command("all")
def verify_all_cmd(
    radius: int | None = RADIUS,
    seed: int | None = SEED,
    threads: int | None = THREADS,
    fmt: str = FORMAT,
) -> None:
    """Every target in turn; exit 1 if any of them fails."""
    _check_format(fmt)
    cfg, radius, seed, threads = _settings(radius, seed, threads)
    targets: list[tuple[str, Callable[[Advance, Status], VerifyReport]]] = [
        ("Jacobi", lambda a, s: verify_jacobi(radius, threads, advance=a)),
        ("Oracle", lambda a, s: verify_oracle(radius, threads, advance=a)),
        (
            "Module axioms",
            lambda a, s: verify_module_axioms(radius, seed, cfg.module_samples, threads, advance=a),
        ),
        ("Identities", lambda a, s: verify_identities(radius, seed, advance=a, status=s)),
        (
            "Bialgebra axioms",
            lambda a, s: verify_bialgebra_axioms(
                radius, seed, cfg.cojacobi_samples, cfg.compat_samples, threads,
                advance=a, status=s,
            ),
        ),
        (
            "Inner round trip",
            lambda a, s: verify_inner_roundtrip(
                radius, seed, cfg.roundtrip_samples, threads, advance=a
            ),
        ),
        (
            "Faithfulness",
            lambda a, s: verify_faithfulness(
                radius, seed, cfg.faithfulness_samples, threads, advance=a
            ),
        ),
        (
            "Serialization",
            lambda a, s: verify_serialization(
                radius, seed, cfg.serialization_samples, threads, advance=a
            ),
        ),
    ]
    reports: list[VerifyReport] = []
    for name, run in targets:
        with _progress(name, None, quiet=fmt == "json") as (advance, status):
            reports.append(run(advance, status))
    _finish(reports, fmt)
