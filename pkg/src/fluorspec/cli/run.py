"""The ``run`` command: config in, CSV spectra and a report out."""

import logging
from pathlib import Path
from typing import List, Optional

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.table import Table

from fluorspec import __version__
from fluorspec.errors import ConfigError, FluorspecError, SingularLiouvillianError
from fluorspec.schemas import PointReport, RunConfig, RunReport
from fluorspec.storage import emit_csv, get_output_dir, init_output_dir, write_report

from .config import ConfigLoader
from .pipeline import check_methods, compare_all, compute_point, expand_sweep

EXIT_PASS = 0
EXIT_IO = 1
EXIT_FAIL = 2
EXIT_CONFIG = 3

REPORT_FILE = "report.json"

console = Console(stderr=True, soft_wrap=True)
logger = logging.getLogger("fluorspec")


def configure_logging(verbose: bool = False) -> None:
    """Route fluorspec log records to the stderr console."""
    handler = RichHandler(console=console, show_path=False, markup=False)
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.handlers = [handler]
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)


def fail(message: str, code: int) -> typer.Exit:
    console.print(f"[red]Error:[/red] {escape(message)}")
    return typer.Exit(code)


def _parse_methods(methods: Optional[str]) -> Optional[List[str]]:
    if methods is None:
        return None
    return [name.strip() for name in methods.split(",") if name.strip()]


def execute(config: RunConfig, out_dir: Path) -> RunReport:
    """Evaluate every sweep point and write its files into ``out_dir``.

    Args:
        config: Resolved run configuration
        out_dir: Directory receiving the CSV files and ``report.json``

    Returns:
        The RunReport also written to ``out_dir``

    Raises:
        ConfigError: For a bad sweep value or an inapplicable method
        SingularLiouvillianError: If any sweep point has a singular Q
        OSError: If a file cannot be written
    """
    points = expand_sweep(config)
    check_methods(points, config.methods)
    init_output_dir(out_dir)

    reports = []
    for point in points:
        logger.info("Sweep point %s", point.label)
        try:
            spectra = compute_point(
                point.model, config.grid, config.methods, config.workers
            )
        except (ConfigError, SingularLiouvillianError):
            raise
        except FluorspecError as e:
            logger.warning("%s: %s", point.label, e)
            reports.append(
                PointReport(
                    label=point.label,
                    model=point.model,
                    coherent_weight={},
                    comparisons=[],
                    files=[],
                    error=str(e),
                )
            )
            continue

        weights = {m.value: r.coherent_weight for m, r in spectra.items()}
        files = []
        for method, result in spectra.items():
            name = f"{method.value}_{point.label}.csv"
            emit_csv(result, out_dir / name)
            files.append(name)
        reports.append(
            PointReport(
                label=point.label,
                model=point.model,
                coherent_weight=weights,
                comparisons=compare_all(spectra, config.tolerances),
                files=files,
            )
        )

    report = RunReport(
        version=__version__,
        gamma_1=config.model.gamma_1,
        config=config.model_copy(update={"output_path": str(out_dir)}),
        points=reports,
        passed=all(p.passed for p in reports),
    )
    write_report(report, out_dir / REPORT_FILE)
    return report


def print_summary(report: RunReport) -> None:
    table = Table(title="Method comparison")
    table.add_column("Point", style="cyan")
    table.add_column("Method")
    table.add_column("Max rel diff", justify="right")
    table.add_column("Min / peak", justify="right")
    table.add_column("Peaks (nu)")
    table.add_column("Pass")
    for point in report.points:
        if point.error:
            table.add_row(point.label, "-", "-", "-", "-", "[red]error[/red]")
            continue
        for c in point.comparisons:
            ratio = c.min_value / c.peak_value if c.peak_value > 0 else 0.0
            table.add_row(
                point.label,
                c.method.value,
                f"{c.max_rel_diff:.2e}",
                f"{ratio:.2e}",
                ", ".join(f"{nu:.3g}" for nu in c.peak_positions),
                "[green]yes[/green]" if c.passed else "[red]no[/red]",
            )
    console.print(table)


def run(
    config_path: Path = typer.Argument(..., help="Run configuration (JSON or YAML)"),
    methods: Optional[str] = typer.Option(
        None, "--methods", "-m", help="Comma-separated methods, overrides config"
    ),
    out: Optional[Path] = typer.Option(
        None, "--out", "-o", help="Output directory, overrides env and config"
    ),
    workers: Optional[int] = typer.Option(
        None, "--workers", "-w", help="Threads per spectrum evaluation"
    ),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
):
    """Compute the configured spectra and compare the methods."""
    configure_logging(verbose)
    try:
        config = ConfigLoader(config_path).load(
            methods=_parse_methods(methods), workers=workers
        )
        out_dir = get_output_dir(out, config.output_path)
        report = execute(config, out_dir)
    except (ConfigError, SingularLiouvillianError) as e:
        raise fail(str(e), EXIT_CONFIG)
    except OSError as e:
        raise fail(str(e), EXIT_IO)

    print_summary(report)
    console.print(f"[dim]Wrote {escape(str(out_dir))}[/dim]")
    if not report.passed:
        raise fail("method disagreement or negative spectrum", EXIT_FAIL)
