"""``verify`` and ``report``: verification suites and report conversion."""

from typing import Optional

import click
from loguru import logger

from app.config import settings
from app.services.verification import ReportFormat, SuiteName, SuiteSpec, emit_report, parse_jsonl_report, run_suite

from ..common import emit, handle_errors, output_option

logger = logger.bind(name=__name__)

format_option = click.option(
    "--format", "fmt", type=click.Choice([f.value for f in ReportFormat]), default=None,
    help="Report format (default from settings).",
)


@click.command()
@click.argument("suite", type=click.Choice([s.value for s in SuiteName] + [s.name for s in SuiteName]))
@click.option("--seed", type=click.IntRange(min=0), default=None, help="Seed of the randomized sweeps.")
@click.option("--budget-ms", type=click.IntRange(min=1), default=None, help="Budget of every exact search.")
@format_option
@output_option
@handle_errors
def verify(suite: str, seed: Optional[int], budget_ms: Optional[int], fmt: Optional[str],
           output: Optional[str]) -> None:
    """Run SUITE and emit its report; exit status 1 when any entry fails."""
    spec = SuiteSpec(
        name=SuiteName.parse(suite),
        budget_ms=budget_ms,
        seed=settings.sweeps.seed if seed is None else seed,
    )
    result = run_suite(spec)
    emit(emit_report(result, ReportFormat(fmt or settings.report.format)), output)
    click.echo(f"suite {spec.name.value} seed {spec.seed}: {result.counts()}", err=True)
    if not result.passed:
        for entry in result.failures:
            logger.error(f"FAIL {entry.name}: expected {entry.expected_text}, computed {entry.computed_text}")
        raise click.exceptions.Exit(1)


@click.command()
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@format_option
@output_option
@handle_errors
def report(source: str, fmt: Optional[str], output: Optional[str]) -> None:
    """Re-emit a JSON-lines report from SOURCE; exit status 1 when it records a failure."""
    with open(source, encoding="utf-8") as fh:
        parsed = parse_jsonl_report(fh.read())
    emit(emit_report(parsed, ReportFormat(fmt or settings.report.format)), output)
    if not parsed.passed:
        raise click.exceptions.Exit(1)
