# main.py
# Command-line entry point for the Suzuki semigroup toolkit

import sys
from pathlib import Path
from typing import Optional, Tuple

import typer
from loguru import logger
from pydantic import ValidationError

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from codes.code_tables import compare_with_diagnostics
from codes.feng_rao import build_table
from codes.renderers import render, render_rows
from handlers.reference_handler import ReferenceTableHandler
from semigroups.errors import CodeLengthError, InvalidFieldSizeError, SemigroupError
from semigroups.suzuki_semigroups import semigroup_at
from state.semigroup_state import (
    CliCommand,
    CliConfig,
    OutputFormat,
    PointType,
    SuzukiParams,
)
from utils.logging_setup import configure_logging
from verification.structure_checks import verify_structure

ORDER_BOUND_COLUMNS = ("ell", "rho_ell", "nu", "d_ord")

app = typer.Typer(
    add_completion=False,
    no_args_is_help=True,
    help="Weierstrass semigroups of the Suzuki curve and their one-point codes.",
)


def _format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _semigroup_text(config: CliConfig) -> str:
    p = config.params
    semigroup = semigroup_at(p, config.point)
    lines = [
        f"point={config.point.value}",
        f"q={p.q}",
        f"generators={' '.join(str(g) for g in semigroup.generators)}",
        f"genus={semigroup.genus}",
        f"conductor={semigroup.conductor}",
        f"frobenius={semigroup.frobenius}",
        f"gaps={' '.join(str(g) for g in semigroup.gaps())}",
        f"symmetric={_format_value(semigroup.is_symmetric())}",
    ]
    return "\n".join(lines) + "\n"


def _verify(config: CliConfig) -> Tuple[int, str]:
    report = verify_structure(config.params)
    lines = [
        f"{'PASS' if check.passed else 'FAIL'} {check.check_id.value} "
        f"expected={_format_value(check.expected)} actual={_format_value(check.actual)}"
        for check in report.checks
    ]
    return (0 if report.all_passed else 1), "\n".join(lines) + "\n"


def _fengrao_text(config: CliConfig) -> str:
    table = build_table(semigroup_at(config.params, config.point))
    if config.ell is None:
        rows = table.rows()
    else:
        ell = config.ell
        rows = [(ell, table.rho_at(ell), table.nu_at(ell), table.d_ord_at(ell))]
    return render_rows(ORDER_BOUND_COLUMNS, rows, config.format)


def _table(config: CliConfig) -> Tuple[int, str]:
    p = config.params
    comparison = compare_with_diagnostics(p, config.length_override)
    text = render(comparison.records, config.format)
    if not config.check:
        return 0, text

    handler = ReferenceTableHandler()
    if p.q not in handler.available():
        logger.error(f"No published table for q={p.q}; available: {handler.available()}")
        return 1, text
    diff = handler.diff(p.q, comparison.records)
    for row in diff.missing:
        logger.error(f"missing published row {row}")
    for row in diff.extra:
        logger.error(f"unexpected row {row}")
    return (0 if diff.matches else 1), text


def run(config: CliConfig) -> Tuple[int, str]:
    """
    Execute one validated command

    Args:
        config: Parsed command line

    Returns:
        (exit status, text for standard output)
    """
    try:
        if config.command == CliCommand.SEMIGROUP:
            return 0, _semigroup_text(config)
        if config.command == CliCommand.VERIFY:
            return _verify(config)
        if config.command == CliCommand.FENGRAO:
            return 0, _fengrao_text(config)
        return _table(config)
    except CodeLengthError as e:
        logger.error(f"Invalid value for --length: {str(e)}")
        return 2, ""
    except SemigroupError as e:
        logger.error(f"{config.command.value} failed: {str(e)}")
        return 1, ""


def _dispatch(config_fields: dict) -> None:
    try:
        config = CliConfig(**config_fields)
    except ValidationError as e:
        raise typer.BadParameter(str(e))

    code, text = run(config)
    if config.output is not None:
        config.output.write_text(text)
        logger.info(f"Wrote {config.command.value} output to {config.output}")
    else:
        typer.echo(text, nl=False)
    raise typer.Exit(code)


def _validate_q(value: int) -> int:
    try:
        SuzukiParams.from_q(value)
    except InvalidFieldSizeError as e:
        raise typer.BadParameter(str(e))
    return value


Q_OPTION = typer.Option(..., "--q", callback=_validate_q, help="Field size q = 2*4^s (8, 32, 128, ...)")
POINT_OPTION = typer.Option(PointType.GENERIC, "--point", help="rational or generic point")
FORMAT_OPTION = typer.Option(OutputFormat.CSV, "--format", help="csv, markdown or json")
OUTPUT_OPTION = typer.Option(None, "--output", help="Write to this file instead of stdout")


@app.callback()
def main(log_level: Optional[str] = typer.Option(None, "--log-level", help="Override SUZUKI_LOG_LEVEL")):
    """Route diagnostics to stderr before any command runs"""
    configure_logging(log_level)


@app.command()
def semigroup(
    q: int = Q_OPTION,
    point: PointType = POINT_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """Generators, genus, conductor, gaps and symmetry of H(P)."""
    _dispatch(dict(command=CliCommand.SEMIGROUP, q=q, point=point, output=output))


@app.command()
def verify(
    q: int = Q_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """Run every structure check; exit 1 if any fails."""
    _dispatch(dict(command=CliCommand.VERIFY, q=q, output=output))


@app.command()
def fengrao(
    q: int = Q_OPTION,
    point: PointType = POINT_OPTION,
    ell: Optional[int] = typer.Option(None, "--ell", min=1, help="Single index; full table when omitted"),
    format: OutputFormat = FORMAT_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """rho_l, nu_l and d_ORD(l) at one point type."""
    _dispatch(dict(command=CliCommand.FENGRAO, q=q, point=point, ell=ell, format=format, output=output))


@app.command()
def table(
    q: int = Q_OPTION,
    format: OutputFormat = FORMAT_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    length: Optional[int] = typer.Option(None, "--length", min=1, help="Override n = q^4 + 2g"),
    check: bool = typer.Option(False, "--check", help="Exit 1 unless the rows match the published table"),
):
    """Rows where the generic-point code beats the rational-point code."""
    _dispatch(
        dict(
            command=CliCommand.TABLE,
            q=q,
            format=format,
            output=output,
            length_override=length,
            check=check,
        )
    )


if __name__ == "__main__":
    app()
