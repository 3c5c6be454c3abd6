"""CLI adapter wiring the gentle-algebra toolkit into a rich-click interface.

Purpose
-------
Parse quiver documents, dispatch to the library and emit either canonical JSON
(``--format json``, the scripting and golden-test surface) or a text rendering
of the same payload through ``rich``.

Contents
--------
* :data:`CLICK_CONTEXT_SETTINGS` - shared Click settings ensuring consistent
  ``--help`` behavior across commands.
* :func:`apply_traceback_preferences`, :func:`snapshot_traceback_state`,
  :func:`restore_traceback_state` - global traceback preference plumbing.
* :func:`configure_logging` - the single stderr ``RichHandler`` on the package
  logger, level chosen by ``-v``.
* :func:`domain_errors` - turns :class:`GentleError` into a Click error (exit 1).
* :func:`cli` - root command group wiring the global options, followed by one
  subcommand per library operation.
* :func:`main` - composition helper delegating to ``lib_cli_exit_tools`` while
  honouring the shared traceback preferences.

Exit codes
----------
``0`` success, ``1`` domain error (invalid quiver, unknown class name, ...),
``2`` usage error (bad flag values are rejected before any computation).
"""

from __future__ import annotations

import json
import logging
from contextlib import contextmanager
from dataclasses import dataclass
from enum import StrEnum
from pathlib import Path
from typing import TYPE_CHECKING, Any, Final

import lib_cli_exit_tools
import rich_click as click
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table
from rich.text import Text
from rich.tree import Tree

from . import __init__conf__
from .boundary import aag_invariant, boundary_cycles, compare_invariants, is_proper, is_smooth, surface_invariants
from .complexes import graded_center_dim, oracle_table
from .errors import FieldSpecError, GentleError
from .fields import FieldSpec
from .formality import DEFAULT_NMAX, FIRST_OBSTRUCTION, formality
from .hochschild import HHExpression, all_classes, basis_report, dims, parse_class_name, representative
from .quiver import RandomBounds, dump_quiver, load_quiver, random_gentle, validate_gentle
from .structure import Operation, bracket, cup, family_laws, hh_presentation, structure_table
from .typed_click import apply_all, argument, option, version_option

if TYPE_CHECKING:
    from collections.abc import Callable, Iterator, Sequence

    from rich.console import RenderableType

    from .quiver import GentleAlgebra

#: Shared Click context flags so help output stays consistent across commands.
CLICK_CONTEXT_SETTINGS = {"help_option_names": ["-h", "--help"]}
#: Character budget used when printing truncated tracebacks.
TRACEBACK_SUMMARY_LIMIT: Final[int] = 500
#: Character budget used when verbose tracebacks are enabled.
TRACEBACK_VERBOSE_LIMIT: Final[int] = 10_000
#: Logger every library module hangs under.
PACKAGE_LOGGER: Final[str] = "gentle_hochschild"
#: Name tagging the handler installed by :func:`configure_logging`.
LOG_HANDLER_NAME: Final[str] = "gentle-cli"
#: Indentation of machine-format output.
JSON_INDENT: Final[int] = 2
#: Default upper end of the cohomological-degree window.
DEFAULT_WINDOW_NMAX: Final[int] = 6


class OutputFormat(StrEnum):
    JSON = "json"
    TEXT = "text"


@dataclass
class TracebackState:
    """Typed container for traceback configuration snapshot."""

    traceback_enabled: bool
    force_color: bool


@dataclass
class CliContext:
    """Typed container for Click context object backing store."""

    traceback: bool = False
    verbose: int = 0


# ---------------------------------------------------------------------------
# Traceback preferences
# ---------------------------------------------------------------------------


def apply_traceback_preferences(enabled: bool) -> None:
    """Synchronise shared traceback flags with the requested preference.

    ``lib_cli_exit_tools`` inspects global flags to decide whether tracebacks
    are truncated and whether colour is forced; both follow ``--traceback``.

    Examples
    --------
    >>> apply_traceback_preferences(True)
    >>> bool(lib_cli_exit_tools.config.traceback)
    True
    >>> bool(lib_cli_exit_tools.config.traceback_force_color)
    True
    """

    lib_cli_exit_tools.config.traceback = bool(enabled)
    lib_cli_exit_tools.config.traceback_force_color = bool(enabled)


def snapshot_traceback_state() -> TracebackState:
    """Capture the current traceback configuration for later restoration.

    Examples
    --------
    >>> snapshot = snapshot_traceback_state()
    >>> isinstance(snapshot, TracebackState)
    True
    """

    return TracebackState(
        traceback_enabled=bool(getattr(lib_cli_exit_tools.config, "traceback", False)),
        force_color=bool(getattr(lib_cli_exit_tools.config, "traceback_force_color", False)),
    )


def restore_traceback_state(state: TracebackState) -> None:
    """Reapply a previously captured traceback configuration.

    Examples
    --------
    >>> prev = snapshot_traceback_state()
    >>> apply_traceback_preferences(True)
    >>> restore_traceback_state(prev)
    >>> snapshot_traceback_state() == prev
    True
    """

    lib_cli_exit_tools.config.traceback = state.traceback_enabled
    lib_cli_exit_tools.config.traceback_force_color = state.force_color


def _record_global_choices(ctx: click.Context, *, traceback: bool, verbose: int) -> None:
    """Persist the global flags in the typed ``ctx.obj``."""

    ctx.ensure_object(CliContext)
    ctx.obj.traceback = traceback
    ctx.obj.verbose = verbose


# ---------------------------------------------------------------------------
# Logging and error mapping
# ---------------------------------------------------------------------------


def _log_level(verbosity: int) -> int:
    if verbosity <= 0:
        return logging.WARNING
    return logging.INFO if verbosity == 1 else logging.DEBUG


def configure_logging(verbosity: int) -> None:
    """Install one stderr ``RichHandler`` on the package logger.

    Repeated calls replace the handler instead of stacking a second one, so
    in-process invocations (tests, notebooks) never duplicate log lines.

    Examples
    --------
    >>> configure_logging(2)
    >>> logging.getLogger(PACKAGE_LOGGER).level == logging.DEBUG
    True
    >>> configure_logging(0)
    >>> [h.get_name() for h in logging.getLogger(PACKAGE_LOGGER).handlers]
    ['gentle-cli']
    """

    package_logger = logging.getLogger(PACKAGE_LOGGER)
    for handler in [h for h in package_logger.handlers if h.get_name() == LOG_HANDLER_NAME]:
        package_logger.removeHandler(handler)
    handler = RichHandler(console=Console(stderr=True), show_time=False, show_path=False)
    handler.set_name(LOG_HANDLER_NAME)
    package_logger.addHandler(handler)
    package_logger.setLevel(_log_level(verbosity))


@contextmanager
def domain_errors() -> Iterator[None]:
    """Re-raise library errors as :class:`click.ClickException` (exit code 1)."""

    try:
        yield
    except GentleError as exc:
        raise click.ClickException(f"{type(exc).__name__}: {exc}") from exc


def _load(path: Path) -> GentleAlgebra:
    return validate_gentle(load_quiver(path))


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------


def _stdout_console() -> Console:
    return Console(highlight=False, soft_wrap=True)


def _is_branch(value: Any) -> bool:
    return isinstance(value, dict | list) and bool(value)


def _grow(node: Tree, payload: Any) -> None:
    if isinstance(payload, dict):
        for key in sorted(payload):
            value = payload[key]
            if _is_branch(value):
                _grow(node.add(Text(str(key), style="bold")), value)
            else:
                node.add(Text(f"{key}: {_scalar(value)}"))
    elif isinstance(payload, list):
        for index, item in enumerate(payload):
            if _is_branch(item):
                _grow(node.add(Text(f"#{index}", style="dim")), item)
            else:
                node.add(Text(_scalar(item)))


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list | dict):
        return "none"
    return str(value)


def payload_tree(title: str, payload: dict[str, Any]) -> Tree:
    """Render a JSON payload as a ``rich`` tree; keys sorted like the JSON form."""

    tree = Tree(Text(title, style="bold"))
    _grow(tree, payload)
    return tree


def _grid(title: str, n_values: Sequence[int], rows: Sequence[tuple[int, Sequence[str]]]) -> Table:
    table = Table(title=title, show_lines=False)
    table.add_column("d \\ n", justify="right", style="bold")
    for n in n_values:
        table.add_column(str(n), justify="right")
    for d, cells in rows:
        table.add_row(str(d), *cells)
    return table


def _emit(
    payload: dict[str, Any],
    output_format: str,
    title: str,
    render: Callable[[dict[str, Any]], RenderableType] | None = None,
) -> None:
    """Write ``payload`` as canonical JSON or as its text rendering."""

    if OutputFormat(output_format) is OutputFormat.JSON:
        click.echo(json.dumps(payload, sort_keys=True, indent=JSON_INDENT))
        return
    _stdout_console().print(render(payload) if render is not None else payload_tree(title, payload))


# ---------------------------------------------------------------------------
# Shared parameters
# ---------------------------------------------------------------------------


def _parse_field(ctx: click.Context, param: click.Parameter, value: str) -> FieldSpec:
    try:
        return FieldSpec.parse(value)
    except FieldSpecError as exc:
        raise click.BadParameter(str(exc), ctx=ctx, param=param) from exc


def _window(low: int, high: int, fixed: int | None, axis: str) -> tuple[int, ...]:
    if fixed is not None:
        return (fixed,)
    if low > high:
        raise click.BadParameter(f"--{axis}min {low} exceeds --{axis}max {high}")
    return tuple(range(low, high + 1))


_QUIVER_PATH = click.Path(exists=True, dir_okay=False, path_type=Path)

quiver_argument = argument("quiver_path", metavar="QUIVER", type=_QUIVER_PATH)
field_option = option(
    "--field",
    "field_spec",
    default="q",
    show_default=True,
    callback=_parse_field,
    help="Coefficient field: 'q' for the rationals or 'fp:<p>' for a prime field",
)
format_option = option(
    "--format",
    "output_format",
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.TEXT.value,
    show_default=True,
    help="Report format; json is canonical and byte-stable",
)
cap_option = option(
    "--cap",
    type=click.IntRange(min=0),
    default=None,
    help="Bound on the length of the target path q; infinite components need one",
)
jobs_option = option(
    "--jobs",
    type=click.IntRange(min=1),
    default=1,
    show_default=True,
    help="Worker processes for table computations",
)
n_window_options = apply_all(
    option("--nmin", type=click.IntRange(min=0), default=0, show_default=True, help="Lowest cohomological degree"),
    option("--nmax", type=click.IntRange(min=0), default=DEFAULT_WINDOW_NMAX, show_default=True, help="Highest cohomological degree"),
    option("--n", "n_fixed", type=click.IntRange(min=0), default=None, help="Single cohomological degree (overrides --nmin/--nmax)"),
)
d_window_options = apply_all(
    option("--dmin", type=int, default=0, show_default=True, help="Lowest internal degree"),
    option("--dmax", type=int, default=0, show_default=True, help="Highest internal degree"),
    option("--d", "d_fixed", type=int, default=None, help="Single internal degree (overrides --dmin/--dmax)"),
)


# ---------------------------------------------------------------------------
# Root group
# ---------------------------------------------------------------------------


@click.group(
    help=__init__conf__.title,
    context_settings=CLICK_CONTEXT_SETTINGS,
    invoke_without_command=True,
)
@version_option(
    version=__init__conf__.version,
    prog_name=__init__conf__.shell_command,
    message=f"{__init__conf__.shell_command} version {__init__conf__.version}",
)
@option(
    "--traceback/--no-traceback",
    is_flag=True,
    default=False,
    help="Show full Python traceback on errors",
)
@option("-v", "--verbose", count=True, help="Log progress to stderr (-v info, -vv debug)")
@click.pass_context
def cli(ctx: click.Context, traceback: bool, verbose: int) -> None:
    """Root command storing global flags and syncing shared traceback state.

    Without a subcommand the help screen is shown.

    Examples
    --------
    >>> from click.testing import CliRunner
    >>> result = CliRunner().invoke(cli, ["info"])
    >>> result.exit_code
    0
    """

    _record_global_choices(ctx, traceback=traceback, verbose=verbose)
    apply_traceback_preferences(traceback)
    configure_logging(verbose)
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


@cli.command("info", context_settings=CLICK_CONTEXT_SETTINGS)
def cli_info() -> None:
    """Print resolved metadata so users can inspect installation details."""

    __init__conf__.print_info()


# ---------------------------------------------------------------------------
# Quiver and surface commands
# ---------------------------------------------------------------------------


@cli.command("validate", context_settings=CLICK_CONTEXT_SETTINGS)
@quiver_argument
@format_option
def cli_validate(quiver_path: Path, output_format: str) -> None:
    """Check the gentle axioms; a violation exits 1 naming the rule."""

    with domain_errors():
        algebra = _load(quiver_path)
        payload = {
            "valid": True,
            "vertices": len(algebra.vertices),
            "arrows": len(algebra.arrows),
            "relations": len(algebra.quiver.relations),
            "smooth": is_smooth(algebra),
            "proper": is_proper(algebra),
        }
        _emit(payload, output_format, "gentle quiver")


@cli.command("invariants", context_settings=CLICK_CONTEXT_SETTINGS)
@quiver_argument
@format_option
def cli_invariants(quiver_path: Path, output_format: str) -> None:
    """Boundary components, winding numbers, Euler characteristic and genus."""

    with domain_errors():
        algebra = _load(quiver_path)
        payload = {
            "surface": surface_invariants(algebra).to_dict(),
            "boundary_cycles": [c.to_dict(algebra) for c in boundary_cycles(algebra)],
            "smooth": is_smooth(algebra),
            "proper": is_proper(algebra),
        }
        _emit(payload, output_format, "surface invariants")


@cli.command("aag", context_settings=CLICK_CONTEXT_SETTINGS)
@quiver_argument
@format_option
def cli_aag(quiver_path: Path, output_format: str) -> None:
    """The AAG derived invariant as a multiset of pairs (n, m)."""

    with domain_errors():
        phi = aag_invariant(_load(quiver_path))
        _emit({"aag": phi.to_list(), "text": str(phi)}, output_format, "AAG invariant", lambda p: Text(p["text"]))


@cli.command("compare", context_settings=CLICK_CONTEXT_SETTINGS)
@argument("first_path", metavar="FIRST", type=_QUIVER_PATH)
@argument("second_path", metavar="SECOND", type=_QUIVER_PATH)
@format_option
def cli_compare(first_path: Path, second_path: Path, output_format: str) -> None:
    """Compare two algebras by their surface invariants (a necessary condition only)."""

    with domain_errors():
        comparison = compare_invariants(_load(first_path), _load(second_path))
        _emit(comparison.to_dict(), output_format, "comparison")


# ---------------------------------------------------------------------------
# Cohomology commands
# ---------------------------------------------------------------------------


def _render_oracle(payload: dict[str, Any]) -> RenderableType:
    cells = {(c["n"], c["d"]): c["display"] for c in payload["cells"]}
    ns = sorted({n for n, _ in cells})
    ds = sorted({d for _, d in cells})
    return _grid(f"HH over {payload['field']} (oracle)", ns, [(d, [cells[(n, d)] for n in ns]) for d in ds])


@cli.command("oracle", context_settings=CLICK_CONTEXT_SETTINGS)
@quiver_argument
@field_option
@n_window_options
@d_window_options
@cap_option
@jobs_option
@option("--center/--no-center", default=False, show_default=True, help="Also report the graded center per internal degree")
@format_option
def cli_oracle(
    quiver_path: Path,
    field_spec: FieldSpec,
    nmin: int,
    nmax: int,
    n_fixed: int | None,
    dmin: int,
    dmax: int,
    d_fixed: int | None,
    cap: int | None,
    jobs: int,
    center: bool,
    output_format: str,
) -> None:
    """Cohomology dimensions by exact elimination on the cochain complex."""

    ns, ds = _window(nmin, nmax, n_fixed, "n"), _window(dmin, dmax, d_fixed, "d")
    with domain_errors():
        algebra = _load(quiver_path)
        table = oracle_table(algebra, field_spec, ns, ds, cap, jobs)
        payload: dict[str, Any] = {
            "field": field_spec.label,
            "cap": cap,
            "cells": [
                {"n": n, "d": d, "dim": value.dim, "exact": value.exact, "display": str(value)}
                for (n, d), value in sorted(table.items(), key=lambda item: (item[0][1], item[0][0]))
            ],
        }
        if center:
            payload["center"] = [
                {"d": d, "dim": value.dim, "exact": value.exact}
                for d, value in ((d, graded_center_dim(algebra, field_spec, d, cap)) for d in ds)
            ]
        _emit(payload, output_format, "oracle", None if center else _render_oracle)


def _render_dims(payload: dict[str, Any]) -> RenderableType:
    rows = [(row["d"], [str(v) for v in row["dims"]]) for row in payload["rows"]]
    return _grid(f"HH over {payload['field']}", payload["n"], rows)


@cli.command("dims", context_settings=CLICK_CONTEXT_SETTINGS)
@quiver_argument
@field_option
@n_window_options
@d_window_options
@format_option
def cli_dims(
    quiver_path: Path,
    field_spec: FieldSpec,
    nmin: int,
    nmax: int,
    n_fixed: int | None,
    dmin: int,
    dmax: int,
    d_fixed: int | None,
    output_format: str,
) -> None:
    """Dimensions from the closed-form basis; infinite cells print as inf."""

    ns, ds = _window(nmin, nmax, n_fixed, "n"), _window(dmin, dmax, d_fixed, "d")
    with domain_errors():
        table = dims(_load(quiver_path), field_spec, ns, ds)
        _emit({"field": field_spec.label, **table.to_dict()}, output_format, "dims", _render_dims)


@cli.command("basis", context_settings=CLICK_CONTEXT_SETTINGS)
@quiver_argument
@field_option
@option("--n", "n", type=click.IntRange(min=0), required=True, help="Cohomological degree")
@option("--d", "d", type=int, required=True, help="Internal degree")
@option("--representatives/--no-representatives", default=False, show_default=True, help="Include a cocycle for every finite class")
@format_option
def cli_basis(quiver_path: Path, field_spec: FieldSpec, n: int, d: int, representatives: bool, output_format: str) -> None:
    """Named basis classes of HH^(n,d), with infinite families listed symbolically."""

    with domain_errors():
        algebra = _load(quiver_path)
        report = basis_report(algebra, field_spec, n, d)
        payload = {"field": field_spec.label, **report.to_dict()}
        if representatives:
            payload["representatives"] = {c.name: representative(algebra, c, field_spec).to_list() for c in report.finite}
        _emit(payload, output_format, f"HH^({n},{d}) basis")


# ---------------------------------------------------------------------------
# Structure commands
# ---------------------------------------------------------------------------


def _product(quiver_path: Path, field_spec: FieldSpec, left: str, right: str, operation: Operation, output_format: str) -> None:
    with domain_errors():
        algebra = _load(quiver_path)
        first = parse_class_name(algebra, field_spec, left)
        second = parse_class_name(algebra, field_spec, right)
        combine = cup if operation is Operation.CUP else bracket
        value = combine(algebra, field_spec, HHExpression.of(first), HHExpression.of(second))
        payload = {
            "operation": operation.value,
            "field": field_spec.label,
            "left": first.name,
            "right": second.name,
            "result": value.to_list(),
            "text": str(value),
        }
        _emit(payload, output_format, operation.value, lambda p: Text(p["text"]))


@cli.command("cup", context_settings=CLICK_CONTEXT_SETTINGS)
@quiver_argument
@argument("left")
@argument("right")
@field_option
@format_option
def cli_cup(quiver_path: Path, left: str, right: str, field_spec: FieldSpec, output_format: str) -> None:
    """Cup product of two named classes."""

    _product(quiver_path, field_spec, left, right, Operation.CUP, output_format)


@cli.command("bracket", context_settings=CLICK_CONTEXT_SETTINGS)
@quiver_argument
@argument("left")
@argument("right")
@field_option
@format_option
def cli_bracket(quiver_path: Path, left: str, right: str, field_spec: FieldSpec, output_format: str) -> None:
    """Gerstenhaber bracket of two named classes."""

    _product(quiver_path, field_spec, left, right, Operation.BRACKET, output_format)


@cli.command("table", context_settings=CLICK_CONTEXT_SETTINGS)
@quiver_argument
@field_option
@n_window_options
@d_window_options
@jobs_option
@format_option
def cli_table(
    quiver_path: Path,
    field_spec: FieldSpec,
    nmin: int,
    nmax: int,
    n_fixed: int | None,
    dmin: int,
    dmax: int,
    d_fixed: int | None,
    jobs: int,
    output_format: str,
) -> None:
    """Nonzero cup products and brackets among the finite classes of a window."""

    ns, ds = _window(nmin, nmax, n_fixed, "n"), _window(dmin, dmax, d_fixed, "d")
    with domain_errors():
        algebra = _load(quiver_path)
        table = structure_table(algebra, field_spec, all_classes(algebra, field_spec, ns, ds), jobs)
        _emit({"field": field_spec.label, **table.to_dict()}, output_format, "structure table")


@cli.command("laws", context_settings=CLICK_CONTEXT_SETTINGS)
@quiver_argument
@field_option
@format_option
def cli_laws(quiver_path: Path, field_spec: FieldSpec, output_format: str) -> None:
    """Symbolic cup and bracket laws on every complete cycle's class families."""

    with domain_errors():
        laws = family_laws(_load(quiver_path), field_spec)
        _emit({"field": field_spec.label, "cycles": [law.to_dict() for law in laws]}, output_format, "family laws")


@cli.command("presentation", context_settings=CLICK_CONTEXT_SETTINGS)
@quiver_argument
@field_option
@format_option
def cli_presentation(quiver_path: Path, field_spec: FieldSpec, output_format: str) -> None:
    """Generators and relations of the degree-zero Hochschild algebra."""

    with domain_errors():
        presentation = hh_presentation(_load(quiver_path), field_spec)
        _emit({"field": field_spec.label, **presentation.to_dict()}, output_format, "presentation")


@cli.command("formality", context_settings=CLICK_CONTEXT_SETTINGS)
@quiver_argument
@field_option
@option(
    "--nmax",
    type=click.IntRange(min=FIRST_OBSTRUCTION),
    default=DEFAULT_NMAX,
    show_default=True,
    help="Highest n whose HH^(n,2-n) is inspected",
)
@format_option
def cli_formality(quiver_path: Path, field_spec: FieldSpec, nmax: int, output_format: str) -> None:
    """Surface formality verdict next to the Kadeishvili obstruction spaces."""

    with domain_errors():
        verdict = formality(_load(quiver_path), field_spec, nmax)
        _emit({"field": field_spec.label, **verdict.to_dict()}, output_format, "formality")


@cli.command("random", context_settings=CLICK_CONTEXT_SETTINGS)
@option("--seed", type=int, required=True, help="Seed; the output is a pure function of seed and bounds")
@option("--min-vertices", type=click.IntRange(min=1), default=1, show_default=True)
@option("--max-vertices", type=click.IntRange(min=1), default=4, show_default=True)
@option("--max-arrows", type=click.IntRange(min=0), default=None, help="Defaults to twice the vertex count")
@option("--degree-min", type=int, default=0, show_default=True)
@option("--degree-max", type=int, default=0, show_default=True)
@option("--proper-only", is_flag=True, default=False, help="Reject samples with a complete live cycle")
@option("--loops/--no-loops", default=True, show_default=True, help="Allow arrows from a vertex to itself")
def cli_random(
    seed: int,
    min_vertices: int,
    max_vertices: int,
    max_arrows: int | None,
    degree_min: int,
    degree_max: int,
    proper_only: bool,
    loops: bool,
) -> None:
    """Emit a random gentle quiver document."""

    bounds = RandomBounds(
        max_vertices=max_vertices,
        max_arrows=max_arrows,
        degree_min=degree_min,
        degree_max=degree_max,
        min_vertices=min_vertices,
        proper_only=proper_only,
        allow_loops=loops,
    )
    with domain_errors():
        algebra = random_gentle(seed, bounds)
        click.echo(dump_quiver(algebra.quiver))


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def _invoke_cli(argv: Sequence[str] | None) -> int:
    """Ask ``lib_cli_exit_tools`` to execute the Click command."""

    return lib_cli_exit_tools.run_cli(
        cli,
        argv=list(argv) if argv is not None else None,
        prog_name=__init__conf__.shell_command,
    )


def _current_traceback_mode() -> bool:
    return bool(getattr(lib_cli_exit_tools.config, "traceback", False))


def _traceback_limit(tracebacks_enabled: bool, *, summary_limit: int, verbose_limit: int) -> int:
    return verbose_limit if tracebacks_enabled else summary_limit


def _print_exception(exc: BaseException, *, tracebacks_enabled: bool, length_limit: int) -> int:
    """Render the exception through ``lib_cli_exit_tools`` and return its exit code."""

    lib_cli_exit_tools.print_exception_message(
        trace_back=tracebacks_enabled,
        length_limit=length_limit,
    )
    return lib_cli_exit_tools.get_system_exit_code(exc)


def _run_cli_via_exit_tools(
    argv: Sequence[str] | None,
    *,
    summary_limit: int,
    verbose_limit: int,
) -> int:
    """Run the command; unexpected exceptions are printed within the traceback budget."""

    try:
        return _invoke_cli(argv)
    except BaseException as exc:
        tracebacks_enabled = _current_traceback_mode()
        apply_traceback_preferences(tracebacks_enabled)
        return _print_exception(
            exc,
            tracebacks_enabled=tracebacks_enabled,
            length_limit=_traceback_limit(
                tracebacks_enabled,
                summary_limit=summary_limit,
                verbose_limit=verbose_limit,
            ),
        )


def main(
    argv: Sequence[str] | None = None,
    *,
    restore_traceback: bool = True,
    summary_limit: int = TRACEBACK_SUMMARY_LIMIT,
    verbose_limit: int = TRACEBACK_VERBOSE_LIMIT,
) -> int:
    """Execute the CLI with deliberate error handling and return the exit code.

    Single entry point for the console scripts and ``python -m`` execution.

    Parameters
    ----------
    argv:
        CLI arguments; ``None`` lets Click consume ``sys.argv``.
    restore_traceback:
        Restore the prior ``lib_cli_exit_tools`` traceback configuration after
        execution.
    summary_limit / verbose_limit:
        Character budgets used when formatting exceptions.
    """

    previous_state = snapshot_traceback_state()
    try:
        return _run_cli_via_exit_tools(
            argv,
            summary_limit=summary_limit,
            verbose_limit=verbose_limit,
        )
    finally:
        if restore_traceback:
            restore_traceback_state(previous_state)


__all__ = [
    "CLICK_CONTEXT_SETTINGS",
    "CliContext",
    "OutputFormat",
    "TracebackState",
    "apply_traceback_preferences",
    "cli",
    "configure_logging",
    "domain_errors",
    "main",
    "payload_tree",
    "restore_traceback_state",
    "snapshot_traceback_state",
]
