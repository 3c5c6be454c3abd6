"""Module entry point: ``python -m gentle_hochschild`` behaves like ``gentle``.

The root command runs inside ``lib_cli_exit_tools.cli_session`` with the same
traceback budgets as :func:`gentle_hochschild.cli.main`, so exit codes and
error rendering do not depend on how the toolkit was started.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Final

from lib_cli_exit_tools import cli_session

from . import __init__conf__, cli

if TYPE_CHECKING:
    from collections.abc import Callable
    from contextlib import AbstractContextManager

#: Character budget for truncated tracebacks when running via module entry.
TRACEBACK_SUMMARY_LIMIT: Final[int] = cli.TRACEBACK_SUMMARY_LIMIT
#: Character budget for verbose tracebacks when running via module entry.
TRACEBACK_VERBOSE_LIMIT: Final[int] = cli.TRACEBACK_VERBOSE_LIMIT


def _open_cli_session() -> AbstractContextManager[Callable[..., int]]:
    return cli_session(
        summary_limit=TRACEBACK_SUMMARY_LIMIT,
        verbose_limit=TRACEBACK_VERBOSE_LIMIT,
    )


def _module_main() -> int:
    """Run the root command and return its normalised exit code."""
    with _open_cli_session() as run:
        return run(cli.cli, prog_name=__init__conf__.shell_command)


if __name__ == "__main__":
    raise SystemExit(_module_main())
