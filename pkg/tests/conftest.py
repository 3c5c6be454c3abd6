"""Shared pytest fixtures and OS marker configuration.

Purpose:
    Centralizes test configuration, fixture definitions, and platform markers
    so the test suite adapts cleanly to each execution environment.

Fixture Philosophy:
    Fixtures shared across multiple test modules belong here.
    Module-specific fixtures stay within their respective test files.
"""

from __future__ import annotations

import re
from dataclasses import fields
from functools import cache
from pathlib import Path
from typing import TYPE_CHECKING

import lib_cli_exit_tools
import pytest
from click.testing import CliRunner

from gentle_hochschild.fields import FieldSpec
from gentle_hochschild.quiver import RandomBounds, load_quiver, random_gentle, validate_gentle

if TYPE_CHECKING:
    from collections.abc import Callable, Iterator
    from typing import Any

    from gentle_hochschild.quiver import GentleAlgebra


# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------

ANSI_ESCAPE_PATTERN = re.compile(r"\x1B\[[0-?]*[ -/]*[@-~]")
CONFIG_FIELDS: tuple[str, ...] = tuple(field.name for field in fields(type(lib_cli_exit_tools.config)))
FIXTURES_DIR = Path(__file__).resolve().parent / "fixtures"
#: Seeds of the shared random corpus; small enough for exact elimination in seconds.
CORPUS_SEEDS: tuple[int, ...] = tuple(range(12))
CORPUS_BOUNDS = RandomBounds(max_vertices=4, degree_min=-2, degree_max=2)
PROPER_BOUNDS = RandomBounds(max_vertices=4, degree_min=-2, degree_max=2, proper_only=True)

#: Acceptance corpora, parametrized one seed per test.
DIFFERENTIAL_SEEDS: tuple[int, ...] = tuple(range(200))
DIFFERENTIAL_BOUNDS = RandomBounds(max_vertices=6, degree_min=-2, degree_max=2)
ORACLE_SEEDS: tuple[int, ...] = tuple(range(50))
ORACLE_BOUNDS = RandomBounds(max_vertices=6, degree_min=-2, degree_max=2, proper_only=True)
LIVE_ORACLE_BOUNDS = RandomBounds(max_vertices=5, degree_min=-2, degree_max=2)
STRUCTURE_SEEDS: tuple[int, ...] = tuple(range(120))
LAW_SEEDS: tuple[int, ...] = tuple(range(40))
FIELDS: tuple[FieldSpec, ...] = (FieldSpec(0), FieldSpec(2), FieldSpec(3))


# ---------------------------------------------------------------------------
# Marker Registration
# ---------------------------------------------------------------------------


def pytest_configure(config: pytest.Config) -> None:
    """Register OS-specific markers for test categorization."""
    config.addinivalue_line("markers", "os_agnostic: test runs on every supported OS")
    config.addinivalue_line("markers", "os_windows: test exercises Windows-only behavior")
    config.addinivalue_line("markers", "os_macos: test exercises macOS-only behavior")
    config.addinivalue_line("markers", "os_posix: test exercises POSIX-only behavior")
    config.addinivalue_line("markers", "os_linux: test exercises Linux-only behavior")


# ---------------------------------------------------------------------------
# Text Processing Helpers
# ---------------------------------------------------------------------------


def _remove_ansi_codes(text: str) -> str:
    """Strip ANSI escape sequences from text for stable assertions."""
    return ANSI_ESCAPE_PATTERN.sub("", text)


# ---------------------------------------------------------------------------
# CLI Configuration Helpers
# ---------------------------------------------------------------------------


def _snapshot_cli_config() -> dict[str, Any]:
    """Capture every attribute from lib_cli_exit_tools.config."""
    return {name: getattr(lib_cli_exit_tools.config, name) for name in CONFIG_FIELDS}


def _restore_cli_config(snapshot: dict[str, Any]) -> None:
    """Reapply a previously captured CLI configuration."""
    for name, value in snapshot.items():
        setattr(lib_cli_exit_tools.config, name, value)


# ---------------------------------------------------------------------------
# CLI Runner Fixtures
# ---------------------------------------------------------------------------


@pytest.fixture
def cli_runner() -> CliRunner:
    """Provide a fresh CliRunner for each test.

    Each test receives an isolated runner to prevent state leakage
    between CLI invocations.
    """
    return CliRunner()


# ---------------------------------------------------------------------------
# Output Cleaning Fixtures
# ---------------------------------------------------------------------------


@pytest.fixture
def strip_ansi() -> Callable[[str], str]:
    """Return a helper that strips ANSI escape sequences.

    Use this when asserting on CLI output that may contain
    color codes from rich-click.
    """
    return _remove_ansi_codes


# ---------------------------------------------------------------------------
# Traceback State Fixtures
# ---------------------------------------------------------------------------


@pytest.fixture
def preserve_traceback_state() -> Iterator[None]:
    """Snapshot and restore lib_cli_exit_tools configuration.

    Use this fixture when tests modify traceback settings and must
    restore them afterward to avoid polluting other tests.
    """
    snapshot = _snapshot_cli_config()
    try:
        yield
    finally:
        _restore_cli_config(snapshot)


@pytest.fixture
def isolated_traceback_config(monkeypatch: pytest.MonkeyPatch) -> None:
    """Reset traceback flags to a known disabled baseline.

    Use this fixture to ensure tests start with traceback disabled,
    preventing accidental state leakage from previous tests.
    """
    lib_cli_exit_tools.reset_config()
    monkeypatch.setattr(lib_cli_exit_tools.config, "traceback", False, raising=False)
    monkeypatch.setattr(lib_cli_exit_tools.config, "traceback_force_color", False, raising=False)


# ---------------------------------------------------------------------------
# Quiver Fixtures
# ---------------------------------------------------------------------------


def fixture_path(name: str) -> Path:
    """Path of a quiver document under ``tests/fixtures``."""
    return FIXTURES_DIR / f"{name}.json"


def load_algebra(name: str) -> GentleAlgebra:
    """Validate a fixture document; raises like the CLI would."""
    return validate_gentle(load_quiver(fixture_path(name)))


@cache
def seeded_algebra(seed: int, bounds: RandomBounds) -> GentleAlgebra:
    """One corpus member; repeated calls return the same object."""
    return random_gentle(seed, bounds)


@pytest.fixture(scope="session")
def e1() -> GentleAlgebra:
    """A single arrow 1 -> 2: hereditary, HH concentrated in (0, 0)."""
    return load_algebra("e1")


@pytest.fixture(scope="session")
def e2() -> GentleAlgebra:
    """The 2-cycle with both composites in the ideal: one chain cycle ab of winding 2."""
    return load_algebra("e2")


@pytest.fixture(scope="session")
def e3() -> GentleAlgebra:
    """The 2-cycle with only ab in the ideal: one stop class and one stop loop."""
    return load_algebra("e3")


@pytest.fixture(scope="session")
def e4() -> GentleAlgebra:
    """The graded 3-cycle with all relations: chain cycle of winding 2, not formal."""
    return load_algebra("e4")


@pytest.fixture(scope="session")
def e5() -> GentleAlgebra:
    """The ungraded 3-cycle with all relations: odd winding 3."""
    return load_algebra("e5")


@pytest.fixture(scope="session")
def rationals() -> FieldSpec:
    return FieldSpec(0)


@pytest.fixture(scope="session")
def f2() -> FieldSpec:
    return FieldSpec(2)


@pytest.fixture(scope="session")
def f3() -> FieldSpec:
    return FieldSpec(3)


@pytest.fixture(scope="session")
def random_corpus() -> list[GentleAlgebra]:
    """Seeded random gentle algebras with arrow degrees in [-2, 2]."""
    return [random_gentle(seed, CORPUS_BOUNDS) for seed in CORPUS_SEEDS]


@pytest.fixture(scope="session")
def proper_corpus() -> list[GentleAlgebra]:
    """Seeded random algebras without a complete live cycle (finite dimensional)."""
    return [random_gentle(seed, PROPER_BOUNDS) for seed in CORPUS_SEEDS]


@pytest.fixture
def quiver_file() -> Callable[[str], str]:
    """Return a helper mapping a fixture name to its document path for CLI arguments."""
    return lambda name: str(fixture_path(name))
