"""Formality tests: the surface criterion next to the obstruction spaces."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import pytest

from gentle_hochschild.boundary import BoundaryKind
from gentle_hochschild.errors import RangeError
from gentle_hochschild.formality import SurfaceVerdict, formality, kadeishvili_dims

from .conftest import load_algebra

if TYPE_CHECKING:
    from gentle_hochschild.fields import FieldSpec
    from gentle_hochschild.quiver import GentleAlgebra


@pytest.mark.os_agnostic
class TestVerdicts:
    """One fixture per verdict."""

    def test_e1_is_formal(self, e1: GentleAlgebra, rationals: FieldSpec) -> None:
        """No winding-2 component without stops, and no obstructions."""
        verdict = formality(e1, rationals)

        assert verdict.surface_verdict is SurfaceVerdict.FORMAL
        assert verdict.kadeishvili.sufficient
        assert verdict.agreement is True

    def test_e3_is_formal(self, e3: GentleAlgebra, rationals: FieldSpec) -> None:
        """The one-stop components of E3 have windings 1 and -1."""
        assert formality(e3, rationals).surface_verdict is SurfaceVerdict.FORMAL

    def test_e4_is_not_formal(self, e4: GentleAlgebra, rationals: FieldSpec) -> None:
        """The chain cycle of winding 2 yields N0 at (3, -1), an obstruction class."""
        verdict = formality(e4, rationals)

        assert verdict.surface_verdict is SurfaceVerdict.NOT_FORMAL
        assert verdict.kadeishvili.obstruction_dims[3] == 1
        assert verdict.agreement is True

    def test_e4_witness_names_the_obstruction(self, e4: GentleAlgebra, rationals: FieldSpec) -> None:
        """The witness points at the unmarked component and its N0 class."""
        (witness,) = formality(e4, rationals).witnesses

        assert witness.kind is BoundaryKind.UNMARKED
        assert witness.winding == 2
        assert witness.classes[0].startswith("N0[")

    def test_e2_criteria_disagree(self, e2: GentleAlgebra, rationals: FieldSpec, caplog: pytest.LogCaptureFixture) -> None:
        """E2 has an unmarked winding-2 cycle in degree 0, so nothing sits in HH^{n, 2-n}."""
        with caplog.at_level(logging.WARNING, logger="gentle_hochschild.formality"):
            verdict = formality(e2, rationals)

        assert verdict.surface_verdict is SurfaceVerdict.NOT_FORMAL
        assert verdict.kadeishvili.sufficient
        assert verdict.agreement is False
        assert "surface criterion says not-formal" in caplog.text

    def test_single_stop_winding_two_is_outside(self, rationals: FieldSpec) -> None:
        """Grading E3 moves a one-stop component to winding 2."""
        verdict = formality(load_algebra("e3_graded"), rationals)

        assert verdict.surface_verdict is SurfaceVerdict.OUTSIDE_HYPOTHESIS
        assert verdict.agreement is None
        assert verdict.witnesses[0].summary.startswith("single-stop component")


@pytest.mark.os_agnostic
class TestObstructionSpaces:
    """HH^{n, 2-n} for 3 <= n <= nmax."""

    def test_window_is_inclusive(self, e1: GentleAlgebra, rationals: FieldSpec) -> None:
        """nmax = 5 reports n = 3, 4 and 5."""
        assert sorted(kadeishvili_dims(e1, rationals, 5).obstruction_dims) == [3, 4, 5]

    def test_nmax_below_three_is_rejected(self, e1: GentleAlgebra, rationals: FieldSpec) -> None:
        """The window would be empty."""
        with pytest.raises(RangeError, match="at least 3"):
            kadeishvili_dims(e1, rationals, 2)

    def test_payload_shape(self, e4: GentleAlgebra, rationals: FieldSpec) -> None:
        """JSON keys are strings and agreement is a plain bool."""
        payload = formality(e4, rationals, 4).to_dict()

        assert payload["kadeishvili"]["obstruction_dims"] == {"3": 1, "4": 0}
        assert payload["agreement"] is True
        assert payload["surface_verdict"] == "not-formal"

    def test_verdict_on_corpus_is_total(self, proper_corpus: list[GentleAlgebra], rationals: FieldSpec) -> None:
        """Every proper algebra gets one of the three verdicts."""
        for algebra in proper_corpus:
            verdict = formality(algebra, rationals, 5)

            assert verdict.surface_verdict in set(SurfaceVerdict)
            assert (verdict.agreement is None) == (verdict.surface_verdict is SurfaceVerdict.OUTSIDE_HYPOTHESIS)
