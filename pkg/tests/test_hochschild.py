"""Closed-form basis tests: names, bidegrees, representatives and identification."""

from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

from gentle_hochschild.complexes import Cochain, ParallelPair, differential, pair_basis
from gentle_hochschild.errors import ClassNameError, NeedsCapError
from gentle_hochschild.fields import FieldSpec
from gentle_hochschild.hochschild import (
    ClassKind,
    HHExpression,
    all_classes,
    basis,
    basis_report,
    classes_up_to,
    dims,
    identify,
    parse_class_name,
    representative,
    spanning_tree,
)
from gentle_hochschild.threads import path_word

from .conftest import load_algebra

if TYPE_CHECKING:
    from gentle_hochschild.quiver import GentleAlgebra


def _names(algebra: GentleAlgebra, field: FieldSpec, n: int, d: int) -> list[str]:
    return [c.name for c in basis(algebra, field, n, d)]


# ---------------------------------------------------------------------------
# Worked examples
# ---------------------------------------------------------------------------


@pytest.mark.os_agnostic
class TestWorkedBases:
    """The fixture bases computed by hand."""

    def test_e1_is_the_ground_field(self, e1: GentleAlgebra, rationals: FieldSpec) -> None:
        """Only the unit survives."""
        table = dims(e1, rationals, range(5), range(-2, 3))

        assert {cell: dim for cell, dim in table.cells if dim} == {(0, 0): 1}

    def test_e2_one_class_in_every_degree(self, e2: GentleAlgebra, rationals: FieldSpec) -> None:
        """HH^{n,0}(E2) is one-dimensional for every n."""
        assert dims(e2, rationals, range(7), [0]).row(0) == [1] * 7

    @pytest.mark.parametrize(
        ("n", "name"),
        [(0, "unit"), (1, "arrow[b]"), (2, "N0[ab^1]"), (3, "N1[ab^1]"), (4, "N0[ab^2]"), (5, "N1[ab^2]")],
    )
    def test_e2_class_names(self, e2: GentleAlgebra, rationals: FieldSpec, n: int, name: str) -> None:
        """Trace classes alternate N0 and N1 along the powers of ab."""
        assert _names(e2, rationals, n, 0) == [name]

    def test_e3_classes(self, e3: GentleAlgebra, rationals: FieldSpec) -> None:
        """The unit and the stop loop, one arrow class and one stop class."""
        assert _names(e3, rationals, 0, 0) == ["unit", "stoploop[ba]"]
        assert _names(e3, rationals, 1, 0) == ["arrow[b]"]
        assert _names(e3, rationals, 2, 0) == ["stop[chain:ab]"]

    def test_e3_dims(self, e3: GentleAlgebra, rationals: FieldSpec) -> None:
        """Nothing beyond n = 2."""
        assert dims(e3, rationals, range(7), [0]).row(0) == [2, 1, 1, 0, 0, 0, 0]

    def test_grading_moves_the_stop_class(self, rationals: FieldSpec) -> None:
        """With |a| = 1 the stop class sits in internal degree -1."""
        algebra = load_algebra("e3_graded")

        assert _names(algebra, rationals, 2, -1) == ["stop[chain:ab]"]

    def test_e4_trace_classes_in_negative_degree(self, e4: GentleAlgebra, rationals: FieldSpec) -> None:
        """The chain cycle has degree 1, so N0 sits at (3, -1)."""
        (n0,) = basis(e4, rationals, 3, -1)

        assert n0.kind is ClassKind.N0
        assert n0.cycle is not None
        assert n0.cycle.exponent == 1

    def test_e5_parity_over_rationals(self, e5: GentleAlgebra, rationals: FieldSpec) -> None:
        """u^1 has odd winding; u^2 is the first power with classes."""
        assert _names(e5, rationals, 3, 0) == []
        assert [c.kind for c in basis(e5, rationals, 6, 0)] == [ClassKind.N0]
        assert [c.kind for c in basis(e5, rationals, 7, 0)] == [ClassKind.N1]

    def test_e5_parity_over_f2(self, e5: GentleAlgebra, f2: FieldSpec) -> None:
        """In characteristic 2 every power counts."""
        assert [c.kind for c in basis(e5, f2, 3, 0)] == [ClassKind.N0]
        assert [c.kind for c in basis(e5, f2, 4, 0)] == [ClassKind.N1]


# ---------------------------------------------------------------------------
# Infinite cells
# ---------------------------------------------------------------------------


@pytest.mark.os_agnostic
class TestFamilies:
    """A degree-0 live cycle gives symbolic families at (0, 0) and (1, 0)."""

    def test_report_lists_families(self, rationals: FieldSpec) -> None:
        """Both cells carry one family each and no finite dimension."""
        algebra = load_algebra("oriented_cycle")

        for n in (0, 1):
            report = basis_report(algebra, rationals, n, 0)

            assert report.dimension is None
            assert len(report.families) == 1

    def test_basis_refuses_infinite_cells(self, rationals: FieldSpec) -> None:
        """A complete list cannot be produced."""
        with pytest.raises(NeedsCapError, match="infinite"):
            basis(load_algebra("oriented_cycle"), rationals, 0, 0)

    def test_dims_print_infinity(self, rationals: FieldSpec) -> None:
        """The table shows inf for family cells."""
        payload = dims(load_algebra("oriented_cycle"), rationals, range(2), [0]).to_dict()

        assert payload["rows"][0]["dims"][0] == "inf"

    def test_classes_up_to_expands_families(self, rationals: FieldSpec) -> None:
        """Length 4 admits the first two powers of the 2-cycle at (0, 0)."""
        algebra = load_algebra("oriented_cycle")

        members = [c for c in classes_up_to(algebra, rationals, 0, 0, 4) if c.kind is ClassKind.N0]

        assert [c.cycle.exponent for c in members if c.cycle is not None] == [1, 2]


# ---------------------------------------------------------------------------
# Representatives and identification
# ---------------------------------------------------------------------------


@pytest.mark.os_agnostic
class TestRepresentatives:
    """Every basis class has an explicit cocycle, and identify inverts it."""

    @pytest.mark.parametrize("name", ["e1", "e2", "e3", "e4", "e5", "e3_graded"])
    def test_representatives_are_cocycles(self, name: str) -> None:
        """representative raises on a non-cocycle; it must not here."""
        algebra = load_algebra(name)
        for field in (FieldSpec(0), FieldSpec(2)):
            for hh_class in all_classes(algebra, field, range(7), range(-3, 3)):
                rep = representative(algebra, hh_class, field)

                assert differential(algebra, rep, field).is_zero()
                assert rep.bidegree == hh_class.bidegree

    def test_identify_recovers_each_class(self, e2: GentleAlgebra, rationals: FieldSpec) -> None:
        """The class of a representative is that class."""
        for hh_class in all_classes(e2, rationals, range(7), [0]):
            assert identify(e2, rationals, representative(e2, hh_class, rationals)) == HHExpression.of(hh_class)

    def test_identify_on_random_corpus(self, proper_corpus: list[GentleAlgebra], rationals: FieldSpec) -> None:
        """Representatives stay independent modulo coboundaries."""
        for algebra in proper_corpus:
            for hh_class in all_classes(algebra, rationals, range(4), range(-2, 3)):
                expression = identify(algebra, rationals, representative(algebra, hh_class, rationals))

                assert expression.coefficient(hh_class) == 1

    def test_zero_cochain_identifies_to_zero(self, e2: GentleAlgebra, rationals: FieldSpec) -> None:
        """The empty cochain is the zero class."""
        assert identify(e2, rationals, Cochain((2, 0))).is_zero()

    def test_sum_of_rotations_is_trace(self, e2: GentleAlgebra, rationals: FieldSpec) -> None:
        """(ab, e_2) + (ba, e_1) is the representative of N0[ab^1]."""
        pairs = pair_basis(e2, 2, 0).pairs
        z = Cochain.build((2, 0), [(pair, 1) for pair in pairs], rationals)

        assert str(identify(e2, rationals, z)) == "1 * N0[ab^1]"

    def test_scaled_representative(self, e2: GentleAlgebra, f3: FieldSpec) -> None:
        """Coefficients are reduced into the field."""
        (n1,) = basis(e2, f3, 3, 0)
        rep = representative(e2, n1, f3).scaled(4, f3)

        assert identify(e2, f3, rep).coefficient(n1) == 1


# ---------------------------------------------------------------------------
# Spanning tree
# ---------------------------------------------------------------------------


@pytest.mark.os_agnostic
class TestSpanningTree:
    """Arrow classes depend on the tree only through their count."""

    def test_e2_tree(self, e2: GentleAlgebra) -> None:
        """Rooted at vertex 1 the tree uses a."""
        assert spanning_tree(e2) == frozenset({"a"})

    def test_root_changes_tree_not_dimension(self, e4: GentleAlgebra, rationals: FieldSpec) -> None:
        """|Q1| - |Q0| + 1 arrows stay off any spanning tree."""
        for root in e4.vertices:
            tree = spanning_tree(e4, root)

            assert len(e4.arrows) - len(tree) == len(basis(e4, rationals, 1, 0))

    def test_arrow_classes_are_cohomologous_across_trees(self, e4: GentleAlgebra, rationals: FieldSpec) -> None:
        """Each off-tree arrow pair is a nonzero class whichever tree is chosen."""
        (arrow_class,) = basis(e4, rationals, 1, 0)
        for name in ("a", "b", "c"):
            word = path_word(e4, name)
            z = Cochain.single(ParallelPair(word, word))

            assert identify(e4, rationals, z).coefficient(arrow_class) != 0


# ---------------------------------------------------------------------------
# Class names
# ---------------------------------------------------------------------------


@pytest.mark.os_agnostic
class TestClassNames:
    """The class-name grammar."""

    @pytest.mark.parametrize("name", ["unit", "arrow[b]", "N0[ab^1]", "N1[ab^3]", "N0[ab^2]"])
    def test_round_trip_of_e2_names(self, e2: GentleAlgebra, rationals: FieldSpec, name: str) -> None:
        """Parsing a printed name gives it back."""
        assert parse_class_name(e2, rationals, name).name == name

    def test_any_rotation_is_accepted(self, e2: GentleAlgebra, rationals: FieldSpec) -> None:
        """N1[ba^2] is printed in canonical rotation."""
        assert parse_class_name(e2, rationals, "N1[ba^2]").name == "N1[ab^2]"

    def test_exponent_defaults_to_one(self, e2: GentleAlgebra, rationals: FieldSpec) -> None:
        """N0[ab] means N0[ab^1]."""
        assert parse_class_name(e2, rationals, "N0[ab]").name == "N0[ab^1]"

    def test_stop_names(self, e3: GentleAlgebra, rationals: FieldSpec) -> None:
        """Stop classes parse back to their bidegrees."""
        assert parse_class_name(e3, rationals, "stop[chain:ab]").bidegree == (2, 0)
        assert parse_class_name(e3, rationals, "stoploop[ba]").bidegree == (0, 0)

    @pytest.mark.parametrize(
        "text",
        ["N2[ab^1]", "arrow[z]", "arrow[a]", "N0[ab^0]", "stop[chain:ba]", "stoploop[ab]", "N0[a^1]", ""],
    )
    def test_invalid_names(self, e2: GentleAlgebra, rationals: FieldSpec, text: str) -> None:
        """Unknown kinds, tree arrows, zero exponents and non-cycles are rejected."""
        with pytest.raises(ClassNameError):
            parse_class_name(e2, rationals, text)

    def test_odd_winding_is_no_class_over_rationals(self, e5: GentleAlgebra, rationals: FieldSpec) -> None:
        """N0[abc^1] needs characteristic 2 in E5."""
        (cycle_name,) = {c.cycle.name for c in basis(e5, rationals, 6, 0) if c.cycle is not None}

        with pytest.raises(ClassNameError, match="odd winding"):
            parse_class_name(e5, rationals, f"N0[{cycle_name}^1]")

    def test_odd_winding_is_a_class_over_f2(self, e5: GentleAlgebra, f2: FieldSpec) -> None:
        """The same name parses in characteristic 2."""
        (hh_class,) = basis(e5, f2, 3, 0)

        assert parse_class_name(e5, f2, hh_class.name) == hh_class
