"""Quiver tests: documents in, validated gentle algebras out.

Each validation test names the rule a bad document breaks; the random
corpus tests pin down determinism and the bounds contract.
"""

from __future__ import annotations

import json
from typing import TYPE_CHECKING

import pytest

from gentle_hochschild.boundary import aag_invariant, is_proper
from gentle_hochschild.errors import (
    DisconnectedQuiverError,
    ExcludedShapeError,
    GentleAxiomError,
    QuiverFormatError,
    RandomBoundsError,
)
from gentle_hochschild.quiver import (
    MAX_VALENCE,
    RandomBounds,
    dump_quiver,
    load_quiver,
    parse_quiver,
    random_gentle,
    relabel,
    validate_gentle,
)

from .conftest import fixture_path

if TYPE_CHECKING:
    from gentle_hochschild.quiver import GentleAlgebra


# ---------------------------------------------------------------------------
# Document parsing
# ---------------------------------------------------------------------------


@pytest.mark.os_agnostic
class TestDocumentParsing:
    """Malformed documents fail with QuiverFormatError before validation."""

    def test_truncated_json(self) -> None:
        """A cut-off document is malformed."""
        with pytest.raises(QuiverFormatError, match="malformed"):
            load_quiver(fixture_path("malformed"))

    def test_missing_vertices(self) -> None:
        """The vertex list is mandatory."""
        with pytest.raises(QuiverFormatError):
            parse_quiver('{"arrows": []}')

    def test_dangling_vertex(self) -> None:
        """Arrows may only connect declared vertices."""
        with pytest.raises(QuiverFormatError, match="unknown vertex"):
            parse_quiver('{"vertices": ["1"], "arrows": [{"name": "a", "from": "1", "to": "2"}]}')

    def test_non_composable_relation(self) -> None:
        """[beta, alpha] needs source(beta) == target(alpha)."""
        document = {
            "vertices": ["1", "2", "3"],
            "arrows": [{"name": "a", "from": "1", "to": "2"}, {"name": "b", "from": "3", "to": "1"}],
            "relations": [["b", "a"]],
        }

        with pytest.raises(QuiverFormatError, match="non-composable"):
            parse_quiver(json.dumps(document))

    def test_non_integer_degree(self) -> None:
        """Degrees are integers."""
        with pytest.raises(QuiverFormatError, match="non-integer degree"):
            parse_quiver('{"vertices": ["1", "2"], "arrows": [{"name": "a", "from": "1", "to": "2", "degree": 0.5}]}')

    def test_duplicate_arrow_names(self) -> None:
        """Arrow names identify arrows."""
        document = {
            "vertices": ["1", "2"],
            "arrows": [{"name": "a", "from": "1", "to": "2"}, {"name": "a", "from": "2", "to": "1"}],
        }

        with pytest.raises(QuiverFormatError, match="duplicate arrow"):
            parse_quiver(json.dumps(document))

    def test_relations_default_to_empty(self) -> None:
        """A document without relations describes a hereditary algebra."""
        quiver = parse_quiver('{"vertices": ["1", "2"], "arrows": [{"name": "a", "from": "1", "to": "2"}]}')

        assert quiver.relations == ()

    def test_dump_is_canonical(self) -> None:
        """The canonical form parses back to the same quiver."""
        quiver = load_quiver(fixture_path("e4"))

        assert parse_quiver(dump_quiver(quiver)) == quiver


# ---------------------------------------------------------------------------
# Gentle axioms
# ---------------------------------------------------------------------------


@pytest.mark.os_agnostic
class TestValidation:
    """validate_gentle names the violated axiom or excluded shape."""

    def test_single_vertex_loop_is_excluded(self) -> None:
        """The one-vertex loop is outside the convention."""
        with pytest.raises(ExcludedShapeError, match="loop"):
            validate_gentle(load_quiver(fixture_path("loop")))

    def test_kronecker_is_excluded(self) -> None:
        """Two parallel arrows without relations are outside the convention."""
        with pytest.raises(ExcludedShapeError, match="Kronecker"):
            validate_gentle(load_quiver(fixture_path("kronecker")))

    def test_three_outgoing_arrows_break_axiom_one(self) -> None:
        """At most two arrows leave a vertex."""
        with pytest.raises(GentleAxiomError) as exc:
            validate_gentle(load_quiver(fixture_path("three_out")))

        assert exc.value.axiom == "1"
        assert exc.value.location == "vertex 1"

    def test_two_relations_through_one_arrow_break_axiom_two(self) -> None:
        """c may be in relation with only one of a and b."""
        with pytest.raises(GentleAxiomError) as exc:
            validate_gentle(load_quiver(fixture_path("double_relation")))

        assert exc.value.axiom == "2"

    def test_two_live_continuations_break_axiom_three(self) -> None:
        """Without relations, c continues both a and b."""
        quiver = load_quiver(fixture_path("double_relation"))
        relaxed = parse_quiver(json.dumps({**quiver.to_document(), "relations": []}))

        with pytest.raises(GentleAxiomError) as exc:
            validate_gentle(relaxed)

        assert exc.value.axiom == "3"

    def test_disconnected_quiver_is_rejected(self) -> None:
        """Each block must be run separately."""
        with pytest.raises(DisconnectedQuiverError, match="2 blocks"):
            validate_gentle(load_quiver(fixture_path("disconnected")))

    def test_navigation_maps_of_e3(self, e3: GentleAlgebra) -> None:
        """In E3 only ab is a relation: b continues into a by a chain, a into b live."""
        assert e3.chain_succ["b"] == "a"
        assert e3.live_succ["a"] == "b"
        assert "a" not in e3.chain_succ

    def test_in_ideal_reads_composition_right_to_left(self, e3: GentleAlgebra) -> None:
        """in_ideal(beta, alpha) asks whether beta alpha (alpha first) is a relation."""
        assert e3.in_ideal("a", "b")
        assert not e3.in_ideal("b", "a")


# ---------------------------------------------------------------------------
# Random corpus
# ---------------------------------------------------------------------------


@pytest.mark.os_agnostic
class TestRandomGentle:
    """random_gentle is a pure function of seed and bounds."""

    def test_same_seed_same_quiver(self) -> None:
        """Two draws with one seed agree."""
        bounds = RandomBounds(max_vertices=5, degree_min=-1, degree_max=1)

        assert random_gentle(7, bounds).quiver == random_gentle(7, bounds).quiver

    def test_samples_respect_vertex_bounds(self, random_corpus: list[GentleAlgebra]) -> None:
        """Between one and four vertices."""
        assert all(1 <= len(a.vertices) <= 4 for a in random_corpus)

    def test_samples_respect_valence(self, random_corpus: list[GentleAlgebra]) -> None:
        """No vertex has more than two arrows in or out."""
        for algebra in random_corpus:
            for vertex in algebra.vertices:
                assert len(algebra.outgoing[vertex]) <= MAX_VALENCE
                assert len(algebra.incoming[vertex]) <= MAX_VALENCE

    def test_samples_respect_degree_bounds(self, random_corpus: list[GentleAlgebra]) -> None:
        """Arrow degrees stay inside [-2, 2]."""
        assert all(-2 <= a.degree <= 2 for algebra in random_corpus for a in algebra.arrows)

    def test_proper_only_excludes_live_cycles(self, proper_corpus: list[GentleAlgebra]) -> None:
        """proper_only yields finite-dimensional algebras."""
        assert all(is_proper(a) for a in proper_corpus)

    def test_loops_can_be_forbidden(self) -> None:
        """--no-loops never produces an arrow from a vertex to itself."""
        bounds = RandomBounds(max_vertices=3, allow_loops=False)

        for seed in range(10):
            assert all(a.source != a.target for a in random_gentle(seed, bounds).arrows)

    def test_empty_degree_range_is_rejected(self) -> None:
        """degree_min above degree_max is a bounds error."""
        with pytest.raises(RandomBoundsError):
            random_gentle(0, RandomBounds(degree_min=1, degree_max=0))

    def test_too_many_arrows_are_rejected(self) -> None:
        """Three vertices carry at most six arrows."""
        with pytest.raises(RandomBoundsError, match="capacity"):
            random_gentle(0, RandomBounds(max_vertices=3, max_arrows=7))


# ---------------------------------------------------------------------------
# Relabelling
# ---------------------------------------------------------------------------


@pytest.mark.os_agnostic
class TestRelabel:
    """Renaming vertices and arrows changes no invariant."""

    def test_aag_invariant_survives_relabelling(self, e4: GentleAlgebra) -> None:
        """phi is a derived invariant, so certainly a relabelling invariant."""
        renamed = relabel(e4.quiver, {"1": "x", "2": "y", "3": "z"}, {"a": "p", "b": "q", "c": "r"})

        assert aag_invariant(validate_gentle(renamed)).counts() == aag_invariant(e4).counts()

    def test_relations_follow_the_arrow_map(self, e3: GentleAlgebra) -> None:
        """The relation ab becomes yx."""
        renamed = relabel(e3.quiver, {"1": "1", "2": "2"}, {"a": "y", "b": "x"})

        assert renamed.relations == (("y", "x"),)
