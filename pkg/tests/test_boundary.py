"""Boundary tests: the surface model read off the thread system."""

from __future__ import annotations

from collections import Counter
from typing import TYPE_CHECKING

import pytest

from gentle_hochschild.boundary import (
    BoundaryKind,
    ComparisonVerdict,
    aag_invariant,
    boundary_cycles,
    compare_invariants,
    is_proper,
    is_smooth,
    surface_invariants,
)
from gentle_hochschild.quiver import relabel, validate_gentle
from gentle_hochschild.threads import threads

from .conftest import load_algebra

if TYPE_CHECKING:
    from gentle_hochschild.quiver import GentleAlgebra


# ---------------------------------------------------------------------------
# Worked examples
# ---------------------------------------------------------------------------


@pytest.mark.os_agnostic
class TestWorkedExamples:
    """The hand-computed invariants of the fixture algebras."""

    def test_e1_is_a_disc_with_three_stops(self, e1: GentleAlgebra) -> None:
        """One generic component with three stops and winding 2."""
        assert [(c.kind, c.stops, c.winding) for c in boundary_cycles(e1)] == [(BoundaryKind.GENERIC, 3, 2)]

    def test_e1_phi(self, e1: GentleAlgebra) -> None:
        """phi(E1) = {(3, 1)}."""
        assert str(aag_invariant(e1)) == "{(3, 1)}"

    def test_e2_phi(self, e2: GentleAlgebra) -> None:
        """The chain cycle contributes the unmarked pair (inf, -2)."""
        assert str(aag_invariant(e2)) == "{(2, 0), (inf, -2)}"

    def test_e3_phi(self, e3: GentleAlgebra) -> None:
        """Two one-stop components of windings 1 and -1."""
        assert aag_invariant(e3).counts() == Counter({(1, 0): 1, (1, 2): 1})

    def test_e5_has_an_unmarked_component_of_winding_three(self, e5: GentleAlgebra) -> None:
        """The 3-cycle of relations in degree 0."""
        unmarked = [c for c in boundary_cycles(e5) if c.kind is BoundaryKind.UNMARKED]

        assert [c.winding for c in unmarked] == [3]

    def test_oriented_cycle_is_fully_marked(self) -> None:
        """A live cycle gives a component with no stops."""
        kinds = [c.kind for c in boundary_cycles(load_algebra("oriented_cycle"))]

        assert BoundaryKind.FULLY_MARKED in kinds

    @pytest.mark.parametrize("name", ["e1", "e2", "e3", "e4", "e5"])
    def test_fixtures_are_discs_or_annuli(self, name: str) -> None:
        """None of the small fixtures has genus."""
        assert surface_invariants(load_algebra(name)).genus == 0

    def test_smooth_and_proper(self, e1: GentleAlgebra, e2: GentleAlgebra) -> None:
        """E1 is both; E2 has a chain cycle and is not smooth."""
        assert is_smooth(e1)
        assert is_proper(e1)
        assert not is_smooth(e2)
        assert is_proper(e2)

    def test_payload_of_an_unmarked_component(self, e2: GentleAlgebra) -> None:
        """Unmarked components print their stops as inf and carry the cycle."""
        payload = boundary_cycles(e2)[-1].to_dict(e2)

        assert payload == {"kind": "unmarked", "stops": "inf", "winding": 2, "cycle": ["a", "b"]}


# ---------------------------------------------------------------------------
# Structural identities on the random corpus
# ---------------------------------------------------------------------------


@pytest.mark.os_agnostic
class TestCorpusIdentities:
    """Identities that hold for every gentle algebra."""

    def test_genus_is_natural(self, random_corpus: list[GentleAlgebra]) -> None:
        """surface_invariants raises if 2 - chi - b were odd or negative."""
        for algebra in random_corpus:
            assert surface_invariants(algebra).genus >= 0

    def test_each_live_thread_bounds_exactly_once(self, random_corpus: list[GentleAlgebra]) -> None:
        """Generic components partition the maximal live threads."""
        for algebra in random_corpus:
            used = Counter(q for c in boundary_cycles(algebra) for q in c.lives)
            expected = Counter(t.word for t in threads(algebra).live)

            assert used == expected

    def test_stops_sum_to_thread_count(self, random_corpus: list[GentleAlgebra]) -> None:
        """Every stop is a virtual slot, and there are 2|Q0| - |Q1| of them."""
        for algebra in random_corpus:
            stops = sum(c.stops or 0 for c in boundary_cycles(algebra))

            assert stops == 2 * len(algebra.vertices) - len(algebra.arrows)

    def test_at_most_four_components_meet_a_vertex(self, random_corpus: list[GentleAlgebra]) -> None:
        """Each component passes a vertex through one of its four corners."""
        for algebra in random_corpus:
            for vertex in algebra.vertices:
                touching = [c for c in boundary_cycles(algebra) if vertex in c.vertices]

                assert len(touching) <= 4


# ---------------------------------------------------------------------------
# Comparison
# ---------------------------------------------------------------------------


@pytest.mark.os_agnostic
class TestComparison:
    """compare_invariants only ever proves inequivalence."""

    def test_relabelled_copy_is_possibly_equivalent(self, e4: GentleAlgebra) -> None:
        """Renaming cannot change a derived invariant."""
        renamed = validate_gentle(relabel(e4.quiver, {"1": "u", "2": "v", "3": "w"}, {"a": "x", "b": "y", "c": "z"}))

        assert compare_invariants(e4, renamed).verdict is ComparisonVerdict.POSSIBLY_EQUIVALENT

    def test_e2_and_e3_differ_in_phi(self, e2: GentleAlgebra, e3: GentleAlgebra) -> None:
        """Both are annuli; phi tells them apart."""
        comparison = compare_invariants(e2, e3)

        assert comparison.verdict is ComparisonVerdict.NOT_EQUIVALENT
        assert comparison.witness is not None
        assert comparison.witness.startswith("AAG invariant differs")

    def test_e1_and_e2_differ_in_boundary_count(self, e1: GentleAlgebra, e2: GentleAlgebra) -> None:
        """A disc against an annulus."""
        comparison = compare_invariants(e1, e2)

        assert comparison.witness == "boundary components differ: 1 vs 2"

    def test_payload_flags_necessary_condition(self, e1: GentleAlgebra) -> None:
        """Equal invariants never claim equivalence."""
        assert compare_invariants(e1, e1).to_dict()["necessary_condition_only"] is True
