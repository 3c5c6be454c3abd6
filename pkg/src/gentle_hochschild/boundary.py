"""Boundary components of the surface model and the invariants read off them.

A generic boundary cycle alternates maximal live threads ``q_i`` (walked
forward) with maximal relation chains ``p_i`` (walked backward): the chain
ending at the out-slot where ``q_i`` ends leads back to the in-slot where
``q_{i+1}`` starts. Complete relation-chain cycles are the unmarked
components, complete live cycles the fully-marked ones.

Winding numbers
---------------
* generic: ``r + sum(|q_i| - l(p_i))``
* unmarked (chain cycle ``p``): ``l(p) - |p|``
* fully-marked (live cycle ``q``): ``-|q|``

AAG pairs are ``(n, n - w)`` with ``n = r`` for generic, ``n = 0`` for
fully-marked and ``n = inf`` (``None``) for unmarked components.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from enum import StrEnum
from functools import lru_cache
from typing import TYPE_CHECKING, Any

from .errors import InternalConsistencyError
from .threads import CycleKind, CyclicWord, PathWord, complete_cycles, threads, word_key

if TYPE_CHECKING:
    from .quiver import GentleAlgebra

logger = logging.getLogger(__name__)

#: Printed in place of the stop count of unmarked components.
INFINITY_LABEL = "inf"


class BoundaryKind(StrEnum):
    GENERIC = "generic"
    FULLY_MARKED = "fully-marked"
    UNMARKED = "unmarked"


@dataclass(frozen=True)
class BoundaryCycle:
    """One boundary component.

    ``lives`` and ``chains`` hold ``q_1..q_r`` and ``p_1..p_r`` for generic
    cycles; marked and unmarked cycles carry their complete ``cycle`` instead.
    """

    kind: BoundaryKind
    winding: int
    lives: tuple[PathWord, ...] = ()
    chains: tuple[PathWord, ...] = ()
    cycle: CyclicWord | None = None

    @property
    def stops(self) -> int | None:
        """``n(c)``; ``None`` stands for infinity."""
        if self.kind is BoundaryKind.UNMARKED:
            return None
        if self.kind is BoundaryKind.FULLY_MARKED:
            return 0
        return len(self.lives)

    @property
    def aag_pair(self) -> tuple[int | None, int]:
        if self.kind is BoundaryKind.UNMARKED:
            return None, -self.winding
        stops = self.stops or 0
        return stops, stops - self.winding

    @property
    def vertices(self) -> frozenset[str]:
        words = [*self.lives, *self.chains]
        if self.cycle is not None:
            words.append(self.cycle.representative)
        return frozenset(v for w in words for v in (w.source, w.target))

    def to_dict(self, algebra: GentleAlgebra) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "kind": self.kind.value,
            "stops": INFINITY_LABEL if self.stops is None else self.stops,
            "winding": self.winding,
        }
        if self.cycle is not None:
            payload["cycle"] = self.cycle.primitive.as_list()
        else:
            payload["segments"] = [
                {"live": _word_payload(q), "chain": _word_payload(p)} for q, p in zip(self.lives, self.chains, strict=True)
            ]
        return payload


def _word_payload(word: PathWord) -> list[str] | str:
    return str(word) if word.is_trivial else word.as_list()


def _generic_winding(lives: tuple[PathWord, ...], chains: tuple[PathWord, ...]) -> int:
    return len(lives) + sum(q.degree for q in lives) - sum(p.length for p in chains)


def _check_reduced(lives: tuple[PathWord, ...], chains: tuple[PathWord, ...]) -> None:
    count = len(lives)
    for i, (q, p) in enumerate(zip(lives, chains, strict=True)):
        following = lives[(i + 1) % count]
        if q.target != p.target or p.source != following.source:
            raise InternalConsistencyError(f"boundary segments {q} / {p} / {following} do not close up")
        if not q.is_trivial and not p.is_trivial and q.first == p.first:
            raise InternalConsistencyError(f"boundary segments {q} and {p} share their last-traversed arrow")
        if not p.is_trivial and not following.is_trivial and p.last == following.last:
            raise InternalConsistencyError(f"boundary segments {p} and {following} share their first-traversed arrow")


def _canonical_segments(
    algebra: GentleAlgebra, lives: list[PathWord], chains: list[PathWord]
) -> tuple[tuple[PathWord, ...], tuple[PathWord, ...]]:
    count = len(lives)

    def key(shift: int) -> list[tuple[Any, ...]]:
        return [(word_key(algebra, lives[(shift + i) % count]), word_key(algebra, chains[(shift + i) % count])) for i in range(count)]

    best = min(range(count), key=key)
    return (
        tuple(lives[(best + i) % count] for i in range(count)),
        tuple(chains[(best + i) % count] for i in range(count)),
    )


@lru_cache(maxsize=256)
def boundary_cycles(algebra: GentleAlgebra) -> tuple[BoundaryCycle, ...]:
    """All boundary components: generic ones first, then unmarked, then fully-marked.

    >>> from gentle_hochschild.quiver import GradedQuiver, Arrow, validate_gentle
    >>> e1 = validate_gentle(GradedQuiver(("1", "2"), (Arrow("a", "1", "2"),)))
    >>> [(c.kind.value, c.stops, c.winding) for c in boundary_cycles(e1)]
    [('generic', 3, 2)]
    """
    system = threads(algebra)
    visited: set[tuple[str, int]] = set()
    generic: list[BoundaryCycle] = []
    for thread in system.live:
        if thread.start in visited:
            continue
        lives: list[PathWord] = []
        chains: list[PathWord] = []
        current = thread
        while current.start not in visited:
            visited.add(current.start)
            chain = system.chain_ending_at(current.end)
            lives.append(current.word)
            chains.append(chain.word)
            current = system.live_starting_at(chain.start)
        q_words, p_words = _canonical_segments(algebra, lives, chains)
        _check_reduced(q_words, p_words)
        generic.append(BoundaryCycle(BoundaryKind.GENERIC, _generic_winding(q_words, p_words), q_words, p_words))
    generic.sort(key=lambda c: [(word_key(algebra, q), word_key(algebra, p)) for q, p in zip(c.lives, c.chains, strict=True)])

    closed: list[BoundaryCycle] = []
    for cycle in complete_cycles(algebra):
        kind = BoundaryKind.UNMARKED if cycle.kind is CycleKind.CHAIN else BoundaryKind.FULLY_MARKED
        closed.append(BoundaryCycle(kind, cycle.winding, cycle=cycle))
    logger.debug("boundary walk produced %d generic and %d closed components", len(generic), len(closed))
    return (*generic, *closed)


def _pair_sort_key(pair: tuple[int | None, int]) -> tuple[bool, int, int]:
    stops, m = pair
    return stops is None, stops or 0, m


@dataclass(frozen=True)
class AAGInvariant:
    """The multiset of pairs ``(n, m)``; ``n is None`` means infinity."""

    pairs: tuple[tuple[int | None, int], ...]

    @classmethod
    def from_pairs(cls, pairs: list[tuple[int | None, int]]) -> AAGInvariant:
        return cls(tuple(sorted(pairs, key=_pair_sort_key)))

    def counts(self) -> Counter[tuple[int | None, int]]:
        return Counter(self.pairs)

    def to_list(self) -> list[dict[str, Any]]:
        counter = self.counts()
        return [
            {"n": INFINITY_LABEL if n is None else n, "m": m, "multiplicity": counter[(n, m)]}
            for n, m in sorted(counter, key=_pair_sort_key)
        ]

    def __str__(self) -> str:
        parts = [f"({INFINITY_LABEL if n is None else n}, {m})" for n, m in self.pairs]
        return "{" + ", ".join(parts) + "}"


def aag_invariant(algebra: GentleAlgebra) -> AAGInvariant:
    """The AAG derived invariant.

    >>> from gentle_hochschild.quiver import GradedQuiver, Arrow, validate_gentle
    >>> e2 = validate_gentle(GradedQuiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "2", "1")), (("b", "a"), ("a", "b"))))
    >>> str(aag_invariant(e2))
    '{(2, 0), (inf, -2)}'
    """
    return AAGInvariant.from_pairs([cycle.aag_pair for cycle in boundary_cycles(algebra)])


@dataclass(frozen=True)
class SurfaceInvariants:
    boundary_count: int
    euler_characteristic: int
    genus: int
    components: tuple[tuple[BoundaryKind, int | None, int], ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "boundary_components": self.boundary_count,
            "euler_characteristic": self.euler_characteristic,
            "genus": self.genus,
            "components": [
                {"kind": kind.value, "stops": INFINITY_LABEL if stops is None else stops, "winding": winding}
                for kind, stops, winding in self.components
            ],
        }


def surface_invariants(algebra: GentleAlgebra) -> SurfaceInvariants:
    cycles = boundary_cycles(algebra)
    chi = len(algebra.vertices) - len(algebra.arrows)
    b = len(cycles)
    doubled = 2 - chi - b
    if doubled < 0 or doubled % 2:
        raise InternalConsistencyError(f"genus (2 - {chi} - {b}) / 2 is not a non-negative integer")
    return SurfaceInvariants(b, chi, doubled // 2, tuple((c.kind, c.stops, c.winding) for c in cycles))


def is_smooth(algebra: GentleAlgebra) -> bool:
    """No complete relation-chain cycle."""
    return not any(c.kind is CycleKind.CHAIN for c in complete_cycles(algebra))


def is_proper(algebra: GentleAlgebra) -> bool:
    """No complete live cycle, i.e. finite total dimension."""
    return not any(c.kind is CycleKind.LIVE for c in complete_cycles(algebra))


class ComparisonVerdict(StrEnum):
    POSSIBLY_EQUIVALENT = "possibly-equivalent"
    NOT_EQUIVALENT = "not-equivalent"


@dataclass(frozen=True)
class Comparison:
    """Outcome of :func:`compare_invariants`; equality is only a necessary condition."""

    verdict: ComparisonVerdict
    witness: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return {"verdict": self.verdict.value, "witness": self.witness, "necessary_condition_only": True}


def compare_invariants(first: GentleAlgebra, second: GentleAlgebra) -> Comparison:
    left, right = surface_invariants(first), surface_invariants(second)
    if left.boundary_count != right.boundary_count:
        return Comparison(ComparisonVerdict.NOT_EQUIVALENT, f"boundary components differ: {left.boundary_count} vs {right.boundary_count}")
    if left.genus != right.genus:
        return Comparison(ComparisonVerdict.NOT_EQUIVALENT, f"genus differs: {left.genus} vs {right.genus}")
    phi_left, phi_right = aag_invariant(first), aag_invariant(second)
    if phi_left.counts() != phi_right.counts():
        return Comparison(ComparisonVerdict.NOT_EQUIVALENT, f"AAG invariant differs: {phi_left} vs {phi_right}")
    windings_left = Counter(winding for _, _, winding in left.components)
    windings_right = Counter(winding for _, _, winding in right.components)
    if windings_left != windings_right:
        return Comparison(
            ComparisonVerdict.NOT_EQUIVALENT,
            f"winding numbers differ: {sorted(windings_left.elements())} vs {sorted(windings_right.elements())}",
        )
    return Comparison(ComparisonVerdict.POSSIBLY_EQUIVALENT)


__all__ = [
    "INFINITY_LABEL",
    "AAGInvariant",
    "BoundaryCycle",
    "BoundaryKind",
    "Comparison",
    "ComparisonVerdict",
    "SurfaceInvariants",
    "aag_invariant",
    "boundary_cycles",
    "compare_invariants",
    "is_proper",
    "is_smooth",
    "surface_invariants",
]
