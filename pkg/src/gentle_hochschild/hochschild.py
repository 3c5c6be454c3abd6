"""Closed-form basis of bigraded Hochschild cohomology.

Classes and their bidegrees
---------------------------
* ``unit``: the sum of all vertex pairs ``(x, x)``, at ``(0, 0)``.
* ``N0[u^m]``, ``N1[u^m]``: trace classes of a cycle power. For a relation
  chain cycle ``p`` they sit at ``(l(p), -|p|)`` and ``(l(p) + 1, -|p|)``; for a
  live cycle ``q`` at ``(0, |q|)`` and ``(1, |q|)``.
* ``stop[chain:u]``: a maximal chain ``u`` with its companion ``v``, at
  ``(l(u), |v| - |u|)``.
* ``stoploop[u]``: a closed maximal live path, ``(s(u), u)`` at ``(0, |u|)``.
* ``arrow[a]``: ``(a, a)`` for an arrow off the spanning tree, at ``(1, 0)``.

A cycle power contributes its two trace classes together exactly when its
winding number is even or the field has characteristic 2. Degree-0 live
cycles give infinitely many classes at one bidegree; they are reported as
symbolic families.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Any, Final

import networkx as nx

from .complexes import Cochain, ParallelPair, differential, reduce_mod_coboundaries, sign
from .errors import ClassNameError, CocycleError, NeedsCapError, WordError
from .threads import (
    CycleKind,
    CyclicWord,
    PathWord,
    closed_maximal_live,
    complete_cycles,
    concat,
    cyclic_word,
    maximal_chains_and_companions,
    parse_word,
    rotate,
)

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from .fields import FieldSpec
    from .quiver import GentleAlgebra

logger = logging.getLogger(__name__)

INFINITE: Final[str] = "inf"


class ClassKind(StrEnum):
    UNIT = "unit"
    N0 = "N0"
    N1 = "N1"
    STOP_CHAIN = "stop"
    STOP_LOOP = "stoploop"
    ARROW = "arrow"


_KIND_ORDER: Final[dict[ClassKind, int]] = {kind: i for i, kind in enumerate(ClassKind)}


@dataclass(frozen=True)
class HHClass:
    """A symbolic basis element of ``HH^{n,d}``.

    ``cycle`` is set for the trace classes (a power ``u^m``), ``word`` and
    ``companion`` for the stop classes, ``arrow`` for arrow classes.
    """

    kind: ClassKind
    bidegree: tuple[int, int]
    cycle: CyclicWord | None = None
    word: PathWord | None = None
    companion: PathWord | None = None
    arrow: str | None = None

    @property
    def total_degree(self) -> int:
        return sum(self.bidegree)

    @property
    def name(self) -> str:
        match self.kind:
            case ClassKind.UNIT:
                return "unit"
            case ClassKind.N0 | ClassKind.N1:
                assert self.cycle is not None
                return f"{self.kind.value}[{self.cycle.name}^{self.cycle.exponent}]"
            case ClassKind.STOP_CHAIN:
                return f"stop[chain:{self.word}]"
            case ClassKind.STOP_LOOP:
                return f"stoploop[{self.word}]"
            case ClassKind.ARROW:
                return f"arrow[{self.arrow}]"

    def sort_key(self) -> tuple[Any, ...]:
        exponent = self.cycle.exponent if self.cycle is not None else 0
        return (self.bidegree, _KIND_ORDER[self.kind], self.name, exponent)

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "kind": self.kind.value, "n": self.bidegree[0], "d": self.bidegree[1]}

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class HHExpression:
    """A finite linear combination of basis classes of one total degree."""

    terms: tuple[tuple[HHClass, Fraction], ...] = ()

    @classmethod
    def build(cls, items: Iterable[tuple[HHClass, Fraction | int]], field: FieldSpec) -> HHExpression:
        totals: dict[HHClass, Fraction] = {}
        for hh_class, coefficient in items:
            totals[hh_class] = totals.get(hh_class, Fraction(0)) + Fraction(coefficient)
        kept = [(c, field.reduce(v)) for c, v in totals.items() if field.reduce(v) != 0]
        degrees = {c.total_degree for c, _ in kept}
        if len(degrees) > 1:
            raise ClassNameError(f"expression mixes total degrees {sorted(degrees)}")
        return cls(tuple(sorted(kept, key=lambda item: item[0].sort_key())))

    @classmethod
    def of(cls, hh_class: HHClass) -> HHExpression:
        return cls(((hh_class, Fraction(1)),))

    @property
    def total_degree(self) -> int | None:
        return self.terms[0][0].total_degree if self.terms else None

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, hh_class: HHClass) -> Fraction:
        return dict(self.terms).get(hh_class, Fraction(0))

    def plus(self, other: HHExpression, field: FieldSpec, scale: Fraction | int = 1) -> HHExpression:
        return HHExpression.build([*self.terms, *((c, v * scale) for c, v in other.terms)], field)

    def scaled(self, scale: Fraction | int, field: FieldSpec) -> HHExpression:
        return HHExpression.build(((c, v * scale) for c, v in self.terms), field)

    def to_list(self) -> list[dict[str, str]]:
        return [{"class": c.name, "coefficient": str(v)} for c, v in self.terms]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{v} * {c.name}" for c, v in self.terms)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def parity_allows(cycle: CyclicWord, field: FieldSpec) -> bool:
    """Both trace classes of ``cycle`` exist iff its winding is even or char is 2."""
    return cycle.winding % 2 == 0 or field.characteristic == 2  # noqa: PLR2004


def trace_bidegree(cycle: CyclicWord, kind: ClassKind) -> tuple[int, int]:
    shift = 1 if kind is ClassKind.N1 else 0
    if cycle.kind is CycleKind.CHAIN:
        return cycle.length + shift, -cycle.degree
    return shift, cycle.degree


def trace_class(cycle: CyclicWord, kind: ClassKind) -> HHClass:
    return HHClass(kind, trace_bidegree(cycle, kind), cycle=cycle)


@lru_cache(maxsize=256)
def spanning_tree(algebra: GentleAlgebra, root: str | None = None) -> frozenset[str]:
    """Arrows of a breadth-first spanning tree; parallel edges use the earliest arrow.

    >>> from gentle_hochschild.quiver import GradedQuiver, Arrow, validate_gentle
    >>> e2 = validate_gentle(GradedQuiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "2", "1")), (("b", "a"), ("a", "b"))))
    >>> sorted(spanning_tree(e2))
    ['a']
    """
    graph: nx.MultiGraph[str] = nx.MultiGraph()
    graph.add_nodes_from(algebra.vertices)
    for arrow in algebra.arrows:
        graph.add_edge(arrow.source, arrow.target, key=arrow.name)
    start = root if root is not None else algebra.vertices[0]
    tree: set[str] = set()
    for u, v in nx.bfs_edges(graph, start):
        between = [a.name for a in algebra.arrows if {a.source, a.target} == {u, v}]
        tree.add(min(between, key=lambda name: algebra.arrow_index[name]))
    return frozenset(tree)


@dataclass(frozen=True)
class BasisFamily:
    """Infinitely many classes ``variant[u^m]`` at one bidegree, for every ``m >= 1``."""

    cycle: CyclicWord
    variant: ClassKind
    condition: str = "m >= 1"

    def member(self, exponent: int) -> HHClass:
        return trace_class(self.cycle.power(exponent), self.variant)

    def to_dict(self) -> dict[str, str]:
        return {"family": f"{self.variant.value}[{self.cycle.name}^m]", "condition": self.condition}


@dataclass(frozen=True)
class BasisReport:
    bidegree: tuple[int, int]
    finite: tuple[HHClass, ...]
    families: tuple[BasisFamily, ...] = ()

    @property
    def dimension(self) -> int | None:
        return None if self.families else len(self.finite)

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.bidegree[0],
            "d": self.bidegree[1],
            "classes": [c.name for c in self.finite],
            "families": [f.to_dict() for f in self.families],
            "dimension": INFINITE if self.dimension is None else self.dimension,
        }


def _trace_exponent(step: int, target: int) -> int | None:
    if step == 0 or target % step:
        return None
    exponent = target // step
    return exponent if exponent >= 1 else None


def _trace_classes(cycle: CyclicWord, field: FieldSpec, n: int, d: int) -> tuple[list[HHClass], list[BasisFamily]]:
    classes: list[HHClass] = []
    families: list[BasisFamily] = []
    for kind in (ClassKind.N0, ClassKind.N1):
        shift = 1 if kind is ClassKind.N1 else 0
        if cycle.kind is CycleKind.CHAIN:
            m = _trace_exponent(cycle.length, n - shift)
            if m is None or -m * cycle.degree != d:
                continue
        else:
            if n != shift:
                continue
            if cycle.degree == 0:
                if d == 0:
                    families.append(BasisFamily(cycle, kind))
                continue
            m = _trace_exponent(cycle.degree, d)
            if m is None:
                continue
        power = cycle.power(m)
        if parity_allows(power, field):
            classes.append(trace_class(power, kind))
    return classes, families


def stop_classes(algebra: GentleAlgebra) -> tuple[HHClass, ...]:
    """Classes of the single-stop components: chains with a companion, then closed maximal live paths."""
    classes = [
        HHClass(
            ClassKind.STOP_CHAIN,
            (maximal.chain.length, maximal.companion.degree - maximal.chain.degree),
            word=maximal.chain,
            companion=maximal.companion,
        )
        for maximal in maximal_chains_and_companions(algebra)
        if maximal.companion is not None
    ]
    classes.extend(HHClass(ClassKind.STOP_LOOP, (0, w.degree), word=w) for w in closed_maximal_live(algebra))
    return tuple(classes)


@lru_cache(maxsize=4096)
def basis_report(algebra: GentleAlgebra, field: FieldSpec, n: int, d: int) -> BasisReport:
    """Basis classes of ``HH^{n,d}`` plus symbolic families for infinite cells."""
    finite: list[HHClass] = []
    families: list[BasisFamily] = []
    if (n, d) == (0, 0):
        finite.append(HHClass(ClassKind.UNIT, (0, 0)))
    for cycle in complete_cycles(algebra):
        classes, cycle_families = _trace_classes(cycle, field, n, d)
        finite.extend(classes)
        families.extend(cycle_families)
    finite.extend(c for c in stop_classes(algebra) if c.bidegree == (n, d))
    if (n, d) == (1, 0):
        tree = spanning_tree(algebra)
        finite.extend(HHClass(ClassKind.ARROW, (1, 0), arrow=a.name) for a in algebra.arrows if a.name not in tree)
    return BasisReport((n, d), tuple(sorted(finite, key=HHClass.sort_key)), tuple(families))


def basis(algebra: GentleAlgebra, field: FieldSpec, n: int, d: int) -> tuple[HHClass, ...]:
    """Complete list of basis classes of ``HH^{n,d}``.

    >>> from gentle_hochschild.fields import FieldSpec
    >>> from gentle_hochschild.quiver import GradedQuiver, Arrow, validate_gentle
    >>> e2 = validate_gentle(GradedQuiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "2", "1")), (("b", "a"), ("a", "b"))))
    >>> [c.name for c in basis(e2, FieldSpec(), 2, 0)], [c.name for c in basis(e2, FieldSpec(), 1, 0)]
    (['N0[ab^1]'], ['arrow[b]'])
    """
    report = basis_report(algebra, field, n, d)
    if report.families:
        names = ", ".join(f.to_dict()["family"] for f in report.families)
        raise NeedsCapError(f"HH^({n},{d}) is infinite-dimensional: families {names}")
    return report.finite


@dataclass(frozen=True)
class DimensionTable:
    """Dimensions per cell; ``None`` marks an infinite cell."""

    n_values: tuple[int, ...]
    d_values: tuple[int, ...]
    cells: tuple[tuple[tuple[int, int], int | None], ...]

    def get(self, n: int, d: int) -> int | None:
        return dict(self.cells)[(n, d)]

    def row(self, d: int) -> list[int | None]:
        return [self.get(n, d) for n in self.n_values]

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": list(self.n_values),
            "rows": [{"d": d, "dims": [INFINITE if v is None else v for v in self.row(d)]} for d in self.d_values],
        }


def dims(algebra: GentleAlgebra, field: FieldSpec, n_values: Iterable[int], d_values: Iterable[int]) -> DimensionTable:
    ns, ds = tuple(n_values), tuple(d_values)
    cells = tuple(((n, d), basis_report(algebra, field, n, d).dimension) for d in ds for n in ns)
    return DimensionTable(ns, ds, cells)


# ---------------------------------------------------------------------------
# Representatives
# ---------------------------------------------------------------------------


def _prefix_degree(algebra: GentleAlgebra, word: PathWord, count: int) -> int:
    return sum(algebra.arrow(name).degree for name in word.arrows[:count])


def _arrow_path(algebra: GentleAlgebra, name: str) -> PathWord:
    arrow = algebra.arrow(name)
    return PathWord((name,), arrow.source, arrow.target, arrow.degree)


def _trace_terms(algebra: GentleAlgebra, hh_class: HHClass) -> list[tuple[ParallelPair, int]]:
    assert hh_class.cycle is not None
    power = hh_class.cycle.representative
    n, degree, steps = power.length, power.degree, hh_class.cycle.period
    if hh_class.cycle.kind is CycleKind.CHAIN:
        if hh_class.kind is ClassKind.N0:
            terms = []
            for i in range(steps):
                rotated = rotate(algebra, power, i)
                exponent = i * n + degree * _prefix_degree(algebra, power, i)
                terms.append((ParallelPair(rotated, PathWord.trivial(rotated.source)), sign(exponent)))
            return terms
        last = _arrow_path(algebra, power.last)
        extended = concat(last, power)
        assert extended is not None
        return [(ParallelPair(extended, last), 1)]
    if hh_class.kind is ClassKind.N0:
        terms = []
        for i in range(steps):
            rotated = rotate(algebra, power, i)
            exponent = degree * _prefix_degree(algebra, power, i)
            terms.append((ParallelPair(PathWord.trivial(rotated.source), rotated), sign(exponent)))
        return terms
    last = _arrow_path(algebra, power.last)
    extended = concat(last, power)
    assert extended is not None
    return [(ParallelPair(last, extended), 1)]


@lru_cache(maxsize=4096)
def representative(algebra: GentleAlgebra, hh_class: HHClass, field: FieldSpec) -> Cochain:
    """Explicit cocycle representing ``hh_class``; raises on a non-cocycle.

    >>> from gentle_hochschild.fields import FieldSpec
    >>> from gentle_hochschild.quiver import GradedQuiver, Arrow, validate_gentle
    >>> e2 = validate_gentle(GradedQuiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "2", "1")), (("b", "a"), ("a", "b"))))
    >>> str(representative(e2, basis(e2, FieldSpec(), 2, 0)[0], FieldSpec()))
    '1*(ab, e_2) + 1*(ba, e_1)'
    """
    match hh_class.kind:
        case ClassKind.UNIT:
            items = [(ParallelPair(PathWord.trivial(v), PathWord.trivial(v)), 1) for v in algebra.vertices]
        case ClassKind.N0 | ClassKind.N1:
            items = _trace_terms(algebra, hh_class)
        case ClassKind.STOP_CHAIN:
            assert hh_class.word is not None and hh_class.companion is not None
            items = [(ParallelPair(hh_class.word, hh_class.companion), 1)]
        case ClassKind.STOP_LOOP:
            assert hh_class.word is not None
            items = [(ParallelPair(PathWord.trivial(hh_class.word.source), hh_class.word), 1)]
        case ClassKind.ARROW:
            assert hh_class.arrow is not None
            word = _arrow_path(algebra, hh_class.arrow)
            items = [(ParallelPair(word, word), 1)]
    cochain = Cochain.build(hh_class.bidegree, items, field)
    if not differential(algebra, cochain, field).is_zero():
        raise CocycleError(f"representative of {hh_class.name} is not a cocycle over {field.label}")
    return cochain


def classes_up_to(algebra: GentleAlgebra, field: FieldSpec, n: int, d: int, max_length: int) -> tuple[HHClass, ...]:
    """Finite classes plus family members whose representatives fit in ``max_length``."""
    report = basis_report(algebra, field, n, d)
    members = []
    for family in report.families:
        extra = 1 if family.variant is ClassKind.N1 else 0
        members.extend(family.member(m) for m in range(1, (max_length - extra) // family.cycle.period + 1))
    return (*report.finite, *members)


def identify(algebra: GentleAlgebra, field: FieldSpec, z: Cochain, cap: int | None = None) -> HHExpression:
    """Coordinates of the class of the cocycle ``z`` in the basis."""
    if z.is_zero():
        return HHExpression()
    n, d = z.bidegree
    longest = max(pair.q.length for pair in z.terms)
    classes = classes_up_to(algebra, field, n, d, cap if cap is not None else longest)
    reps = [representative(algebra, c, field) for c in classes]
    coordinates = reduce_mod_coboundaries(algebra, field, z, reps, cap)
    return HHExpression.build(zip(classes, coordinates, strict=True), field)


# ---------------------------------------------------------------------------
# Class names
# ---------------------------------------------------------------------------

_TRACE = re.compile(r"^(N0|N1)\[([^\]\^]+)(?:\^(\d+))?\]$")
_STOP = re.compile(r"^stop\[chain:([^\]]+)\]$")
_STOP_LOOP = re.compile(r"^stoploop\[([^\]]+)\]$")
_ARROW = re.compile(r"^arrow\[([^\]]+)\]$")


def _parse_trace(algebra: GentleAlgebra, field: FieldSpec, kind: ClassKind, word_text: str, exponent_text: str | None) -> HHClass:
    cycle = cyclic_word(algebra, parse_word(algebra, word_text))
    exponent = cycle.exponent * int(exponent_text or 1)
    if exponent < 1:
        raise ClassNameError("cycle exponents start at 1")
    power = cycle.power(exponent)
    if not parity_allows(power, field):
        raise ClassNameError(f"{kind.value}[{power}] has odd winding {power.winding} and is no class over {field.label}")
    return trace_class(power, kind)


def _find_word(candidates: Sequence[PathWord], word: PathWord, what: str) -> PathWord:
    for candidate in candidates:
        if candidate == word:
            return candidate
    raise ClassNameError(f"{word} is not a {what} of this algebra")


def parse_class_name(algebra: GentleAlgebra, field: FieldSpec, text: str) -> HHClass:
    """Parse the class-name grammar; any cycle rotation is accepted.

    >>> from gentle_hochschild.fields import FieldSpec
    >>> from gentle_hochschild.quiver import GradedQuiver, Arrow, validate_gentle
    >>> e2 = validate_gentle(GradedQuiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "2", "1")), (("b", "a"), ("a", "b"))))
    >>> parse_class_name(e2, FieldSpec(), "N1[ba^2]").name
    'N1[ab^2]'
    """
    cleaned = text.strip()
    try:
        if cleaned == "unit":
            return HHClass(ClassKind.UNIT, (0, 0))
        if match := _TRACE.match(cleaned):
            kind = ClassKind.N0 if match.group(1) == "N0" else ClassKind.N1
            return _parse_trace(algebra, field, kind, match.group(2), match.group(3))
        if match := _STOP.match(cleaned):
            word = parse_word(algebra, match.group(1))
            for maximal in maximal_chains_and_companions(algebra):
                if maximal.chain == word and maximal.companion is not None:
                    bidegree = (word.length, maximal.companion.degree - word.degree)
                    return HHClass(ClassKind.STOP_CHAIN, bidegree, word=word, companion=maximal.companion)
            raise ClassNameError(f"{word} is not a maximal relation chain with a companion")
        if match := _STOP_LOOP.match(cleaned):
            word = _find_word(closed_maximal_live(algebra), parse_word(algebra, match.group(1)), "closed maximal live path")
            return HHClass(ClassKind.STOP_LOOP, (0, word.degree), word=word)
        if match := _ARROW.match(cleaned):
            name = match.group(1)
            if name not in algebra.arrows_by_name:
                raise ClassNameError(f"unknown arrow {name!r}")
            if name in spanning_tree(algebra):
                raise ClassNameError(f"arrow {name} lies on the spanning tree and gives no class")
            return HHClass(ClassKind.ARROW, (1, 0), arrow=name)
    except WordError as exc:
        raise ClassNameError(f"class {text!r}: {exc}") from exc
    raise ClassNameError(f"class {text!r} does not match unit, N0[u^m], N1[u^m], stop[chain:u], stoploop[u] or arrow[a]")


def all_classes(algebra: GentleAlgebra, field: FieldSpec, n_values: Iterable[int], d_values: Iterable[int]) -> list[HHClass]:
    """Every finite basis class in the window, ordered by bidegree."""
    classes = [c for d in d_values for n in n_values for c in basis_report(algebra, field, n, d).finite]
    return sorted(classes, key=HHClass.sort_key)


__all__ = [
    "INFINITE",
    "BasisFamily",
    "BasisReport",
    "ClassKind",
    "DimensionTable",
    "HHClass",
    "HHExpression",
    "all_classes",
    "basis",
    "basis_report",
    "classes_up_to",
    "dims",
    "identify",
    "parity_allows",
    "parse_class_name",
    "representative",
    "spanning_tree",
    "stop_classes",
    "trace_bidegree",
    "trace_class",
]
