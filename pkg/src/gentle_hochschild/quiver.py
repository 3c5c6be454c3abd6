"""Graded gentle quivers: parsing, validation, navigation maps, random corpus.

Purpose
-------
Turn a quiver document into an immutable :class:`GentleAlgebra` whose four
navigation maps (relation and live continuations in both directions) every
other module relies on.

Conventions
-----------
Composition is right to left. A relation pair ``(beta, alpha)`` means the
composite ``beta alpha`` (first ``alpha``, then ``beta``) lies in the ideal, so
``source(beta) == target(alpha)``. The quiver document stores relations in
exactly this order.

Contents
--------
* :class:`Arrow`, :class:`GradedQuiver` - plain structured data.
* :func:`parse_quiver`, :func:`load_quiver`, :func:`dump_quiver` - document IO.
* :class:`GentleAlgebra`, :func:`validate_gentle` - the validated algebra.
* :class:`RandomBounds`, :func:`random_gentle` - seeded property-test corpus.
* :func:`relabel` - rename vertices and arrows consistently.
"""

from __future__ import annotations

import itertools
import json
import logging
import random
import string
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import TYPE_CHECKING, Any, Final, cast

import networkx as nx

from .errors import (
    DisconnectedQuiverError,
    ExcludedShapeError,
    GentleAxiomError,
    QuiverFormatError,
    RandomBoundsError,
)

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping

logger = logging.getLogger(__name__)

#: Maximal number of incoming (and of outgoing) arrows per vertex.
MAX_VALENCE: Final[int] = 2
#: Attempts before :func:`random_gentle` gives up on a set of bounds.
MAX_RANDOM_ATTEMPTS: Final[int] = 2_000


@dataclass(frozen=True, order=True)
class Arrow:
    """A graded arrow ``name: source -> target``."""

    name: str
    source: str
    target: str
    degree: int = 0


@dataclass(frozen=True)
class GradedQuiver:
    """Vertices, arrows and quadratic monomial relations in document order."""

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[tuple[str, str], ...] = ()

    def to_document(self) -> dict[str, Any]:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"name": a.name, "from": a.source, "to": a.target, "degree": a.degree} for a in self.arrows],
            "relations": [list(pair) for pair in self.relations],
        }


# ---------------------------------------------------------------------------
# Document parsing
# ---------------------------------------------------------------------------


def _require_list(document: Mapping[str, Any], key: str, *, optional: bool = False) -> list[Any]:
    if key not in document:
        if optional:
            return []
        raise QuiverFormatError(f"quiver document lacks the {key!r} key")
    value = document[key]
    if not isinstance(value, list):
        raise QuiverFormatError(f"{key!r} must be a list")
    return cast("list[Any]", value)


def _vertex_id(raw: Any) -> str:
    if isinstance(raw, bool) or not isinstance(raw, str | int):
        raise QuiverFormatError(f"vertex id {raw!r} must be a string")
    return str(raw)


def _parse_arrow(raw: Any, vertices: set[str]) -> Arrow:
    if not isinstance(raw, dict):
        raise QuiverFormatError(f"arrow entry {raw!r} must be an object")
    entry = cast("dict[str, Any]", raw)
    missing = [key for key in ("name", "from", "to") if key not in entry]
    if missing:
        raise QuiverFormatError(f"arrow entry {entry!r} lacks {', '.join(missing)}")
    name = entry["name"]
    if not isinstance(name, str) or not name or "," in name:
        raise QuiverFormatError(f"arrow name {name!r} must be a non-empty string without commas")
    source, target = _vertex_id(entry["from"]), _vertex_id(entry["to"])
    for end in (source, target):
        if end not in vertices:
            raise QuiverFormatError(f"arrow {name!r} references unknown vertex {end!r}")
    degree = entry.get("degree", 0)
    if isinstance(degree, bool) or not isinstance(degree, int):
        raise QuiverFormatError(f"arrow {name!r} has non-integer degree {degree!r}")
    return Arrow(name, source, target, degree)


def _parse_relation(raw: Any, arrows: Mapping[str, Arrow]) -> tuple[str, str]:
    if not isinstance(raw, list) or len(cast("list[Any]", raw)) != 2:  # noqa: PLR2004
        raise QuiverFormatError(f"relation {raw!r} must be a two-element list [beta, alpha]")
    beta, alpha = cast("list[Any]", raw)
    for name in (beta, alpha):
        if name not in arrows:
            raise QuiverFormatError(f"relation {raw!r} references unknown arrow {name!r}")
    if arrows[beta].source != arrows[alpha].target:
        raise QuiverFormatError(f"non-composable relation [{beta}, {alpha}]: source({beta}) != target({alpha})")
    return str(beta), str(alpha)


def quiver_from_document(document: Any) -> GradedQuiver:
    """Build a :class:`GradedQuiver` from an already decoded document."""
    if not isinstance(document, dict):
        raise QuiverFormatError("quiver document must be an object")
    doc = cast("dict[str, Any]", document)
    vertices = [_vertex_id(v) for v in _require_list(doc, "vertices")]
    if not vertices:
        raise QuiverFormatError("quiver document has no vertices")
    if len(set(vertices)) != len(vertices):
        raise QuiverFormatError("duplicate vertex ids")
    vertex_set = set(vertices)
    arrows = [_parse_arrow(raw, vertex_set) for raw in _require_list(doc, "arrows")]
    by_name = {a.name: a for a in arrows}
    if len(by_name) != len(arrows):
        raise QuiverFormatError("duplicate arrow names")
    relations = [_parse_relation(raw, by_name) for raw in _require_list(doc, "relations", optional=True)]
    if len(set(relations)) != len(relations):
        raise QuiverFormatError("duplicate relation pairs")
    return GradedQuiver(tuple(vertices), tuple(arrows), tuple(relations))


def parse_quiver(text: str) -> GradedQuiver:
    """Parse a JSON quiver document.

    Examples
    --------
    >>> q = parse_quiver('{"vertices": ["1", "2"], "arrows": [{"name": "a", "from": "1", "to": "2"}]}')
    >>> len(q.vertices), q.arrows[0].degree
    (2, 0)
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise QuiverFormatError(f"malformed quiver document: {exc.msg} (line {exc.lineno})") from exc
    return quiver_from_document(document)


def load_quiver(path: str | Path) -> GradedQuiver:
    return parse_quiver(Path(path).read_text(encoding="utf-8"))


def dump_quiver(quiver: GradedQuiver) -> str:
    """Canonical JSON form of ``quiver`` (stable key order, two-space indent)."""
    return json.dumps(quiver.to_document(), indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# Validated algebra
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GentleAlgebra:
    """A validated graded gentle quiver with its navigation maps.

    ``chain_succ[alpha]`` is the arrow ``beta`` with ``beta alpha`` in the
    ideal, ``live_succ[alpha]`` the composable ``beta`` with ``beta alpha`` not
    in it; the ``*_pred`` maps are the inverse partial injections.
    """

    quiver: GradedQuiver
    chain_succ: Mapping[str, str]
    chain_pred: Mapping[str, str]
    live_succ: Mapping[str, str]
    live_pred: Mapping[str, str]
    arrows_by_name: Mapping[str, Arrow] = field(repr=False)
    arrow_index: Mapping[str, int] = field(repr=False)
    vertex_index: Mapping[str, int] = field(repr=False)
    outgoing: Mapping[str, tuple[str, ...]] = field(repr=False)
    incoming: Mapping[str, tuple[str, ...]] = field(repr=False)
    relation_set: frozenset[tuple[str, str]] = field(repr=False)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.quiver.vertices

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return self.quiver.arrows

    def arrow(self, name: str) -> Arrow:
        return self.arrows_by_name[name]

    def in_ideal(self, beta: str, alpha: str) -> bool:
        """``True`` when the composite ``beta alpha`` lies in the ideal."""
        return (beta, alpha) in self.relation_set

    @property
    def has_live_cycle(self) -> bool:
        for start in self.live_succ:
            current = self.live_succ.get(start)
            for _ in self.arrows_by_name:
                if current is None:
                    break
                if current == start:
                    return True
                current = self.live_succ.get(current)
        return False


def _frozen(mapping: dict[str, Any]) -> Mapping[str, Any]:
    return MappingProxyType(mapping)


def _check_valence(quiver: GradedQuiver, incoming: dict[str, list[str]], outgoing: dict[str, list[str]]) -> None:
    for vertex in quiver.vertices:
        if len(outgoing[vertex]) > MAX_VALENCE:
            raise GentleAxiomError("1", f"vertex {vertex}", f"{len(outgoing[vertex])} outgoing arrows")
        if len(incoming[vertex]) > MAX_VALENCE:
            raise GentleAxiomError("1", f"vertex {vertex}", f"{len(incoming[vertex])} incoming arrows")


def _unique_partner(candidates: list[str], axiom: str, location: str, what: str) -> str | None:
    if len(candidates) > 1:
        raise GentleAxiomError(axiom, location, f"{what}: {', '.join(candidates)}")
    return candidates[0] if candidates else None


def _check_excluded_shapes(quiver: GradedQuiver) -> None:
    if len(quiver.vertices) == 1 and len(quiver.arrows) == 1:
        raise ExcludedShapeError("excluded shape: a loop with a single vertex is not covered by the gentle convention")
    kronecker_pair = len(quiver.arrows) == 2 and len({(a.source, a.target) for a in quiver.arrows}) == 1  # noqa: PLR2004
    if len(quiver.vertices) == 2 and kronecker_pair and not quiver.relations and quiver.arrows[0].source != quiver.arrows[0].target:  # noqa: PLR2004
        raise ExcludedShapeError("excluded shape: the Kronecker quiver is not covered by the gentle convention")


def _check_connected(quiver: GradedQuiver) -> None:
    graph: nx.MultiGraph[str] = nx.MultiGraph()
    graph.add_nodes_from(quiver.vertices)
    graph.add_edges_from((a.source, a.target) for a in quiver.arrows)
    if not nx.is_connected(graph):
        blocks = [sorted(component) for component in nx.connected_components(graph)]
        raise DisconnectedQuiverError(f"quiver is disconnected ({len(blocks)} blocks {blocks}); split it into connected blocks and run each separately")


def validate_gentle(quiver: GradedQuiver) -> GentleAlgebra:
    """Check the gentle axioms and build the navigation maps.

    Examples
    --------
    >>> q = parse_quiver('''{"vertices": ["1", "2"],
    ...   "arrows": [{"name": "a", "from": "1", "to": "2"}, {"name": "b", "from": "2", "to": "1"}],
    ...   "relations": [["b", "a"], ["a", "b"]]}''')
    >>> algebra = validate_gentle(q)
    >>> algebra.chain_succ["a"], algebra.live_succ.get("a")
    ('b', None)
    """
    _check_excluded_shapes(quiver)
    _check_connected(quiver)
    arrows = {a.name: a for a in quiver.arrows}
    incoming: dict[str, list[str]] = {v: [] for v in quiver.vertices}
    outgoing: dict[str, list[str]] = {v: [] for v in quiver.vertices}
    for arrow in quiver.arrows:
        outgoing[arrow.source].append(arrow.name)
        incoming[arrow.target].append(arrow.name)
    _check_valence(quiver, incoming, outgoing)

    relations = frozenset(quiver.relations)
    maps: dict[str, dict[str, str]] = {"chain_succ": {}, "chain_pred": {}, "live_succ": {}, "live_pred": {}}
    for alpha in quiver.arrows:
        after = outgoing[alpha.target]
        before = incoming[alpha.source]
        location = f"arrow {alpha.name}"
        found = {
            "chain_succ": _unique_partner([b for b in after if (b, alpha.name) in relations], "2", location, "several relations beta*alpha"),
            "chain_pred": _unique_partner([g for g in before if (alpha.name, g) in relations], "2", location, "several relations alpha*gamma"),
            "live_succ": _unique_partner([b for b in after if (b, alpha.name) not in relations], "3", location, "several live continuations beta*alpha"),
            "live_pred": _unique_partner([g for g in before if (alpha.name, g) not in relations], "3", location, "several live continuations alpha*gamma"),
        }
        for key, partner in found.items():
            if partner is not None:
                maps[key][alpha.name] = partner

    logger.debug("validated gentle quiver with %d vertices and %d arrows", len(quiver.vertices), len(quiver.arrows))
    return GentleAlgebra(
        quiver=quiver,
        chain_succ=_frozen(maps["chain_succ"]),
        chain_pred=_frozen(maps["chain_pred"]),
        live_succ=_frozen(maps["live_succ"]),
        live_pred=_frozen(maps["live_pred"]),
        arrows_by_name=_frozen(arrows),
        arrow_index=_frozen({a.name: i for i, a in enumerate(quiver.arrows)}),
        vertex_index=_frozen({v: i for i, v in enumerate(quiver.vertices)}),
        outgoing=_frozen({v: tuple(names) for v, names in outgoing.items()}),
        incoming=_frozen({v: tuple(names) for v, names in incoming.items()}),
        relation_set=relations,
    )


def relabel(quiver: GradedQuiver, vertex_map: Mapping[str, str], arrow_map: Mapping[str, str]) -> GradedQuiver:
    """Rename vertices and arrows; document order is preserved."""
    return GradedQuiver(
        vertices=tuple(vertex_map[v] for v in quiver.vertices),
        arrows=tuple(Arrow(arrow_map[a.name], vertex_map[a.source], vertex_map[a.target], a.degree) for a in quiver.arrows),
        relations=tuple((arrow_map[b], arrow_map[a]) for b, a in quiver.relations),
    )


# ---------------------------------------------------------------------------
# Random corpus
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RandomBounds:
    """Limits for :func:`random_gentle`.

    ``max_arrows`` defaults to the gentle capacity ``2 * vertices``;
    ``proper_only`` rejects samples with a live cycle.
    """

    max_vertices: int = 4
    max_arrows: int | None = None
    degree_min: int = 0
    degree_max: int = 0
    min_vertices: int = 1
    proper_only: bool = False
    allow_loops: bool = True

    def validate(self) -> None:
        if self.min_vertices < 1 or self.max_vertices < self.min_vertices:
            raise RandomBoundsError(f"vertex bounds must satisfy 1 <= min <= max, got {self.min_vertices}..{self.max_vertices}")
        if self.degree_min > self.degree_max:
            raise RandomBoundsError(f"degree bounds {self.degree_min}..{self.degree_max} are empty")
        if self.max_arrows is not None:
            if self.max_arrows < 0:
                raise RandomBoundsError("max_arrows must be non-negative")
            if self.max_arrows > MAX_VALENCE * self.max_vertices:
                raise RandomBoundsError(f"{self.max_arrows} arrows exceed the gentle capacity 2*{self.max_vertices}")


def _arrow_name(index: int) -> str:
    letters = string.ascii_lowercase
    return letters[index] if index < len(letters) else f"a{index}"


class _Sampler:
    """One sampling attempt; every random choice goes through ``rng``."""

    def __init__(self, rng: random.Random, bounds: RandomBounds) -> None:
        self.rng = rng
        self.bounds = bounds
        size = rng.randint(bounds.min_vertices, bounds.max_vertices)
        self.vertices = [str(i + 1) for i in range(size)]
        self.in_degree = dict.fromkeys(self.vertices, 0)
        self.out_degree = dict.fromkeys(self.vertices, 0)
        self.edges: list[tuple[str, str]] = []

    def _fits(self, source: str, target: str) -> bool:
        return self.out_degree[source] < MAX_VALENCE and self.in_degree[target] < MAX_VALENCE

    def _add(self, source: str, target: str) -> None:
        self.edges.append((source, target))
        self.out_degree[source] += 1
        self.in_degree[target] += 1

    def sample(self) -> GradedQuiver | None:
        for position, vertex in enumerate(self.vertices[1:], start=1):
            options = [(u, vertex) for u in self.vertices[:position] if self._fits(u, vertex)]
            options += [(vertex, u) for u in self.vertices[:position] if self._fits(vertex, u)]
            if not options:
                return None
            self._add(*self.rng.choice(options))
        capacity = MAX_VALENCE * len(self.vertices)
        limit = capacity if self.bounds.max_arrows is None else min(capacity, self.bounds.max_arrows)
        if limit < len(self.edges):
            return None
        for _ in range(self.rng.randint(len(self.edges), limit) - len(self.edges)):
            options = [
                (u, v) for u in self.vertices for v in self.vertices if self._fits(u, v) and (u != v or self.bounds.allow_loops)
            ]
            if not options:
                break
            self._add(*self.rng.choice(options))
        arrows = tuple(
            Arrow(_arrow_name(i), s, t, self.rng.randint(self.bounds.degree_min, self.bounds.degree_max)) for i, (s, t) in enumerate(self.edges)
        )
        return GradedQuiver(tuple(self.vertices), arrows, self._relations(arrows))

    def _relations(self, arrows: tuple[Arrow, ...]) -> tuple[tuple[str, str], ...]:
        chosen: list[tuple[str, str]] = []
        for vertex in self.vertices:
            ins = [a.name for a in arrows if a.target == vertex]
            outs = [a.name for a in arrows if a.source == vertex]
            pairs = [(beta, alpha) for alpha in ins for beta in outs]
            valid = [subset for subset in _subsets(pairs) if _locally_gentle(subset, pairs, ins, outs)]
            chosen.extend(self.rng.choice(valid))
        return tuple(chosen)


def _subsets(pairs: list[tuple[str, str]]) -> Iterable[tuple[tuple[str, str], ...]]:
    for size in range(len(pairs) + 1):
        yield from itertools.combinations(pairs, size)


def _locally_gentle(subset: tuple[tuple[str, str], ...], pairs: list[tuple[str, str]], ins: list[str], outs: list[str]) -> bool:
    live = [pair for pair in pairs if pair not in subset]
    for group in (subset, tuple(live)):
        if any(sum(1 for _, a in group if a == alpha) > 1 for alpha in ins):
            return False
        if any(sum(1 for b, _ in group if b == beta) > 1 for beta in outs):
            return False
    return True


def random_gentle(seed: int, bounds: RandomBounds | None = None) -> GentleAlgebra:
    """Sample a valid gentle algebra; a pure function of ``(seed, bounds)``.

    Examples
    --------
    >>> first = random_gentle(1, RandomBounds(max_vertices=4))
    >>> second = random_gentle(1, RandomBounds(max_vertices=4))
    >>> first.quiver == second.quiver
    True
    """
    bounds = bounds or RandomBounds()
    bounds.validate()
    rng = random.Random(seed)  # noqa: S311
    for _ in range(MAX_RANDOM_ATTEMPTS):
        quiver = _Sampler(rng, bounds).sample()
        if quiver is None:
            continue
        try:
            algebra = validate_gentle(quiver)
        except (ExcludedShapeError, GentleAxiomError, DisconnectedQuiverError):
            continue
        if bounds.proper_only and algebra.has_live_cycle:
            continue
        return algebra
    raise RandomBoundsError(f"no gentle quiver found within {MAX_RANDOM_ATTEMPTS} attempts for {bounds}")


__all__ = [
    "MAX_RANDOM_ATTEMPTS",
    "MAX_VALENCE",
    "Arrow",
    "GentleAlgebra",
    "GradedQuiver",
    "RandomBounds",
    "dump_quiver",
    "load_quiver",
    "parse_quiver",
    "quiver_from_document",
    "random_gentle",
    "relabel",
    "validate_gentle",
]
