"""Word-level path combinatorics on a gentle algebra.

Vocabulary
----------
* A *live path* has every consecutive product outside the ideal; it is a
  nonzero path of the algebra.
* A *relation chain* has every consecutive product inside the ideal; chains
  of length ``n`` generate the Bardzell resolution in homological degree ``n``.
* Words of length 0 or 1 are both.

Words are written in composition order: ``("a", "b")`` is the word ``ab``
with ``b`` traversed first.

Threads
-------
Every vertex is padded to two incoming and two outgoing slots. The live
continuations and the relation continuations form two complementary perfect
matchings of in-slots to out-slots. Following one matching from a virtual
in-slot until a virtual out-slot is reached gives a maximal live thread or a
maximal relation chain (possibly trivial). Orbits that never meet a virtual
slot are the complete cycles.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import StrEnum
from functools import lru_cache
from typing import TYPE_CHECKING

from .errors import WordError

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping, Sequence

    from .quiver import GentleAlgebra

logger = logging.getLogger(__name__)


class WordKind(StrEnum):
    LIVE = "live"
    CHAIN = "relation-chain"
    BOTH = "both"
    NEITHER = "neither"


class CycleKind(StrEnum):
    CHAIN = "relation-chain"
    LIVE = "live"


@dataclass(frozen=True)
class PathWord:
    """A composable arrow word; trivial words carry their vertex as both ends."""

    arrows: tuple[str, ...]
    source: str
    target: str
    degree: int = 0

    @classmethod
    def trivial(cls, vertex: str) -> PathWord:
        return cls((), vertex, vertex, 0)

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def is_closed(self) -> bool:
        return self.source == self.target

    @property
    def first(self) -> str:
        """Leftmost arrow (traversed last)."""
        return self.arrows[0]

    @property
    def last(self) -> str:
        """Rightmost arrow (traversed first)."""
        return self.arrows[-1]

    def power(self, exponent: int) -> PathWord:
        if not self.is_closed:
            raise WordError(f"word {self} is not closed and has no powers")
        return PathWord(self.arrows * exponent, self.source, self.target, self.degree * exponent)

    def as_list(self) -> list[str]:
        return list(self.arrows)

    def __str__(self) -> str:
        if self.is_trivial:
            return f"e_{self.source}"
        return format_arrows(self.arrows)


def format_arrows(arrows: Sequence[str]) -> str:
    """Concatenate single-character names, otherwise join with commas.

    >>> format_arrows(["a", "b"]), format_arrows(["a1", "b"])
    ('ab', 'a1,b')
    """
    if all(len(name) == 1 for name in arrows):
        return "".join(arrows)
    return ",".join(arrows)


def path_word(algebra: GentleAlgebra, arrows: Iterable[str]) -> PathWord:
    """Build a :class:`PathWord`, checking names and composability."""
    names = tuple(arrows)
    if not names:
        raise WordError("a non-trivial word needs at least one arrow; use PathWord.trivial for vertices")
    for name in names:
        if name not in algebra.arrows_by_name:
            raise WordError(f"unknown arrow {name!r}")
    for left, right in zip(names, names[1:], strict=False):
        if algebra.arrow(left).source != algebra.arrow(right).target:
            raise WordError(f"word {format_arrows(names)} is not composable at {left}{right}")
    degree = sum(algebra.arrow(name).degree for name in names)
    return PathWord(names, algebra.arrow(names[-1]).source, algebra.arrow(names[0]).target, degree)


def parse_word(algebra: GentleAlgebra, text: str) -> PathWord:
    """Parse ``"ab"``, ``"a,b"`` or ``"e_1"`` into a word of ``algebra``."""
    cleaned = text.strip()
    if cleaned.startswith("e_") and cleaned[2:] in algebra.vertex_index:
        return PathWord.trivial(cleaned[2:])
    if "," in cleaned:
        names = [part.strip() for part in cleaned.split(",")]
    elif cleaned in algebra.arrows_by_name:
        names = [cleaned]
    else:
        names = list(cleaned)
    return path_word(algebra, names)


def concat(left: PathWord, right: PathWord) -> PathWord | None:
    """The word ``left right`` (``right`` first), or ``None`` if not composable."""
    if left.source != right.target:
        return None
    return PathWord(left.arrows + right.arrows, right.source, left.target, left.degree + right.degree)


def _pairs(arrows: Sequence[str]) -> Iterable[tuple[str, str]]:
    return zip(arrows, arrows[1:], strict=False)


def is_live(algebra: GentleAlgebra, word: PathWord) -> bool:
    return not any(algebra.in_ideal(beta, alpha) for beta, alpha in _pairs(word.arrows))


def is_chain(algebra: GentleAlgebra, word: PathWord) -> bool:
    return all(algebra.in_ideal(beta, alpha) for beta, alpha in _pairs(word.arrows))


def classify_word(algebra: GentleAlgebra, word: PathWord | Sequence[str]) -> WordKind:
    """Classify a word as live, relation chain, both or neither.

    >>> from gentle_hochschild.quiver import GradedQuiver, Arrow, validate_gentle
    >>> e3 = validate_gentle(GradedQuiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "2", "1")), (("a", "b"),)))
    >>> classify_word(e3, ["a", "b"]).value, classify_word(e3, ["b", "a"]).value
    ('relation-chain', 'live')
    """
    if not isinstance(word, PathWord):
        word = path_word(algebra, word)
    live, chain = is_live(algebra, word), is_chain(algebra, word)
    if live and chain:
        return WordKind.BOTH
    if live:
        return WordKind.LIVE
    return WordKind.CHAIN if chain else WordKind.NEITHER


def word_key(algebra: GentleAlgebra, word: PathWord) -> tuple[int, tuple[int, ...], int]:
    """Deterministic ordering: by length, then arrow indices, then vertex."""
    return (word.length, tuple(algebra.arrow_index[a] for a in word.arrows), algebra.vertex_index[word.source])


# ---------------------------------------------------------------------------
# Rotation and cycles
# ---------------------------------------------------------------------------


def rotate(algebra: GentleAlgebra, word: PathWord, k: int = 1) -> PathWord:
    """``rot^k``: move the ``k`` leftmost arrows to the right end.

    >>> from gentle_hochschild.quiver import GradedQuiver, Arrow, validate_gentle
    >>> e2 = validate_gentle(GradedQuiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "2", "1")), (("b", "a"), ("a", "b"))))
    >>> str(rotate(e2, path_word(e2, "ab"))), str(rotate(e2, path_word(e2, "ab"), -1))
    ('ba', 'ba')
    """
    if not word.is_closed:
        raise WordError(f"cannot rotate the open word {word}")
    if word.is_trivial:
        return word
    shift = k % word.length
    arrows = word.arrows[shift:] + word.arrows[:shift]
    return PathWord(arrows, algebra.arrow(arrows[-1]).source, algebra.arrow(arrows[0]).target, word.degree)


def period(word: PathWord) -> int:
    """Least ``n >= 1`` with ``rot^n(word) == word``."""
    length = word.length
    for candidate in range(1, length + 1):
        if length % candidate == 0 and word.arrows == word.arrows[candidate:] + word.arrows[:candidate]:
            return candidate
    return max(length, 1)


def canonical_rotation(algebra: GentleAlgebra, word: PathWord) -> PathWord:
    """The rotation with the least tuple of arrow indices."""
    rotations = [rotate(algebra, word, k) for k in range(max(word.length, 1))]
    return min(rotations, key=lambda w: word_key(algebra, w))


@dataclass(frozen=True)
class CyclicWord:
    """A complete cycle power ``u^m`` of either kind.

    ``representative`` is the closed word ``u^m`` (``u`` in canonical rotation
    when produced by :func:`complete_cycles` or :func:`cyclic_word`).
    """

    representative: PathWord
    period: int
    exponent: int
    kind: CycleKind

    @property
    def primitive(self) -> PathWord:
        rep = self.representative
        return PathWord(rep.arrows[: self.period], rep.source, rep.target, rep.degree // self.exponent)

    @property
    def length(self) -> int:
        return self.representative.length

    @property
    def degree(self) -> int:
        return self.representative.degree

    @property
    def winding(self) -> int:
        """``l - |p|`` for relation-chain cycles, ``-|q|`` for live cycles."""
        if self.kind is CycleKind.CHAIN:
            return self.length - self.degree
        return -self.degree

    def power(self, exponent: int) -> CyclicWord:
        if exponent < 1:
            raise WordError(f"cycle exponent must be positive, got {exponent}")
        return CyclicWord(self.primitive.power(exponent), self.period, exponent, self.kind)

    @property
    def name(self) -> str:
        return str(self.primitive)

    def __str__(self) -> str:
        return f"{self.name}^{self.exponent}"


def _wraps(algebra: GentleAlgebra, word: PathWord, kind: CycleKind) -> bool:
    wrap = algebra.in_ideal(word.last, word.first)
    if kind is CycleKind.CHAIN:
        return is_chain(algebra, word) and wrap
    return is_live(algebra, word) and not wrap


def cyclic_word(algebra: GentleAlgebra, word: PathWord) -> CyclicWord:
    """Recognise ``word`` as a complete cycle power and normalise its rotation."""
    if word.is_trivial or not word.is_closed:
        raise WordError(f"{word} is not a closed non-trivial word")
    for kind in CycleKind:
        if _wraps(algebra, word, kind):
            canonical = canonical_rotation(algebra, word)
            step = period(canonical)
            return CyclicWord(canonical, step, canonical.length // step, kind)
    raise WordError(f"{word} is neither a complete relation-chain cycle nor a complete live cycle")


def _orbits(algebra: GentleAlgebra, successor: Mapping[str, str]) -> list[list[str]]:
    seen: set[str] = set()
    orbits: list[list[str]] = []
    for arrow in algebra.quiver.arrows:
        if arrow.name in seen:
            continue
        orbit = [arrow.name]
        current = successor.get(arrow.name)
        while current is not None and current != arrow.name and len(orbit) <= len(algebra.arrows):
            orbit.append(current)
            current = successor.get(current)
        if current == arrow.name:
            seen.update(orbit)
            orbits.append(orbit)
    return orbits


@lru_cache(maxsize=256)
def complete_cycles(algebra: GentleAlgebra) -> tuple[CyclicWord, ...]:
    """Primitive complete cycles of both kinds, one per rotation class.

    Relation-chain cycles come first, then live cycles; each group is ordered
    by canonical word.
    """
    found: list[CyclicWord] = []
    for kind, successor in ((CycleKind.CHAIN, algebra.chain_succ), (CycleKind.LIVE, algebra.live_succ)):
        group = []
        for orbit in _orbits(algebra, successor):
            # the orbit lists arrows in traversal order; words are written right to left
            word = path_word(algebra, reversed(orbit))
            canonical = canonical_rotation(algebra, word)
            group.append(CyclicWord(canonical, canonical.length, 1, kind))
        found.extend(sorted(group, key=lambda c: word_key(algebra, c.representative)))
    logger.debug("found %d complete cycles", len(found))
    return tuple(found)


def relation_chains_of_length(algebra: GentleAlgebra, n: int) -> tuple[PathWord, ...]:
    """All relation chains of length ``n`` (trivial words for ``n == 0``).

    >>> from gentle_hochschild.quiver import GradedQuiver, Arrow, validate_gentle
    >>> e2 = validate_gentle(GradedQuiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "2", "1")), (("b", "a"), ("a", "b"))))
    >>> [str(w) for w in relation_chains_of_length(e2, 2)]
    ['ab', 'ba']
    """
    if n < 0:
        raise WordError(f"chain length must be non-negative, got {n}")
    if n == 0:
        return tuple(PathWord.trivial(v) for v in algebra.vertices)
    chains: list[PathWord] = []
    for arrow in algebra.quiver.arrows:
        traversal = [arrow.name]
        while len(traversal) < n and traversal[-1] in algebra.chain_succ:
            traversal.append(algebra.chain_succ[traversal[-1]])
        if len(traversal) == n:
            chains.append(path_word(algebra, reversed(traversal)))
    return tuple(sorted(chains, key=lambda w: word_key(algebra, w)))


# ---------------------------------------------------------------------------
# Live paths with fixed endpoints
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LivePaths:
    """Result of :func:`live_paths`.

    ``infinite`` reports that the unrestricted set is infinite; ``truncated``
    that the cap removed at least one matching path. Without a cap an infinite
    set is returned without its periodic members.
    """

    paths: tuple[PathWord, ...]
    infinite: bool = False
    truncated: bool = False


def _ray(algebra: GentleAlgebra, start: str) -> tuple[list[str], bool]:
    traversal = [start]
    current = algebra.live_succ.get(start)
    while current is not None and current != start:
        traversal.append(current)
        current = algebra.live_succ.get(current)
    return traversal, current == start


def live_paths(
    algebra: GentleAlgebra,
    source: str,
    target: str | None = None,
    degree: int | None = None,
    cap: int | None = None,
) -> LivePaths:
    """Live paths from ``source`` with optional target, degree and length cap.

    Each outgoing arrow starts one ray of live continuations, finite or
    periodic; a periodic ray contributes infinitely many paths only when its
    cycle degree is zero or the degree is unconstrained.
    """
    found: list[PathWord] = []
    infinite = truncated = False

    def matches(word: PathWord) -> bool:
        return (target is None or word.target == target) and (degree is None or word.degree == degree)

    def within(length: int) -> bool:
        return cap is None or length <= cap

    trivial = PathWord.trivial(source)
    if matches(trivial):
        found.append(trivial)
    for start in algebra.outgoing[source]:
        traversal, periodic = _ray(algebra, start)
        prefixes = [path_word(algebra, reversed(traversal[:k])) for k in range(1, len(traversal) + 1)]
        if not periodic:
            for word in filter(matches, prefixes):
                if within(word.length):
                    found.append(word)
                else:
                    truncated = True
            continue
        cycle = prefixes[-1]
        for base in prefixes:
            if target is not None and base.target != target:
                continue
            if degree is not None and cycle.degree != 0:
                laps, rest = divmod(degree - base.degree, cycle.degree)
                if rest == 0 and laps >= 0:
                    word = concat(base, cycle.power(laps)) if laps else base
                    if word is not None and within(word.length):
                        found.append(word)
                    elif word is not None:
                        truncated = True
                continue
            if degree is not None and base.degree != degree:
                continue
            infinite = True
            truncated = True
            if cap is None:
                continue
            laps = 0
            while base.length + laps * cycle.length <= cap:
                word = concat(base, cycle.power(laps)) if laps else base
                if word is not None:
                    found.append(word)
                laps += 1
    ordered = tuple(sorted(set(found), key=lambda w: word_key(algebra, w)))
    return LivePaths(ordered, infinite=infinite, truncated=truncated)


# ---------------------------------------------------------------------------
# Threads, maximal chains and companions
# ---------------------------------------------------------------------------


class ThreadKind(StrEnum):
    LIVE = "live"
    CHAIN = "relation-chain"


@dataclass(frozen=True)
class Thread:
    """A maximal thread running from a virtual in-slot to a virtual out-slot.

    Slots are ``(vertex, index)`` pairs; index 0 and 1 refer to the padded
    in-slots (for ``start``) or out-slots (for ``end``) of that vertex.
    """

    word: PathWord
    kind: ThreadKind
    start: tuple[str, int]
    end: tuple[str, int]


@dataclass(frozen=True)
class ThreadSystem:
    live: tuple[Thread, ...]
    chain: tuple[Thread, ...]

    def live_starting_at(self, slot: tuple[str, int]) -> Thread:
        return next(t for t in self.live if t.start == slot)

    def chain_ending_at(self, slot: tuple[str, int]) -> Thread:
        return next(t for t in self.chain if t.end == slot)

    def live_ending_at(self, slot: tuple[str, int]) -> Thread:
        return next(t for t in self.live if t.end == slot)


def _padded(names: tuple[str, ...]) -> list[str | None]:
    return [*names, *([None] * (2 - len(names)))]


def _real_pairs(ins: list[str | None], outs: list[str | None], matching: dict[int, int]) -> Iterable[tuple[str, str]]:
    for i, j in matching.items():
        alpha, beta = ins[i], outs[j]
        if alpha is not None and beta is not None:
            yield beta, alpha


def _live_matching(algebra: GentleAlgebra, vertex: str) -> dict[int, int]:
    ins, outs = _padded(algebra.incoming[vertex]), _padded(algebra.outgoing[vertex])
    straight, crossed = {0: 0, 1: 1}, {0: 1, 1: 0}
    for candidate, other in ((straight, crossed), (crossed, straight)):
        live_ok = not any(algebra.in_ideal(beta, alpha) for beta, alpha in _real_pairs(ins, outs, candidate))
        chain_ok = all(algebra.in_ideal(beta, alpha) for beta, alpha in _real_pairs(ins, outs, other))
        if live_ok and chain_ok:
            return candidate
    raise WordError(f"vertex {vertex} admits no complementary live/relation matching")


def _follow(algebra: GentleAlgebra, matchings: Mapping[str, dict[int, int]], start: tuple[str, int], kind: ThreadKind) -> Thread:
    vertex, slot = start
    traversal: list[str] = []
    while True:
        out = matchings[vertex][slot]
        outs = _padded(algebra.outgoing[vertex])
        name = outs[out]
        if name is None:
            end = (vertex, out)
            break
        traversal.append(name)
        vertex = algebra.arrow(name).target
        slot = _padded(algebra.incoming[vertex]).index(name)
    word = path_word(algebra, reversed(traversal)) if traversal else PathWord.trivial(start[0])
    return Thread(word, kind, start, end)


@lru_cache(maxsize=256)
def threads(algebra: GentleAlgebra) -> ThreadSystem:
    """Maximal live threads and maximal relation chains, trivial ones included."""
    live_match = {v: _live_matching(algebra, v) for v in algebra.vertices}
    chain_match = {v: {i: 1 - j for i, j in m.items()} for v, m in live_match.items()}
    virtual_ins = [
        (v, i) for v in algebra.vertices for i, name in enumerate(_padded(algebra.incoming[v])) if name is None
    ]
    live = tuple(_follow(algebra, live_match, slot, ThreadKind.LIVE) for slot in virtual_ins)
    chain = tuple(_follow(algebra, chain_match, slot, ThreadKind.CHAIN) for slot in virtual_ins)
    logger.debug("built %d live threads and %d relation chains", len(live), len(chain))
    return ThreadSystem(live, chain)


@dataclass(frozen=True)
class MaximalChain:
    """A non-trivial maximal relation chain with its companion live path, if any."""

    chain: PathWord
    companion: PathWord | None


def maximal_chains_and_companions(algebra: GentleAlgebra) -> tuple[MaximalChain, ...]:
    """Non-trivial maximal chains; the companion closes a one-stop boundary walk.

    The companion is the live thread ending where the chain ends, kept only when
    it also starts where the chain starts, so the pair is always parallel. For
    the 2-cycle with only ``ab`` in the ideal this gives ``(ab, e_2)``: the
    trivial thread at vertex 2, never the loop ``ba``.

    Arrows lying on relation-chain cycles never belong to a maximal chain and
    are skipped.
    """
    system = threads(algebra)
    result = []
    for thread in system.chain:
        if thread.word.is_trivial:
            continue
        partner = system.live_ending_at(thread.end)
        companion = partner.word if partner.start == thread.start else None
        result.append(MaximalChain(thread.word, companion))
    return tuple(sorted(result, key=lambda m: word_key(algebra, m.chain)))


def closed_maximal_live(algebra: GentleAlgebra) -> tuple[PathWord, ...]:
    """Non-trivial maximal live threads that start and end at the same vertex."""
    words = [t.word for t in threads(algebra).live if not t.word.is_trivial and t.word.is_closed]
    return tuple(sorted(words, key=lambda w: word_key(algebra, w)))


__all__ = [
    "CycleKind",
    "CyclicWord",
    "LivePaths",
    "MaximalChain",
    "PathWord",
    "Thread",
    "ThreadKind",
    "ThreadSystem",
    "WordKind",
    "canonical_rotation",
    "classify_word",
    "closed_maximal_live",
    "complete_cycles",
    "concat",
    "cyclic_word",
    "format_arrows",
    "is_chain",
    "is_live",
    "live_paths",
    "maximal_chains_and_companions",
    "parse_word",
    "path_word",
    "period",
    "relation_chains_of_length",
    "rotate",
    "threads",
    "word_key",
]
