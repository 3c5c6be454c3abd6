"""The bigraded Bardzell cochain complex and its brute-force cohomology.

Cochains live on parallel pairs ``(p, q)``: a relation chain ``p`` of length
``n`` and a live path ``q`` with the same endpoints, in bidegree
``(n, |q| - |p|)``. The differential raises both ``n`` and ``l(q)`` by one, so
a length cap ``L`` on ``q`` in degree ``n`` pairs with the cap ``L - 1`` in
degree ``n - 1``; the capped quotient injects into cohomology and is reported
as a lower bound whenever the cap removed anything.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from types import MappingProxyType
from typing import TYPE_CHECKING, Any, Final

import networkx as nx

from .errors import CocycleError, InconsistentSystemError, InternalConsistencyError, NeedsCapError, WordError
from .fields import FieldSpec
from .linalg import rank, solve
from .quiver import validate_gentle
from .threads import PathWord, concat, is_chain, is_live, live_paths, relation_chains_of_length

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping, Sequence

    from .quiver import GentleAlgebra, GradedQuiver

logger = logging.getLogger(__name__)

#: Length cap used when an infinite component is queried without one.
DEFAULT_CAP: Final[int] = 8

Bidegree = tuple[int, int]


def sign(exponent: int) -> int:
    """``(-1) ** exponent`` for any integer exponent."""
    return -1 if exponent % 2 else 1


@dataclass(frozen=True)
class ParallelPair:
    """A relation chain ``p`` and a live path ``q`` sharing both endpoints."""

    p: PathWord
    q: PathWord

    @property
    def bidegree(self) -> Bidegree:
        return self.p.length, self.q.degree - self.p.degree

    @property
    def internal_degree(self) -> int:
        return self.q.degree - self.p.degree

    @property
    def level(self) -> tuple[int, int]:
        return self.p.length, self.q.length

    def __str__(self) -> str:
        return f"({self.p}, {self.q})"


def make_pair(algebra: GentleAlgebra, p: PathWord, q: PathWord) -> ParallelPair:
    """Checked constructor for :class:`ParallelPair`."""
    if (p.source, p.target) != (q.source, q.target):
        raise WordError(f"({p}, {q}) is not a parallel pair")
    if not is_chain(algebra, p):
        raise WordError(f"{p} is not a relation chain")
    if not is_live(algebra, q):
        raise WordError(f"{q} is not a live path")
    return ParallelPair(p, q)


@dataclass(frozen=True)
class Cochain:
    """A homogeneous linear combination of parallel pairs with nonzero scalars."""

    bidegree: Bidegree
    terms: Mapping[ParallelPair, Fraction] = field(default_factory=lambda: MappingProxyType({}))

    @classmethod
    def build(cls, bidegree: Bidegree, items: Iterable[tuple[ParallelPair, Fraction | int]], field: FieldSpec) -> Cochain:
        totals: dict[ParallelPair, Fraction] = {}
        for pair, coefficient in items:
            if pair.bidegree != bidegree:
                raise InternalConsistencyError(f"pair {pair} of bidegree {pair.bidegree} in a cochain of bidegree {bidegree}")
            totals[pair] = totals.get(pair, Fraction(0)) + Fraction(coefficient)
        reduced = {pair: field.reduce(value) for pair, value in totals.items()}
        return cls(bidegree, MappingProxyType({pair: value for pair, value in reduced.items() if value != 0}))

    @classmethod
    def single(cls, pair: ParallelPair, coefficient: Fraction | int = 1) -> Cochain:
        return cls(pair.bidegree, MappingProxyType({pair: Fraction(coefficient)}))

    @property
    def total_degree(self) -> int:
        return sum(self.bidegree)

    def is_zero(self) -> bool:
        return not self.terms

    def plus(self, other: Cochain, field: FieldSpec, scale: Fraction | int = 1) -> Cochain:
        """``self + scale * other``."""
        if self.is_zero():
            return other.scaled(scale, field)
        if not other.is_zero() and other.bidegree != self.bidegree:
            raise InternalConsistencyError(f"cannot add cochains of bidegrees {self.bidegree} and {other.bidegree}")
        items = [*self.terms.items(), *((pair, c * scale) for pair, c in other.terms.items())]
        return Cochain.build(self.bidegree, items, field)

    def scaled(self, scale: Fraction | int, field: FieldSpec) -> Cochain:
        return Cochain.build(self.bidegree, ((pair, c * scale) for pair, c in self.terms.items()), field)

    def to_list(self) -> list[dict[str, Any]]:
        return [
            {"p": pair.p.as_list() or str(pair.p), "q": pair.q.as_list() or str(pair.q), "coefficient": str(c)}
            for pair, c in self.terms.items()
        ]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(f"{c}*{pair}" for pair, c in self.terms.items())


# ---------------------------------------------------------------------------
# Cochain spaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PairBasis:
    """Parallel pairs of one bidegree.

    ``infinite`` marks a component made infinite by a degree-0 live cycle; it
    then needs a cap, and ``truncated`` records that the cap dropped pairs.
    """

    bidegree: Bidegree
    pairs: tuple[ParallelPair, ...]
    infinite: bool = False
    truncated: bool = False
    cap: int | None = None

    @property
    def needs_cap(self) -> bool:
        return self.infinite and self.cap is None


def pair_basis(algebra: GentleAlgebra, n: int, d: int, cap: int | None = None) -> PairBasis:
    """Enumerate the parallel pairs of bidegree ``(n, d)`` with ``l(q) <= cap``.

    >>> from gentle_hochschild.quiver import GradedQuiver, Arrow, validate_gentle
    >>> e2 = validate_gentle(GradedQuiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "2", "1")), (("b", "a"), ("a", "b"))))
    >>> [str(pair) for pair in pair_basis(e2, 2, 0).pairs]
    ['(ab, e_2)', '(ba, e_1)']
    """
    if n < 0:
        return PairBasis((n, d), (), cap=cap)
    pairs: list[ParallelPair] = []
    infinite = truncated = False
    for p in relation_chains_of_length(algebra, n):
        found = live_paths(algebra, p.source, target=p.target, degree=d + p.degree, cap=cap)
        infinite |= found.infinite
        truncated |= found.truncated
        pairs.extend(ParallelPair(p, q) for q in found.paths)
    return PairBasis((n, d), tuple(pairs), infinite=infinite, truncated=truncated, cap=cap)


# ---------------------------------------------------------------------------
# Differential
# ---------------------------------------------------------------------------


def _left_extensions(algebra: GentleAlgebra, p: PathWord) -> Iterable[str]:
    if p.is_trivial:
        return algebra.outgoing[p.target]
    successor = algebra.chain_succ.get(p.first)
    return () if successor is None else (successor,)


def _right_extensions(algebra: GentleAlgebra, p: PathWord) -> Iterable[str]:
    if p.is_trivial:
        return algebra.incoming[p.source]
    predecessor = algebra.chain_pred.get(p.last)
    return () if predecessor is None else (predecessor,)


def _arrow_word(algebra: GentleAlgebra, name: str) -> PathWord:
    arrow = algebra.arrow(name)
    return PathWord((name,), arrow.source, arrow.target, arrow.degree)


def left_terms(algebra: GentleAlgebra, pair: ParallelPair) -> list[tuple[ParallelPair, int]]:
    """Summands of ``d_L(p, q)`` with their signs."""
    s = pair.internal_degree
    terms = []
    for name in _left_extensions(algebra, pair.p):
        if not pair.q.is_trivial and algebra.in_ideal(name, pair.q.first):
            continue
        alpha = _arrow_word(algebra, name)
        p_new, q_new = concat(alpha, pair.p), concat(alpha, pair.q)
        if p_new is not None and q_new is not None:
            terms.append((ParallelPair(p_new, q_new), sign(s) * sign(s * alpha.degree)))
    return terms


def right_terms(algebra: GentleAlgebra, pair: ParallelPair) -> list[tuple[ParallelPair, int]]:
    """Summands of ``d_R(p, q)`` with their signs."""
    s, n = pair.internal_degree, pair.p.length
    terms = []
    for name in _right_extensions(algebra, pair.p):
        if not pair.q.is_trivial and algebra.in_ideal(pair.q.last, name):
            continue
        beta = _arrow_word(algebra, name)
        p_new, q_new = concat(pair.p, beta), concat(pair.q, beta)
        if p_new is not None and q_new is not None:
            terms.append((ParallelPair(p_new, q_new), -sign(s) * sign(n)))
    return terms


def differential(algebra: GentleAlgebra, f: Cochain, field: FieldSpec | None = None) -> Cochain:
    """Bardzell differential ``d = d_L + d_R``; bidegree ``(n, d) -> (n + 1, d)``.

    >>> from gentle_hochschild.quiver import GradedQuiver, Arrow, validate_gentle
    >>> e1 = validate_gentle(GradedQuiver(("1", "2"), (Arrow("a", "1", "2"),)))
    >>> vertex = PathWord.trivial("1")
    >>> str(differential(e1, Cochain.single(ParallelPair(vertex, vertex))))
    '1*(a, a)'
    """
    field = field or FieldSpec()
    items: list[tuple[ParallelPair, Fraction]] = []
    for pair, coefficient in f.terms.items():
        items.extend((child, coefficient * s) for child, s in left_terms(algebra, pair))
        items.extend((child, coefficient * s) for child, s in right_terms(algebra, pair))
    n, d = f.bidegree
    return Cochain.build((n + 1, d), items, field)


def _image_columns(algebra: GentleAlgebra, pairs: Sequence[ParallelPair], field: FieldSpec) -> list[Mapping[Any, Fraction]]:
    return [differential(algebra, Cochain.single(pair), field).terms for pair in pairs]


# ---------------------------------------------------------------------------
# Cohomology dimensions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OracleDim:
    """A cohomology dimension; ``exact`` is false for capped lower bounds."""

    dim: int
    exact: bool = True
    cap: int | None = None

    def __str__(self) -> str:
        return str(self.dim) if self.exact else f">={self.dim}"


def _lower(cap: int | None) -> int | None:
    return None if cap is None else cap - 1


def cohomology_dim(algebra: GentleAlgebra, field: FieldSpec, n: int, d: int, cap: int | None = None) -> OracleDim:
    """``dim ker d - dim im d`` at bidegree ``(n, d)`` by exact elimination.

    >>> from gentle_hochschild.quiver import GradedQuiver, Arrow, validate_gentle
    >>> e1 = validate_gentle(GradedQuiver(("1", "2"), (Arrow("a", "1", "2"),)))
    >>> cohomology_dim(e1, FieldSpec(), 0, 0).dim, cohomology_dim(e1, FieldSpec(), 1, 0).dim
    (1, 0)
    """
    current = pair_basis(algebra, n, d, cap)
    previous = pair_basis(algebra, n - 1, d, _lower(cap))
    if current.needs_cap or previous.needs_cap:
        logger.warning("bidegree (%d, %d) is infinite-dimensional; reporting a lower bound with cap %d", n, d, DEFAULT_CAP)
        return cohomology_dim(algebra, field, n, d, DEFAULT_CAP)
    rank_out = rank(_image_columns(algebra, current.pairs, field), field)
    rank_in = rank(_image_columns(algebra, previous.pairs, field), field)
    dim = len(current.pairs) - rank_out - rank_in
    logger.debug("HH^(%d,%d): %d pairs, rank out %d, rank in %d", n, d, len(current.pairs), rank_out, rank_in)
    return OracleDim(dim, exact=not (current.truncated or previous.truncated), cap=cap)


def _required_cap(cochains: Iterable[Cochain]) -> int:
    return max((pair.q.length for c in cochains for pair in c.terms), default=0)


def reduce_mod_coboundaries(
    algebra: GentleAlgebra,
    field: FieldSpec,
    z: Cochain,
    representatives: Sequence[Cochain],
    cap: int | None = None,
) -> tuple[Fraction, ...]:
    """Coordinates ``c`` with ``z = sum c_i * representatives[i] + d(u)``."""
    if not differential(algebra, z, field).is_zero():
        raise CocycleError(f"{z} is not a cocycle")
    n, d = z.bidegree
    needed = _required_cap([z, *representatives])
    if cap is not None and cap < needed:
        raise NeedsCapError(f"cap {cap} is below the longest path {needed} in the reduction data")
    previous = pair_basis(algebra, n - 1, d)
    if previous.infinite:
        # d raises l(q) by one, so shorter preimages suffice
        previous = pair_basis(algebra, n - 1, d, needed - 1)
    columns = _image_columns(algebra, previous.pairs, field)
    offset = len(columns)
    columns.extend(rep.terms for rep in representatives)
    solution = solve(columns, z.terms, field)
    if not solution.consistent:
        raise InconsistentSystemError(f"cocycle {z} is not in the span of the basis representatives of bidegree {z.bidegree}")
    missing = [i for i in range(len(representatives)) if offset + i not in solution.pivots]
    if missing:
        raise InconsistentSystemError(f"representatives {missing} are linearly dependent modulo coboundaries")
    return tuple(field.reduce(v) for v in solution.values[offset:])


# ---------------------------------------------------------------------------
# Atoms
# ---------------------------------------------------------------------------


class AtomType(StrEnum):
    A = "A"
    A_TILDE = "A~"
    VERTEX = "vertex"


@dataclass(frozen=True)
class Atom:
    """A levelled connected summand.

    ``certificate`` lists parent/child edges of a spanning tree of its support
    graph; ``kind`` is ``None`` unless the atom is a cocycle.
    """

    cochain: Cochain
    level: tuple[int, int]
    certificate: tuple[tuple[ParallelPair, ParallelPair], ...]
    kind: AtomType | None = None


@dataclass(frozen=True)
class AtomDecomposition:
    atoms: tuple[Atom, ...]

    def total(self, field: FieldSpec) -> Cochain | None:
        result: Cochain | None = None
        for atom in self.atoms:
            result = atom.cochain if result is None else result.plus(atom.cochain, field)
        return result


def _children(algebra: GentleAlgebra, pair: ParallelPair) -> tuple[list[ParallelPair], list[ParallelPair]]:
    return [c for c, _ in left_terms(algebra, pair)], [c for c, _ in right_terms(algebra, pair)]


def _is_vertex_pair(pair: ParallelPair) -> bool:
    return pair.p.is_trivial and pair.q.is_trivial


def _support_graph(algebra: GentleAlgebra, support: Iterable[ParallelPair]) -> nx.Graph[Any]:
    graph: nx.Graph[Any] = nx.Graph()
    for pair in support:
        graph.add_node(("v", pair))
        left, right = _children(algebra, pair)
        for child in (*left, *right):
            graph.add_edge(("v", pair), ("c", child))
    return graph


def _atom_type(algebra: GentleAlgebra, atom: Cochain) -> AtomType:
    if all(_is_vertex_pair(pair) for pair in atom.terms):
        return AtomType.VERTEX
    for pair in atom.terms:
        left, right = _children(algebra, pair)
        if not left or not right:
            return AtomType.A
    return AtomType.A_TILDE


def atom_decomposition(algebra: GentleAlgebra, f: Cochain, field: FieldSpec | None = None) -> AtomDecomposition:
    """Canonical decomposition into levelled, connected summands."""
    field = field or FieldSpec()
    by_level: dict[tuple[int, int], list[ParallelPair]] = {}
    for pair in f.terms:
        by_level.setdefault(pair.level, []).append(pair)
    atoms: list[Atom] = []
    for level in sorted(by_level):
        graph = _support_graph(algebra, by_level[level])
        for component in sorted(nx.connected_components(graph), key=lambda nodes: min(str(n[1]) for n in nodes)):
            support = [pair for pair in by_level[level] if ("v", pair) in component]
            cochain = Cochain.build(f.bidegree, ((pair, f.terms[pair]) for pair in support), field)
            edges = nx.dfs_edges(graph, source=("v", support[0]))
            certificate = tuple((u[1], v[1]) if u[0] == "v" else (v[1], u[1]) for u, v in edges)
            kind = _atom_type(algebra, cochain) if differential(algebra, cochain, field).is_zero() else None
            atoms.append(Atom(cochain, level, certificate, kind))
    return AtomDecomposition(tuple(atoms))


def classify_atom(algebra: GentleAlgebra, atom: Cochain, field: FieldSpec | None = None) -> AtomType:
    """Type of an atomic cocycle: ``A``, ``A~`` or ``vertex``."""
    field = field or FieldSpec()
    if not differential(algebra, atom, field).is_zero():
        raise CocycleError(f"{atom} is not a cocycle")
    decomposition = atom_decomposition(algebra, atom, field)
    if len(decomposition.atoms) != 1:
        raise CocycleError(f"{atom} is not atomic: it has {len(decomposition.atoms)} atoms")
    return _atom_type(algebra, atom)


# ---------------------------------------------------------------------------
# Graded center
# ---------------------------------------------------------------------------


def _center_column(algebra: GentleAlgebra, q: PathWord, d: int) -> dict[Any, Fraction]:
    column: dict[Any, Fraction] = {}

    def add(key: Any, value: int) -> None:
        column[key] = column.get(key, Fraction(0)) + value

    add(("e", q.target, q), 1)
    add(("e", q.source, q), -1)
    for arrow in algebra.arrows:
        if arrow.source == q.target and (q.is_trivial or not algebra.in_ideal(arrow.name, q.first)):
            add(("a", arrow.name, concat(_arrow_word(algebra, arrow.name), q)), 1)
        if arrow.target == q.source and (q.is_trivial or not algebra.in_ideal(q.last, arrow.name)):
            add(("a", arrow.name, concat(q, _arrow_word(algebra, arrow.name))), -sign(d * arrow.degree))
    return column


def graded_center_dim(algebra: GentleAlgebra, field: FieldSpec, d: int, cap: int | None = None) -> OracleDim:
    """Dimension of the degree-``d`` graded center, from ``a z = (-1)^{|a| d} z a``."""
    variables: list[PathWord] = []
    infinite = truncated = False
    for vertex in algebra.vertices:
        found = live_paths(algebra, vertex, degree=d, cap=cap)
        infinite |= found.infinite
        truncated |= found.truncated
        variables.extend(found.paths)
    if infinite and cap is None:
        logger.warning("degree-%d center is infinite-dimensional; reporting a lower bound with cap %d", d, DEFAULT_CAP)
        return graded_center_dim(algebra, field, d, DEFAULT_CAP)
    columns = [_center_column(algebra, q, d) for q in variables]
    return OracleDim(len(variables) - rank(columns, field), exact=not truncated, cap=cap)


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------


def _oracle_cell(task: tuple[GradedQuiver, FieldSpec, int, int, int | None]) -> OracleDim:
    quiver, field, n, d, cap = task
    return cohomology_dim(validate_gentle(quiver), field, n, d, cap)


def oracle_table(
    algebra: GentleAlgebra,
    field: FieldSpec,
    n_values: Iterable[int],
    d_values: Iterable[int],
    cap: int | None = None,
    jobs: int = 1,
) -> dict[Bidegree, OracleDim]:
    """Oracle dimensions for every cell; ``jobs > 1`` uses a process pool."""
    cells = [(n, d) for d in d_values for n in n_values]
    if jobs <= 1:
        return {cell: cohomology_dim(algebra, field, *cell, cap) for cell in cells}
    tasks = [(algebra.quiver, field, n, d, cap) for n, d in cells]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_oracle_cell, tasks))
    return dict(zip(cells, results, strict=True))


__all__ = [
    "DEFAULT_CAP",
    "Atom",
    "AtomDecomposition",
    "AtomType",
    "Bidegree",
    "Cochain",
    "OracleDim",
    "PairBasis",
    "ParallelPair",
    "atom_decomposition",
    "classify_atom",
    "cohomology_dim",
    "differential",
    "graded_center_dim",
    "left_terms",
    "make_pair",
    "oracle_table",
    "pair_basis",
    "reduce_mod_coboundaries",
    "right_terms",
    "sign",
]
