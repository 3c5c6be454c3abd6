"""Cup product, Gerstenhaber bracket and the algebra presentation of HH.

Two layers live here:

* chain-level engines on parallel pairs (:func:`chain_cup`,
  :func:`chain_circle`, :func:`chain_bracket`), exact in any field;
* closed forms on basis classes (:func:`cup`, :func:`bracket`). The closed form
  decides which class a product can hit and its coefficient up to sign; the
  chain engine evaluated on representatives fixes the sign. Each pair is
  evaluated once per algebra and field and then served from a cache.

Sign conventions
----------------
The pair cup ``(p1, q1) u (p2, q2) = (-1)^{s2 |p1|} (p1 p2, q1 q2)`` is
commutative on cohomology with the bigraded Koszul sign
``(-1)^{n n' + d d'}``. The bracket is antisymmetric for the shifted total
degree, ``[x, y] = -(-1)^{(|x| - 1)(|y| - 1)} [y, x]``.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import TYPE_CHECKING, Any

from .complexes import Cochain, ParallelPair, differential, sign
from .errors import StructureConstantMismatch
from .hochschild import (
    ClassKind,
    HHClass,
    HHExpression,
    identify,
    parity_allows,
    representative,
    spanning_tree,
    stop_classes,
    trace_class,
)
from .quiver import validate_gentle
from .threads import CycleKind, CyclicWord, PathWord, complete_cycles, concat, is_chain, is_live, path_word

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping, Sequence

    from .fields import FieldSpec
    from .quiver import GentleAlgebra, GradedQuiver

logger = logging.getLogger(__name__)


class Operation(StrEnum):
    CUP = "cup"
    BRACKET = "bracket"


# ---------------------------------------------------------------------------
# Chain level
# ---------------------------------------------------------------------------


def _word(algebra: GentleAlgebra, arrows: Sequence[str], vertex: str) -> PathWord:
    return path_word(algebra, arrows) if arrows else PathWord.trivial(vertex)


def _degree(algebra: GentleAlgebra, arrows: Iterable[str]) -> int:
    return sum(algebra.arrow(name).degree for name in arrows)


def _cup_pair(algebra: GentleAlgebra, first: ParallelPair, second: ParallelPair) -> tuple[ParallelPair, int] | None:
    p, q = concat(first.p, second.p), concat(first.q, second.q)
    if p is None or q is None or not is_chain(algebra, p) or not is_live(algebra, q):
        return None
    return ParallelPair(p, q), sign(second.internal_degree * first.p.degree)


def chain_cup(algebra: GentleAlgebra, f: Cochain, g: Cochain, field: FieldSpec) -> Cochain:
    """Bilinear cup product of cochains, bidegree ``(m + n, r + s)``.

    >>> from gentle_hochschild.fields import FieldSpec
    >>> from gentle_hochschild.quiver import GradedQuiver, Arrow, validate_gentle
    >>> from gentle_hochschild.threads import path_word
    >>> e2 = validate_gentle(GradedQuiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "2", "1")), (("b", "a"), ("a", "b"))))
    >>> ab = Cochain.single(ParallelPair(path_word(e2, "ab"), PathWord.trivial("2")))
    >>> str(chain_cup(e2, ab, ab, FieldSpec()))
    '1*(abab, e_2)'
    """
    items: list[tuple[ParallelPair, Fraction]] = []
    for first, c1 in f.terms.items():
        for second, c2 in g.terms.items():
            product = _cup_pair(algebra, first, second)
            if product is not None:
                items.append((product[0], c1 * c2 * product[1]))
    (m, r), (n, s) = f.bidegree, g.bidegree
    return Cochain.build((m + n, r + s), items, field)


def _insert(
    algebra: GentleAlgebra, new_p: tuple[str, ...], new_q: tuple[str, ...], vertex: str
) -> ParallelPair | None:
    p = _word(algebra, new_p, vertex)
    q = _word(algebra, new_q, p.source)
    if not is_chain(algebra, p) or not is_live(algebra, q):
        return None
    return ParallelPair(p, q)


def _circle_single_arrow(algebra: GentleAlgebra, first: ParallelPair, second: ParallelPair) -> list[tuple[ParallelPair, int]]:
    """``(alpha, q1)`` acts on ``q2`` as a graded derivation, once per occurrence of ``alpha``.

    The output ``q1`` passes the prefix ``u`` of ``q2 = u alpha v`` with sign ``(-1)^{r |u|}``.
    """
    alpha, r = first.p.arrows[0], first.internal_degree
    terms = []
    for k, name in enumerate(second.q.arrows):
        if name != alpha:
            continue
        u, v = second.q.arrows[:k], second.q.arrows[k + 1 :]
        pair = _insert(algebra, second.p.arrows, u + first.q.arrows + v, second.p.source)
        if pair is not None:
            terms.append((pair, sign(r * _degree(algebra, u))))
    return terms


def _circle_at(algebra: GentleAlgebra, first: ParallelPair, second: ParallelPair, i: int) -> tuple[ParallelPair, int] | None:
    """``first o_i second`` for ``l(first.p) >= 2`` and a 1-based position ``i``."""
    arrows, q2 = first.p.arrows, second.q.arrows
    m, n, s = len(arrows), second.p.length, second.internal_degree
    alpha = arrows[i - 1]
    base = (m - 1) * (n + s - 1)
    vertex = second.p.source
    if 1 < i < m:
        if q2 != (alpha,):
            return None
        new_p = arrows[: i - 1] + second.p.arrows + arrows[i:]
        new_q, exponent = first.q.arrows, base + _degree(algebra, arrows[: i - 1]) * s
    elif i == 1:
        if not q2 or q2[-1] != alpha:
            return None
        new_p = second.p.arrows + arrows[1:]
        new_q, exponent = q2[:-1] + first.q.arrows, base + first.internal_degree * _degree(algebra, q2[:-1])
    else:
        if not q2 or q2[0] != alpha:
            return None
        new_p = arrows[:-1] + second.p.arrows
        new_q, exponent = first.q.arrows + q2[1:], base + _degree(algebra, arrows[:-1]) * s
    pair = _insert(algebra, new_p, new_q, vertex)
    return None if pair is None else (pair, sign(exponent))


def _circle_pair(algebra: GentleAlgebra, first: ParallelPair, second: ParallelPair) -> list[tuple[ParallelPair, int]]:
    m, n = first.p.length, second.p.length
    if m == 0:
        return []
    if m == 1:
        return _circle_single_arrow(algebra, first, second)
    terms = []
    for i in range(1, m + 1):
        found = _circle_at(algebra, first, second, i)
        if found is not None:
            terms.append((found[0], found[1] * sign((i - 1) * (n - 1))))
    return terms


def chain_circle(algebra: GentleAlgebra, f: Cochain, g: Cochain, field: FieldSpec) -> Cochain:
    """``f o g = sum_i (-1)^{(i-1)(n-1)} f o_i g``, bidegree ``(m + n - 1, r + s)``."""
    items: list[tuple[ParallelPair, Fraction]] = []
    for first, c1 in f.terms.items():
        for second, c2 in g.terms.items():
            items.extend((pair, c1 * c2 * value) for pair, value in _circle_pair(algebra, first, second))
    (m, r), (n, s) = f.bidegree, g.bidegree
    return Cochain.build((m + n - 1, r + s), items, field)


def chain_bracket(algebra: GentleAlgebra, f: Cochain, g: Cochain, field: FieldSpec) -> Cochain:
    """``[f, g] = f o g - (-1)^{(m + r - 1)(n + s - 1)} g o f``.

    >>> from gentle_hochschild.fields import FieldSpec
    >>> from gentle_hochschild.quiver import GradedQuiver, Arrow, validate_gentle
    >>> from gentle_hochschild.threads import path_word
    >>> e2 = validate_gentle(GradedQuiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "2", "1")), (("b", "a"), ("a", "b"))))
    >>> b = path_word(e2, "b")
    >>> arrow_b = Cochain.single(ParallelPair(b, b))
    >>> str(chain_bracket(e2, arrow_b, arrow_b, FieldSpec()))
    '0'
    """
    shifted = sign((f.total_degree - 1) * (g.total_degree - 1))
    forward = chain_circle(algebra, f, g, field)
    backward = chain_circle(algebra, g, f, field)
    return forward.plus(backward, field, -shifted)


def leibniz_defect(algebra: GentleAlgebra, f: Cochain, g: Cochain, field: FieldSpec) -> Cochain:
    """``d(f u g) - (-1)^s d(f) u g - (-1)^{m + r} f u d(g)``; zero for all cochains."""
    (m, r), (_, s) = f.bidegree, g.bidegree
    left = differential(algebra, chain_cup(algebra, f, g, field), field)
    first = chain_cup(algebra, differential(algebra, f, field), g, field)
    second = chain_cup(algebra, f, differential(algebra, g, field), field)
    return left.plus(first, field, -sign(s)).plus(second, field, -sign(m + r))


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Prediction:
    """What the closed form says about one product of basis classes.

    ``target`` is ``None`` when the product vanishes. Unless ``exact`` is set
    the coefficient is known only up to sign.
    """

    target: HHClass | None
    magnitude: int = 1
    exact: bool = False


_ZERO = Prediction(None, 0)


def _same_cycle(left: HHClass, right: HHClass) -> bool:
    if left.cycle is None or right.cycle is None:
        return False
    return left.cycle.kind is right.cycle.kind and left.cycle.primitive == right.cycle.primitive


def _is_trace(hh_class: HHClass) -> bool:
    return hh_class.kind in (ClassKind.N0, ClassKind.N1)


def _combined(left: HHClass, right: HHClass, kind: ClassKind) -> HHClass:
    assert left.cycle is not None and right.cycle is not None
    return trace_class(left.cycle.power(left.cycle.exponent + right.cycle.exponent), kind)


def predict_cup(left: HHClass, right: HHClass) -> Prediction:
    """Support of ``left u right`` from the cycle-power and orthogonality rules."""
    if left.kind is ClassKind.UNIT:
        return Prediction(right, 1, exact=True)
    if right.kind is ClassKind.UNIT:
        return Prediction(left, 1, exact=True)
    if _is_trace(left) and _is_trace(right) and _same_cycle(left, right):
        if left.kind is ClassKind.N1 and right.kind is ClassKind.N1:
            return _ZERO
        kind = ClassKind.N0 if left.kind is right.kind else ClassKind.N1
        return Prediction(_combined(left, right, kind))
    for arrow_class, other in ((left, right), (right, left)):
        if arrow_class.kind is ClassKind.ARROW and other.kind is ClassKind.N0:
            assert other.cycle is not None
            if arrow_class.arrow in other.cycle.primitive.arrows:
                return Prediction(trace_class(other.cycle, ClassKind.N1))
    return _ZERO


def _occurrence_shift(algebra: GentleAlgebra, arrow: str, cochain: Cochain) -> int:
    shifts = {pair.q.arrows.count(arrow) - pair.p.arrows.count(arrow) for pair in cochain.terms}
    if len(shifts) > 1:
        raise StructureConstantMismatch(f"arrow {arrow} occurs unevenly across the terms of {cochain}")
    return shifts.pop() if shifts else 0


def _shifted_antisymmetry(left: HHClass, right: HHClass) -> int:
    return -sign((left.total_degree - 1) * (right.total_degree - 1))


def predict_bracket(algebra: GentleAlgebra, field: FieldSpec, left: HHClass, right: HHClass) -> Prediction:
    """Support of ``[left, right]``: Witt-type laws on one cycle, arrow eigenvalues, zero otherwise.

    For odd winding the parity case split collapses to the same formulas
    read modulo 2, which is the only characteristic where such classes exist.
    """
    if ClassKind.UNIT in (left.kind, right.kind):
        return _ZERO
    if left.kind is ClassKind.ARROW:
        assert left.arrow is not None
        count = _occurrence_shift(algebra, left.arrow, representative(algebra, right, field))
        return Prediction(right if count else None, count, exact=True)
    if right.kind is ClassKind.ARROW:
        flipped = predict_bracket(algebra, field, right, left)
        return Prediction(flipped.target, flipped.magnitude * _shifted_antisymmetry(right, left), exact=True)
    if not (_is_trace(left) and _is_trace(right) and _same_cycle(left, right)):
        return _ZERO
    assert left.cycle is not None and right.cycle is not None
    m, n = left.cycle.exponent, right.cycle.exponent
    match left.kind, right.kind:
        case ClassKind.N1, ClassKind.N1:
            return Prediction(_combined(left, right, ClassKind.N1), m - n)
        case ClassKind.N0, ClassKind.N1:
            return Prediction(_combined(left, right, ClassKind.N0), m)
        case ClassKind.N1, ClassKind.N0:
            return Prediction(_combined(left, right, ClassKind.N0), n)
    return _ZERO


def _evaluate(algebra: GentleAlgebra, field: FieldSpec, operation: Operation, left: HHClass, right: HHClass) -> HHExpression:
    f, g = representative(algebra, left, field), representative(algebra, right, field)
    if operation is Operation.CUP:
        product = chain_cup(algebra, f, g, field)
    else:
        product = chain_bracket(algebra, f, g, field)
    return identify(algebra, field, product)


def _check(prediction: Prediction, observed: HHExpression, field: FieldSpec, label: str) -> None:
    expected = field.reduce(prediction.magnitude)
    if prediction.target is None or expected == 0:
        if not observed.is_zero():
            raise StructureConstantMismatch(f"{label}: closed form gives 0, chain level gives {observed}")
        return
    allowed = {expected} if prediction.exact else {expected, field.reduce(-prediction.magnitude)}
    if len(observed.terms) != 1 or observed.terms[0][0] != prediction.target or observed.terms[0][1] not in allowed:
        raise StructureConstantMismatch(
            f"{label}: closed form gives +-{prediction.magnitude} * {prediction.target.name}, chain level gives {observed}"
        )


@lru_cache(maxsize=16_384)
def structure_constant(
    algebra: GentleAlgebra, field: FieldSpec, operation: Operation, left: HHClass, right: HHClass
) -> HHExpression:
    """``left u right`` or ``[left, right]`` on basis classes, sign-calibrated and cached."""
    if operation is Operation.CUP:
        prediction = predict_cup(left, right)
    else:
        prediction = predict_bracket(algebra, field, left, right)
    observed = _evaluate(algebra, field, operation, left, right)
    _check(prediction, observed, field, f"{operation.value}({left.name}, {right.name})")
    logger.debug("%s(%s, %s) = %s", operation.value, left.name, right.name, observed)
    return observed


def _bilinear(
    algebra: GentleAlgebra, field: FieldSpec, operation: Operation, x: HHExpression, y: HHExpression
) -> HHExpression:
    result = HHExpression()
    for left, a in x.terms:
        for right, b in y.terms:
            result = result.plus(structure_constant(algebra, field, operation, left, right), field, a * b)
    return result


def cup(algebra: GentleAlgebra, field: FieldSpec, x: HHExpression, y: HHExpression) -> HHExpression:
    """Cup product of cohomology classes.

    >>> from gentle_hochschild.fields import FieldSpec
    >>> from gentle_hochschild.hochschild import parse_class_name
    >>> from gentle_hochschild.quiver import GradedQuiver, Arrow, validate_gentle
    >>> e2 = validate_gentle(GradedQuiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "2", "1")), (("b", "a"), ("a", "b"))))
    >>> n0 = HHExpression.of(parse_class_name(e2, FieldSpec(), "N0[ab]"))
    >>> str(cup(e2, FieldSpec(), n0, n0))
    '1 * N0[ab^2]'
    """
    return _bilinear(algebra, field, Operation.CUP, x, y)


def bracket(algebra: GentleAlgebra, field: FieldSpec, x: HHExpression, y: HHExpression) -> HHExpression:
    """Gerstenhaber bracket of cohomology classes.

    >>> from gentle_hochschild.fields import FieldSpec
    >>> from gentle_hochschild.hochschild import parse_class_name
    >>> from gentle_hochschild.quiver import GradedQuiver, Arrow, validate_gentle
    >>> e2 = validate_gentle(GradedQuiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "2", "1")), (("b", "a"), ("a", "b"))))
    >>> one, two = (HHExpression.of(parse_class_name(e2, FieldSpec(), f"N1[ab^{m}]")) for m in (1, 2))
    >>> str(bracket(e2, FieldSpec(), one, two))
    '-1 * N1[ab^3]'
    """
    return _bilinear(algebra, field, Operation.BRACKET, x, y)


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StructureTable:
    """All cup products and brackets among a list of classes."""

    classes: tuple[HHClass, ...]
    cup: Mapping[tuple[HHClass, HHClass], HHExpression]
    bracket: Mapping[tuple[HHClass, HHClass], HHExpression]

    def to_dict(self) -> dict[str, Any]:
        def rows(table: Mapping[tuple[HHClass, HHClass], HHExpression]) -> list[dict[str, Any]]:
            return [
                {"left": left.name, "right": right.name, "value": value.to_list()}
                for (left, right), value in table.items()
                if not value.is_zero()
            ]

        return {"classes": [c.name for c in self.classes], "cup": rows(self.cup), "bracket": rows(self.bracket)}


def _table_cell(task: tuple[GradedQuiver, FieldSpec, Operation, HHClass, HHClass]) -> HHExpression:
    quiver, field, operation, left, right = task
    return structure_constant(validate_gentle(quiver), field, operation, left, right)


def structure_table(algebra: GentleAlgebra, field: FieldSpec, classes: Sequence[HHClass], jobs: int = 1) -> StructureTable:
    """Evaluate every ordered pair; ``jobs > 1`` spreads the pairs over a process pool."""
    keys = [(op, left, right) for op in Operation for left in classes for right in classes]
    if jobs <= 1:
        values = [structure_constant(algebra, field, *key) for key in keys]
    else:
        tasks = [(algebra.quiver, field, *key) for key in keys]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(_table_cell, tasks))
    split: dict[Operation, dict[tuple[HHClass, HHClass], HHExpression]] = {op: {} for op in Operation}
    for (op, left, right), value in zip(keys, values, strict=True):
        split[op][(left, right)] = value
    logger.info("structure table over %d classes filled (%d pairs)", len(classes), len(keys))
    return StructureTable(
        tuple(classes), MappingProxyType(split[Operation.CUP]), MappingProxyType(split[Operation.BRACKET])
    )


# ---------------------------------------------------------------------------
# Symbolic families
# ---------------------------------------------------------------------------


def exponent_step(cycle: CyclicWord, field: FieldSpec) -> int:
    """Least exponent ``k`` such that ``N0[u^k]`` and ``N1[u^k]`` are classes."""
    return 1 if parity_allows(cycle, field) else 2


@dataclass(frozen=True)
class CycleLaws:
    """Cup and bracket laws on the family ``{N0[u^m], N1[u^m]}`` of one cycle.

    ``orientation`` is the calibrated sign of the Witt laws; ``twist`` is the
    degree of the rightmost arrow of the canonical word, which enters the cup
    signs.
    """

    cycle: CyclicWord
    step: int
    orientation: int
    twist: int

    @property
    def name(self) -> str:
        return self.cycle.name

    def bracket_coefficient(self, left: ClassKind, right: ClassKind, m: int, n: int) -> int:
        match left, right:
            case ClassKind.N1, ClassKind.N1:
                return self.orientation * (m - n)
            case ClassKind.N0, ClassKind.N1:
                return self.orientation * m
            case ClassKind.N1, ClassKind.N0:
                return -self.orientation * n * sign(self._degree(ClassKind.N1, m) * self._degree(ClassKind.N0, n))
        return 0

    def _degree(self, kind: ClassKind, exponent: int) -> int:
        """Shifted total degree ``|x| - 1`` of a family member."""
        power = self.cycle.power(exponent)
        extra = 1 if kind is ClassKind.N1 else 0
        if self.cycle.kind is CycleKind.CHAIN:
            return power.length + extra - power.degree - 1
        return extra + power.degree - 1

    def cup_coefficient(self, left: ClassKind, right: ClassKind, m: int, n: int) -> int:
        u = self.cycle.primitive.degree
        chain = self.cycle.kind is CycleKind.CHAIN
        match left, right:
            case ClassKind.N0, ClassKind.N0:
                return sign(m * n * u) if chain else 1
            case ClassKind.N0, ClassKind.N1:
                return sign(m * u * (1 + self.twist + n)) if chain else sign(m * u * (1 + self.twist))
            case ClassKind.N1, ClassKind.N0:
                return sign(n * u * (m + self.twist)) if chain else sign(n * u * self.twist)
        return 0

    def laws(self) -> list[str]:
        u, e = self.name, self.orientation
        witt = "" if e == 1 else "-"
        return [
            f"[N1[{u}^m], N1[{u}^n]] = {witt}(m - n) * N1[{u}^(m+n)]",
            f"[N0[{u}^m], N1[{u}^n]] = {witt}m * N0[{u}^(m+n)]",
            f"[N0[{u}^m], N0[{u}^n]] = 0",
            f"N0[{u}^m] cup N0[{u}^n] = {self._cup_text(ClassKind.N0, ClassKind.N0)} * N0[{u}^(m+n)]",
            f"N0[{u}^m] cup N1[{u}^n] = {self._cup_text(ClassKind.N0, ClassKind.N1)} * N1[{u}^(m+n)]",
            f"N1[{u}^m] cup N1[{u}^n] = 0",
        ]

    def _cup_text(self, left: ClassKind, right: ClassKind) -> str:
        u, t = self.cycle.primitive.degree, self.twist
        if u % 2 == 0:
            return "1"
        chain = self.cycle.kind is CycleKind.CHAIN
        if (left, right) == (ClassKind.N0, ClassKind.N0):
            return "(-1)^(m*n)" if chain else "1"
        if chain:
            return f"(-1)^(m*(n+{1 + t}))"
        return "(-1)^m" if (1 + t) % 2 else "1"

    def condition(self) -> str:
        return "m, n >= 1" if self.step == 1 else "m, n even"

    def to_dict(self) -> dict[str, Any]:
        return {
            "cycle": self.name,
            "kind": self.cycle.kind.value,
            "winding": self.cycle.winding,
            "condition": self.condition(),
            "orientation": self.orientation,
            "laws": self.laws(),
        }


def _orientation(algebra: GentleAlgebra, field: FieldSpec, cycle: CyclicWord, step: int) -> int:
    if field.characteristic == 2:  # noqa: PLR2004
        return 1
    left = trace_class(cycle.power(step), ClassKind.N0)
    right = trace_class(cycle.power(step), ClassKind.N1)
    value = structure_constant(algebra, field, Operation.BRACKET, left, right)
    coefficient = value.coefficient(trace_class(cycle.power(2 * step), ClassKind.N0))
    return 1 if coefficient == field.reduce(step) else -1


def family_laws(algebra: GentleAlgebra, field: FieldSpec) -> tuple[CycleLaws, ...]:
    """Symbolic laws per complete cycle, with the Witt sign calibrated on the chain level."""
    laws = []
    for cycle in complete_cycles(algebra):
        step = exponent_step(cycle, field)
        orientation = _orientation(algebra, field, cycle, step)
        predicted = 1 if cycle.kind is CycleKind.CHAIN else -1
        if orientation != predicted and field.characteristic != 2:  # noqa: PLR2004
            logger.debug("cycle %s: Witt orientation recalibrated to %d", cycle.name, orientation)
        twist = algebra.arrow(cycle.primitive.last).degree
        laws.append(CycleLaws(cycle, step, orientation, twist))
    return tuple(laws)


# ---------------------------------------------------------------------------
# Presentation
# ---------------------------------------------------------------------------


class GeneratorKind(StrEnum):
    ARROW = "arrow"
    CYCLE = "cycle"
    SINGLE_STOP = "single-stop"


@dataclass(frozen=True)
class Generator:
    name: str
    kind: GeneratorKind
    degree: int
    hh_class: HHClass

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "kind": self.kind.value, "degree": self.degree, "class": self.hh_class.name}


@dataclass(frozen=True)
class Presentation:
    """Free graded-commutative algebra on ``generators`` modulo ``relations``."""

    generators: tuple[Generator, ...]
    relations: tuple[str, ...]

    def generator(self, name: str) -> Generator:
        return next(g for g in self.generators if g.name == name)

    def to_dict(self) -> dict[str, Any]:
        return {"generators": [g.to_dict() for g in self.generators], "relations": list(self.relations)}


def hh_presentation(algebra: GentleAlgebra, field: FieldSpec) -> Presentation:
    """Generators ``x_e``, ``x_B``, ``y_C`` and the four relation families.

    >>> from gentle_hochschild.fields import FieldSpec
    >>> from gentle_hochschild.quiver import GradedQuiver, Arrow, validate_gentle
    >>> e1 = validate_gentle(GradedQuiver(("1", "2"), (Arrow("a", "1", "2"),)))
    >>> hh_presentation(e1, FieldSpec()).generators
    ()
    """
    tree = spanning_tree(algebra)
    edges = [
        Generator(f"x_{a.name}", GeneratorKind.ARROW, 1, HHClass(ClassKind.ARROW, (1, 0), arrow=a.name))
        for a in algebra.arrows
        if a.name not in tree
    ]
    cycles = []
    for index, cycle in enumerate(complete_cycles(algebra), start=1):
        hh_class = trace_class(cycle.power(exponent_step(cycle, field)), ClassKind.N0)
        cycles.append((cycle, Generator(f"x_B{index}", GeneratorKind.CYCLE, hh_class.total_degree, hh_class)))
    stops = [
        Generator(f"y_C{index}", GeneratorKind.SINGLE_STOP, c.total_degree, c)
        for index, c in enumerate(stop_classes(algebra), start=1)
    ]
    relations: list[str] = []
    relations.extend(f"{x.name}*{y.name}" for i, (_, x) in enumerate(cycles) for _, y in cycles[i + 1 :])
    relations.extend(f"{x.name}*{y.name}" for _, x in cycles for y in stops)
    relations.extend(f"{y.name}^2" for y in stops)
    for cycle, x in cycles:
        on_cycle = [g for g in edges if g.hh_class.arrow in cycle.primitive.arrows]
        relations.extend(f"{e.name}*{x.name} - {f.name}*{x.name}" for i, e in enumerate(on_cycle) for f in on_cycle[i + 1 :])
    generators = (*edges, *(g for _, g in cycles), *stops)
    logger.info("presentation: %d generators, %d relations", len(generators), len(relations))
    return Presentation(generators, tuple(relations))


__all__ = [
    "CycleLaws",
    "Generator",
    "GeneratorKind",
    "HHExpression",
    "Operation",
    "Prediction",
    "Presentation",
    "StructureTable",
    "bracket",
    "chain_bracket",
    "chain_circle",
    "chain_cup",
    "cup",
    "exponent_step",
    "family_laws",
    "hh_presentation",
    "leibniz_defect",
    "predict_bracket",
    "predict_cup",
    "structure_constant",
    "structure_table",
]
