"""Exact sparse linear algebra on keyed column vectors.

Columns are mappings from arbitrary hashable keys (typically parallel pairs)
to :class:`~fractions.Fraction` coefficients. Rows are assigned on the fly
from the keys that actually occur, so callers never build a target basis. The
heavy lifting is done by sympy's ``DomainMatrix`` over ``QQ`` or ``GF(p)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Any

from sympy.polys.matrices import DomainMatrix

if TYPE_CHECKING:
    from collections.abc import Hashable, Mapping, Sequence

    from .fields import FieldSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Solution:
    """Outcome of :func:`solve`.

    ``values`` is one solution with free variables set to zero (empty when the
    system is inconsistent); ``pivots`` lists the pivot columns of the
    coefficient matrix, so a column missing from it depends on earlier ones.
    """

    consistent: bool
    values: tuple[Fraction, ...]
    pivots: tuple[int, ...]


def _to_fraction(value: Any) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def _assemble(columns: Sequence[Mapping[Hashable, Fraction]], field: FieldSpec) -> tuple[Any, int]:
    rows: dict[Hashable, int] = {}
    entries: dict[int, dict[int, Any]] = {}
    for j, column in enumerate(columns):
        for key, value in column.items():
            if field.is_zero(value):
                continue
            i = rows.setdefault(key, len(rows))
            entries.setdefault(i, {})[j] = field.to_domain(value)
    return DomainMatrix(entries, (len(rows), len(columns)), field.domain), len(rows)


def rank(columns: Sequence[Mapping[Hashable, Fraction]], field: FieldSpec) -> int:
    """Rank of the matrix whose columns are ``columns``.

    Examples
    --------
    >>> from gentle_hochschild.fields import FieldSpec
    >>> cols = [{"x": Fraction(1), "y": Fraction(1)}, {"x": Fraction(1), "y": Fraction(-1)}]
    >>> rank(cols, FieldSpec(0)), rank(cols, FieldSpec(2))
    (2, 1)
    """
    if not columns:
        return 0
    matrix, row_count = _assemble(columns, field)
    if row_count == 0:
        return 0
    logger.debug("rank of %dx%d matrix over %s", row_count, len(columns), field.label)
    return int(matrix.rank())


def solve(
    columns: Sequence[Mapping[Hashable, Fraction]],
    target: Mapping[Hashable, Fraction],
    field: FieldSpec,
) -> Solution:
    """Solve ``sum_j x_j * columns[j] == target`` exactly.

    Examples
    --------
    >>> from gentle_hochschild.fields import FieldSpec
    >>> cols = [{"x": Fraction(1)}, {"x": Fraction(1), "y": Fraction(1)}]
    >>> solve(cols, {"x": Fraction(3), "y": Fraction(1)}, FieldSpec(0)).values
    (Fraction(2, 1), Fraction(1, 1))
    >>> solve(cols[:1], {"y": Fraction(1)}, FieldSpec(0)).consistent
    False
    """
    augmented, row_count = _assemble([*columns, target], field)
    width = len(columns)
    if row_count == 0:
        return Solution(consistent=True, values=tuple(Fraction(0) for _ in columns), pivots=())
    reduced, pivots = augmented.rref()
    pivot_list = tuple(int(p) for p in pivots)
    if width in pivot_list:
        return Solution(consistent=False, values=(), pivots=tuple(p for p in pivot_list if p < width))
    dense = reduced.to_Matrix()
    values = [Fraction(0)] * width
    for row, column in enumerate(pivot_list):
        values[column] = field.reduce(_to_fraction(dense[row, width]))
    return Solution(consistent=True, values=tuple(values), pivots=pivot_list)


__all__ = ["Solution", "rank", "solve"]
