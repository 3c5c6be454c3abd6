"""Exact elimination tests: rank and solve over Q and prime fields."""

from __future__ import annotations

from fractions import Fraction

import pytest

from gentle_hochschild.fields import FieldSpec
from gentle_hochschild.linalg import rank, solve

ONE = Fraction(1)


@pytest.mark.os_agnostic
class TestRank:
    """Rank depends on the characteristic, never on floating point."""

    def test_empty_matrix_has_rank_zero(self) -> None:
        """No columns, no rank."""
        assert rank([], FieldSpec(0)) == 0

    def test_zero_columns_have_rank_zero(self) -> None:
        """Columns with only zero entries contribute nothing."""
        assert rank([{"x": Fraction(0)}, {}], FieldSpec(0)) == 0

    def test_two_collapses_in_characteristic_two(self) -> None:
        """(1, 1) and (1, -1) are independent over Q but equal over F_2."""
        columns = [{"x": ONE, "y": ONE}, {"x": ONE, "y": -ONE}]

        assert rank(columns, FieldSpec(0)) == 2
        assert rank(columns, FieldSpec(2)) == 1

    def test_three_kills_a_column_in_f3(self) -> None:
        """A column (3) vanishes over F_3."""
        assert rank([{"x": Fraction(3)}], FieldSpec(3)) == 0


@pytest.mark.os_agnostic
class TestSolve:
    """solve finds one exact solution or reports inconsistency."""

    def test_consistent_system(self) -> None:
        """x0 * (1, 0) + x1 * (1, 1) = (3, 1) has x = (2, 1)."""
        columns = [{"x": ONE}, {"x": ONE, "y": ONE}]

        solution = solve(columns, {"x": Fraction(3), "y": ONE}, FieldSpec(0))

        assert solution.consistent
        assert solution.values == (Fraction(2), ONE)

    def test_inconsistent_system(self) -> None:
        """A target outside the span is reported, not approximated."""
        solution = solve([{"x": ONE}], {"y": ONE}, FieldSpec(0))

        assert not solution.consistent

    def test_pivots_expose_dependent_columns(self) -> None:
        """A repeated column is not a pivot."""
        solution = solve([{"x": ONE}, {"x": Fraction(2)}], {"x": ONE}, FieldSpec(0))

        assert solution.pivots == (0,)

    def test_values_are_reduced_in_prime_fields(self) -> None:
        """2 * x = 1 over F_5 gives x = 3."""
        solution = solve([{"x": Fraction(2)}], {"x": ONE}, FieldSpec(5))

        assert solution.values == (Fraction(3),)

    def test_zero_target_with_no_rows(self) -> None:
        """An all-zero system is trivially consistent."""
        solution = solve([{}], {}, FieldSpec(0))

        assert solution.consistent
        assert solution.values == (Fraction(0),)
