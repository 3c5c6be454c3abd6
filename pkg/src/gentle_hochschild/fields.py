"""Exact coefficient fields: the rationals and prime fields.

Scalars travel through the library as :class:`fractions.Fraction`. Over a
prime field a scalar is stored as the reduced integer representative in
``[0, p)``; :meth:`FieldSpec.reduce` is the single normalisation point. Linear
algebra converts to sympy's ``QQ`` / ``GF(p)`` domains on the way in and back
on the way out.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Final

from sympy import isprime
from sympy.polys.domains import GF, QQ

from .errors import FieldSpecError

#: Prefix selecting a prime field in ``--field`` values.
PRIME_PREFIX: Final[str] = "fp:"


@dataclass(frozen=True, order=True)
class FieldSpec:
    """Either the rationals (``characteristic == 0``) or ``F_p``.

    Examples
    --------
    >>> FieldSpec.parse("fp:3").reduce(Fraction(1, 2))
    Fraction(2, 1)
    >>> FieldSpec.parse("q").label
    'Q'
    """

    characteristic: int = 0

    def __post_init__(self) -> None:
        if self.characteristic != 0 and not isprime(self.characteristic):
            raise FieldSpecError(f"characteristic {self.characteristic} is not prime")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse ``q`` or ``fp:<p>``; raises :class:`FieldSpecError` otherwise."""
        cleaned = text.strip().lower()
        if cleaned in {"q", "qq", "rationals"}:
            return cls(0)
        if cleaned.startswith(PRIME_PREFIX):
            digits = cleaned.removeprefix(PRIME_PREFIX)
            if not digits.isdigit():
                raise FieldSpecError(f"field {text!r}: expected fp:<prime>")
            return cls(int(digits))
        raise FieldSpecError(f"field {text!r}: expected 'q' or 'fp:<prime>'")

    @property
    def label(self) -> str:
        return "Q" if self.characteristic == 0 else f"F_{self.characteristic}"

    @property
    def domain(self) -> Any:
        """The sympy ground domain used for elimination."""
        return QQ if self.characteristic == 0 else GF(self.characteristic)

    def reduce(self, value: Fraction | int) -> Fraction:
        value = Fraction(value)
        if self.characteristic == 0:
            return value
        p = self.characteristic
        if value.denominator % p == 0:
            raise FieldSpecError(f"{value} has no image in {self.label}")
        return Fraction(value.numerator * pow(value.denominator, -1, p) % p)

    def is_zero(self, value: Fraction | int) -> bool:
        return self.reduce(value) == 0

    def inverse(self, value: Fraction | int) -> Fraction:
        reduced = self.reduce(value)
        if reduced == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.characteristic == 0:
            return 1 / reduced
        return Fraction(pow(int(reduced), -1, self.characteristic))

    def to_domain(self, value: Fraction | int) -> Any:
        reduced = self.reduce(value)
        if self.characteristic == 0:
            return QQ(reduced.numerator, reduced.denominator)
        return self.domain(int(reduced))

    def from_domain(self, element: Any) -> Fraction:
        rational = self.domain.to_sympy(element)
        return self.reduce(Fraction(int(rational.p), int(rational.q)))

    def __str__(self) -> str:
        return "q" if self.characteristic == 0 else f"{PRIME_PREFIX}{self.characteristic}"


__all__ = ["PRIME_PREFIX", "FieldSpec"]
