"""Intrinsic formality: the surface criterion next to the Kadeishvili spaces.

The surface criterion reads winding numbers off the boundary components: an
unmarked component of winding 2 obstructs formality, a single-stop component
of winding 2 puts the algebra outside the range where the criterion is proved.
Independently, ``HH^{n, 2-n}`` for ``3 <= n <= nmax`` is taken from the closed
basis; if all of these vanish the algebra is intrinsically formal. Both
answers are reported and any disagreement is flagged, never reconciled.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import StrEnum
from typing import TYPE_CHECKING, Any, Final

from .boundary import BoundaryCycle, BoundaryKind, boundary_cycles
from .errors import RangeError
from .hochschild import ClassKind, basis_report, trace_class

if TYPE_CHECKING:
    from .fields import FieldSpec
    from .quiver import GentleAlgebra

logger = logging.getLogger(__name__)

#: Default upper end of the obstruction window.
DEFAULT_NMAX: Final[int] = 8
#: Smallest ``n`` whose ``HH^{n, 2-n}`` carries Kadeishvili obstructions.
FIRST_OBSTRUCTION: Final[int] = 3
#: Winding number singled out by the surface criterion.
CRITICAL_WINDING: Final[int] = 2


class SurfaceVerdict(StrEnum):
    FORMAL = "formal"
    NOT_FORMAL = "not-formal"
    OUTSIDE_HYPOTHESIS = "outside-hypothesis"


@dataclass(frozen=True)
class Witness:
    """A boundary component responsible for the verdict."""

    kind: BoundaryKind
    winding: int
    summary: str
    classes: tuple[str, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind.value, "winding": self.winding, "component": self.summary, "classes": list(self.classes)}


@dataclass(frozen=True)
class KadeishviliReport:
    """``obstruction_dims[n] = dim HH^{n, 2-n}``; ``sufficient`` iff all vanish."""

    obstruction_dims: dict[int, int] = field(default_factory=dict)

    @property
    def sufficient(self) -> bool:
        return all(dim == 0 for dim in self.obstruction_dims.values())

    def to_dict(self) -> dict[str, Any]:
        return {
            "obstruction_dims": {str(n): dim for n, dim in sorted(self.obstruction_dims.items())},
            "sufficient_formality": self.sufficient,
        }


@dataclass(frozen=True)
class FormalityVerdict:
    """Both formality criteria side by side.

    ``agreement`` is ``None`` for ``outside-hypothesis``, where the surface
    criterion makes no claim.
    """

    surface_verdict: SurfaceVerdict
    kadeishvili: KadeishviliReport
    witnesses: tuple[Witness, ...] = ()

    @property
    def agreement(self) -> bool | None:
        if self.surface_verdict is SurfaceVerdict.OUTSIDE_HYPOTHESIS:
            return None
        return (self.surface_verdict is SurfaceVerdict.FORMAL) == self.kadeishvili.sufficient

    def to_dict(self) -> dict[str, Any]:
        return {
            "surface_verdict": self.surface_verdict.value,
            "kadeishvili": self.kadeishvili.to_dict(),
            "witnesses": [w.to_dict() for w in self.witnesses],
            "agreement": self.agreement,
        }


def _unmarked_witness(cycle: BoundaryCycle) -> Witness:
    assert cycle.cycle is not None
    word = cycle.cycle.primitive
    obstruction = trace_class(cycle.cycle, ClassKind.N0)
    summary = f"unmarked cycle {word}: length {word.length}, degree {word.degree}"
    return Witness(cycle.kind, cycle.winding, summary, (obstruction.name,))


def _single_stop_witness(cycle: BoundaryCycle) -> Witness:
    (live,), (chain,) = cycle.lives, cycle.chains
    return Witness(cycle.kind, cycle.winding, f"single-stop component: live {live}, relation chain {chain}")


def kadeishvili_dims(algebra: GentleAlgebra, field: FieldSpec, nmax: int = DEFAULT_NMAX) -> KadeishviliReport:
    """Dimensions of ``HH^{n, 2-n}`` for ``3 <= n <= nmax`` from the closed basis."""
    if nmax < FIRST_OBSTRUCTION:
        raise RangeError(f"nmax must be at least {FIRST_OBSTRUCTION}, got {nmax}")
    dims: dict[int, int] = {}
    for n in range(FIRST_OBSTRUCTION, nmax + 1):
        dimension = basis_report(algebra, field, n, 2 - n).dimension
        # only degree-0 live cycles produce families, and they sit at n <= 1
        assert dimension is not None
        dims[n] = dimension
    return KadeishviliReport(dims)


def formality(algebra: GentleAlgebra, field: FieldSpec, nmax: int = DEFAULT_NMAX) -> FormalityVerdict:
    """Decide intrinsic formality by the surface criterion and report the obstruction spaces.

    >>> from gentle_hochschild.fields import FieldSpec
    >>> from gentle_hochschild.quiver import GradedQuiver, Arrow, validate_gentle
    >>> e1 = validate_gentle(GradedQuiver(("1", "2"), (Arrow("a", "1", "2"),)))
    >>> verdict = formality(e1, FieldSpec(), 4)
    >>> verdict.surface_verdict.value, verdict.kadeishvili.obstruction_dims, verdict.agreement
    ('formal', {3: 0, 4: 0}, True)
    """
    report = kadeishvili_dims(algebra, field, nmax)
    cycles = boundary_cycles(algebra)
    unmarked = [c for c in cycles if c.kind is BoundaryKind.UNMARKED and c.winding == CRITICAL_WINDING]
    single_stop = [c for c in cycles if c.kind is BoundaryKind.GENERIC and c.stops == 1 and c.winding == CRITICAL_WINDING]
    if unmarked:
        verdict = FormalityVerdict(SurfaceVerdict.NOT_FORMAL, report, tuple(_unmarked_witness(c) for c in unmarked))
    elif single_stop:
        verdict = FormalityVerdict(SurfaceVerdict.OUTSIDE_HYPOTHESIS, report, tuple(_single_stop_witness(c) for c in single_stop))
    else:
        verdict = FormalityVerdict(SurfaceVerdict.FORMAL, report)
    if verdict.agreement is False:
        logger.warning(
            "surface criterion says %s but the obstruction spaces %s",
            verdict.surface_verdict.value,
            "all vanish" if report.sufficient else "do not all vanish",
        )
    return verdict


__all__ = [
    "DEFAULT_NMAX",
    "FormalityVerdict",
    "KadeishviliReport",
    "SurfaceVerdict",
    "Witness",
    "formality",
    "kadeishvili_dims",
]
