"""Exception hierarchy shared by every library module.

Purpose
-------
Give callers one root (:class:`GentleError`) to catch domain failures while
keeping the individual failure modes distinguishable. The CLI maps every
:class:`GentleError` to exit code 1; anything else is treated as a bug and
rendered through ``lib_cli_exit_tools``.

Contents
--------
* Input problems: :class:`QuiverFormatError`, :class:`GentleAxiomError`,
  :class:`ExcludedShapeError`, :class:`DisconnectedQuiverError`,
  :class:`FieldSpecError`, :class:`RandomBoundsError`, :class:`WordError`,
  :class:`ClassNameError`.
* Computation limits: :class:`NeedsCapError`, :class:`RangeError`.
* Hard bug signals: :class:`InconsistentSystemError`, :class:`CocycleError`,
  :class:`StructureConstantMismatch`, :class:`InternalConsistencyError`.
"""

from __future__ import annotations


class GentleError(Exception):
    """Root of every domain error raised by :mod:`gentle_hochschild`."""


class QuiverFormatError(GentleError):
    """The quiver document is malformed or references unknown ids."""


class GentleAxiomError(GentleError):
    """A gentle axiom fails; ``axiom`` names it and ``location`` the culprit.

    Examples
    --------
    >>> err = GentleAxiomError("1", "vertex 3", "3 outgoing arrows")
    >>> str(err)
    'gentle axiom (1) violated at vertex 3: 3 outgoing arrows'
    """

    def __init__(self, axiom: str, location: str, detail: str) -> None:
        self.axiom = axiom
        self.location = location
        self.detail = detail
        super().__init__(f"gentle axiom ({axiom}) violated at {location}: {detail}")


class ExcludedShapeError(GentleError):
    """The quiver is a single-vertex loop or the Kronecker quiver."""


class DisconnectedQuiverError(GentleError):
    """The underlying graph has more than one connected component."""


class FieldSpecError(GentleError):
    """A field description is neither ``q`` nor ``fp:<prime>``."""


class RandomBoundsError(GentleError):
    """Random generator bounds are non-positive or cannot be met."""


class WordError(GentleError):
    """An arrow word is not composable, not closed, or names unknown arrows."""


class ClassNameError(GentleError):
    """A Hochschild class name does not parse or is not valid for the algebra."""


class NeedsCapError(GentleError):
    """A bidegree component is infinite-dimensional and no cap was given."""


class RangeError(GentleError):
    """A numeric parameter such as a degree bound lies outside its admissible range."""


class InconsistentSystemError(GentleError):
    """A cocycle is not reachable from the basis representatives."""


class CocycleError(GentleError):
    """A cochain expected to be a cocycle (or an atom) is not one."""


class StructureConstantMismatch(GentleError):
    """Chain-level evaluation disagrees with a closed-form structure constant."""


class InternalConsistencyError(GentleError):
    """A derived invariant violates a structural identity."""


__all__ = [
    "ClassNameError",
    "CocycleError",
    "DisconnectedQuiverError",
    "ExcludedShapeError",
    "FieldSpecError",
    "GentleAxiomError",
    "GentleError",
    "InconsistentSystemError",
    "InternalConsistencyError",
    "NeedsCapError",
    "QuiverFormatError",
    "RandomBoundsError",
    "RangeError",
    "StructureConstantMismatch",
    "WordError",
]
