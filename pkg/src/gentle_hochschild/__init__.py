"""Exact computer algebra for graded gentle algebras.

Validate a graded gentle quiver, read off its surface model, compute
Hochschild cohomology both by elimination and from the closed-form basis, and
evaluate cup products, Gerstenhaber brackets and the formality criterion.
"""

from __future__ import annotations

from .__init__conf__ import print_info
from .boundary import aag_invariant, boundary_cycles, compare_invariants, surface_invariants
from .complexes import Cochain, cohomology_dim, differential, graded_center_dim, pair_basis
from .errors import GentleError
from .fields import FieldSpec
from .formality import formality
from .hochschild import HHClass, HHExpression, basis, basis_report, dims, identify, parse_class_name, representative
from .quiver import Arrow, GentleAlgebra, GradedQuiver, load_quiver, parse_quiver, random_gentle, validate_gentle
from .structure import bracket, cup, family_laws, hh_presentation, structure_constant

__all__ = [
    "Arrow",
    "Cochain",
    "FieldSpec",
    "GentleAlgebra",
    "GentleError",
    "GradedQuiver",
    "HHClass",
    "HHExpression",
    "aag_invariant",
    "basis",
    "basis_report",
    "boundary_cycles",
    "bracket",
    "cohomology_dim",
    "compare_invariants",
    "cup",
    "differential",
    "dims",
    "family_laws",
    "formality",
    "graded_center_dim",
    "hh_presentation",
    "identify",
    "load_quiver",
    "pair_basis",
    "parse_class_name",
    "parse_quiver",
    "print_info",
    "random_gentle",
    "representative",
    "structure_constant",
    "surface_invariants",
    "validate_gentle",
]
