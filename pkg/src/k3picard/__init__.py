"""Exact arithmetic on polarized K3 Picard lattices.

The package answers lattice-level questions about a K3 surface whose Picard
group is a prescribed even lattice with a distinguished polarization class:
dimensions of line-bundle cohomology, effectivity and positivity of divisor
classes, enumeration of classes with given degree and square, scroll
invariants attached to low-degree elliptic pencils, and the classification
of h^0 of twisted normal bundles for the embedded surface and its
hyperplane-section curves.  All computations are exact integer or rational
arithmetic; no floating point is used anywhere.
"""

from .lattice import (Model, chi_rr, genus_of, inertia, pair,
                      validate_model)
from .enumeration import (MonoidCache, classes_with, effective_oracle,
                          elliptic_pencils, irreducible_classes,
                          nonconnected_decompositions)
from .cohomology import (CohomologyDims, RestrictionEstimate,
                         cohomology_dims, fixed_decomposition, h0_restricted,
                         is_base_point_free, is_effective, is_nef,
                         is_very_ample, tie_break_class,
                         very_ample_obstruction)
from .scroll import (TetragonalBs, generic_hyperplane_scroll,
                     hyperplane_extrapolated, scroll_type,
                     section_h0_from_scroll, tetragonal_b_invariants)
from .classify import (ClassificationReport, CliffordVerdict,
                       InvalidModelError, NotVeryAmpleError, classify_model,
                       clifford_index, compare_surface_curve,
                       curve_normal_twist2, normal_twist_k,
                       surface_normal_twist2)
from .expr import ClassExprError, parse_class_expr, render_class_expr
from .modelio import (ModelFileError, dump_model_file, load_model_file,
                      model_from_dict, model_to_dict)
from . import registry

__version__ = "0.1.0"

__all__ = [
    "Model", "chi_rr", "genus_of", "inertia", "pair", "validate_model",
    "MonoidCache", "classes_with", "effective_oracle", "elliptic_pencils",
    "irreducible_classes", "nonconnected_decompositions",
    "CohomologyDims", "RestrictionEstimate", "cohomology_dims",
    "fixed_decomposition", "h0_restricted", "is_base_point_free",
    "is_effective", "is_nef", "is_very_ample", "tie_break_class",
    "very_ample_obstruction",
    "TetragonalBs", "generic_hyperplane_scroll", "hyperplane_extrapolated",
    "scroll_type", "section_h0_from_scroll", "tetragonal_b_invariants",
    "ClassificationReport", "CliffordVerdict", "InvalidModelError",
    "NotVeryAmpleError", "classify_model", "clifford_index",
    "compare_surface_curve", "curve_normal_twist2", "normal_twist_k",
    "surface_normal_twist2",
    "ClassExprError", "parse_class_expr", "render_class_expr",
    "ModelFileError", "dump_model_file", "load_model_file",
    "model_from_dict", "model_to_dict",
    "registry",
    "__version__",
]
