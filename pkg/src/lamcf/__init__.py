"""Exact continued-fraction and lamination-invariant toolkit.

Everything is integer or Fraction arithmetic end to end; floats appear
only in axis lengths and rendering coordinates.
"""

from .cf_core import (CFKind, RegularCF, TailDecision, apply_gl2,
                      canonicalize, cf_to_matrix, cf_value, eval_cf,
                      expand_rational, expand_surd, tail_equivalent)
from .errors import LamcfError
from .gl2 import (INFINITY, Axis, IntMat2, IsometryClass, axis_of, classify,
                  decompose_to_cf_generators, fixed_points, in_hecke,
                  mobius_apply)
from .hecke_surface import SurfaceInvariants, index_bruteforce, \
    surface_invariants
from .invariants import (InvariantDecision, LaminationInvariant,
                         SingularityData, enumerate_delta, invariant_equal,
                         invariant_of_stream, polygon_areas, validate_delta)
from .legendre import (LegendreStep, TracePredicate, legendre_stream,
                       select_next_term, steps_from_terms, trace_formula)
from .render import RenderSpec, render_axes
from .surd import QuadSurd

__version__ = "0.1.0"

__all__ = [
    "Axis", "CFKind", "INFINITY", "IntMat2", "InvariantDecision",
    "IsometryClass", "LamcfError", "LaminationInvariant", "LegendreStep",
    "QuadSurd", "RegularCF", "RenderSpec", "SingularityData",
    "SurfaceInvariants", "TailDecision", "TracePredicate", "apply_gl2",
    "axis_of", "canonicalize", "cf_to_matrix", "cf_value", "classify",
    "decompose_to_cf_generators", "enumerate_delta", "eval_cf",
    "expand_rational", "expand_surd", "fixed_points", "in_hecke",
    "index_bruteforce", "invariant_equal", "invariant_of_stream",
    "legendre_stream", "mobius_apply", "polygon_areas", "render_axes",
    "select_next_term", "steps_from_terms", "surface_invariants",
    "tail_equivalent", "trace_formula", "validate_delta",
]
