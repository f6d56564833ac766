"""
planar_arcs: exact computations with arcs in the projective plane PG(2,q).

The pipeline, in the order the modules build on each other:

* :mod:`~planar_arcs.gf` and :mod:`~planar_arcs.plane` -- field arithmetic,
  points, lines and arcs;
* :mod:`~planar_arcs.tangents` -- scaled tangent forms and the lemma of tangents;
* :mod:`~planar_arcs.dualcurve` -- the curve of degree m*t through all tangents;
* :mod:`~planar_arcs.socle` -- vanishing spaces and socles;
* :mod:`~planar_arcs.ttform` -- the (t,t)-form F;
* :mod:`~planar_arcs.curvefinder` -- low degree curves through the arc;
* :mod:`~planar_arcs.search` -- extension, canonical forms, classification.
"""

from .bounds import Bounds, compute_bounds
from .curvefinder import (ConicContainment, CurveCertificate, almost_phi, conic_fit,
                          coprime_certificate, coprime_combination, hyperbolic_test, rho_system)
from .dualcurve import DualCurve, build_dual_curve, verify_dual
from .errors import ArcsError, InvalidArc
from .gf import GF, field_of_order
from .plane import Arc, Violation, all_points, make_arc, tangent_lines, validate_arc
from .poly import HomPoly
from .polygcd import trivariate_gcd
from .search import canonical_form, classify, extensions, is_complete, kestenband
from .socle import Socle, VanishingSpace, socle, socle_chain, vanishing_space
from .tangents import TangentSystem, build_tangent_system, check_lemma_of_tangents
from .ttform import TTForm, build_F, select_S, verify_F

__version__ = "0.1.0"

__all__ = [
    "Arc", "ArcsError", "Bounds", "ConicContainment", "CurveCertificate", "DualCurve", "GF",
    "HomPoly", "InvalidArc", "Socle", "TTForm", "TangentSystem", "VanishingSpace", "Violation",
    "all_points", "almost_phi", "build_F", "build_dual_curve", "build_tangent_system",
    "canonical_form", "check_lemma_of_tangents", "classify", "compute_bounds", "conic_fit",
    "coprime_certificate", "coprime_combination", "extensions", "field_of_order",
    "hyperbolic_test", "is_complete", "kestenband", "make_arc", "rho_system", "select_S", "socle",
    "socle_chain", "tangent_lines", "trivariate_gcd", "validate_arc", "vanishing_space",
    "verify_F", "verify_dual",
]
