import pytest

from planar_arcs import fixtures as fx
from planar_arcs.dualcurve import DualCurve, build_dual_curve, verify_dual
from planar_arcs.errors import ArcTooSmall
from planar_arcs.gf import GF, field_of_order
from planar_arcs.plane import all_points
from planar_arcs.poly import HomPoly
from planar_arcs.tangents import build_tangent_system


def test_dual_conic_in_pg25():
    F = GF(5)
    C = fx.conic_arc(F)
    S = build_tangent_system(C)
    D = build_dual_curve(S)
    assert D.m == 2 and D.degree == 2
    assert all(D.at(a) == S[a] ** 2 for a in C.points)
    assert verify_dual(S, D)
    # the tangents of x2^2 = x1 x3 are the points of the dual conic 4 z1 z3 = z2^2
    conic_dual = HomPoly(F, 2, {(1, 0, 1): 4, (0, 2, 0): F.neg(1)})
    assert D.phi.is_scalar_multiple_of(conic_dual)
    tangents = {line for a in C.points for line in S.factors[a]}
    assert tangents == {z for z in all_points(F) if D.phi(z) == 0}


def test_12arc_dual_sextic(arc12):
    S = build_tangent_system(arc12)
    D = build_dual_curve(S)
    assert D.degree == 6
    assert all(D.at(a) == S[a] ** 2 for a in arc12.points)
    assert verify_dual(S, D)


def test_10arc_dual(arc10):
    S = build_tangent_system(arc10)
    assert verify_dual(S, build_dual_curve(S))


def test_too_small_arc():
    # conic minus one point in PG(2,5): |A| = 5 = m t + 1 with t = 2
    A = fx.conic_arc(GF(5), remove=1)
    assert len(A) == 2 * A.t + 1
    with pytest.raises(ArcTooSmall):
        build_dual_curve(build_tangent_system(A))


def test_even_q_uses_m_equal_one():
    F = GF(2, 3)
    A = fx.conic_arc(F, remove=2)
    S = build_tangent_system(A)
    D = build_dual_curve(S)
    assert D.m == 1 and D.degree == A.t
    assert verify_dual(S, D)


def test_perturbed_curve_fails(arc12):
    S = build_tangent_system(arc12)
    D = build_dual_curve(S)
    m, c = D.phi.sorted_terms()[0]
    terms = dict(D.phi.terms)
    terms[m] = arc12.field.add(c, 1)
    bad = DualCurve(D.m, HomPoly(arc12.field, D.degree, terms), D.E)
    report = verify_dual(S, bad)
    assert not report
    kind, a = report.witness[:2]
    assert kind == "identity" and a in arc12.points


def test_expanded_form_matches_substitution(arc12):
    S = build_tangent_system(arc12)
    D = build_dual_curve(S)
    for y in arc12.points[:3]:
        assert D.G.at_y(y) == D.at(y)


def test_independent_of_interpolation_set():
    F = field_of_order(11)
    A = fx.conic_arc(F, remove=2)
    S = build_tangent_system(A)
    D1 = build_dual_curve(S)
    D2 = build_dual_curve(S, E=A.points[-(2 * A.t + 2):])
    assert D1.phi == D2.phi
