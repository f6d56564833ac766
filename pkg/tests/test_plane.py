import numpy as np
import pytest
from hypothesis import given, strategies as st

from planar_arcs.errors import CoincidentPoints, InvalidArc, PointNotInArc, ZeroVector
from planar_arcs.gf import GF
from planar_arcs.plane import (Arc, PlaneTables, Violation, all_points, cross, det3, dot,
                               find_violation, line_through, make_arc, normalize_point,
                               points_on_line, tangent_lines, tangent_points, validate_arc)
from planar_arcs import fixtures as fx

from .helpers import random_arc


# -- oracle examples ------------------------------------------------------------


def test_normalize_examples():
    F = GF(13)
    assert normalize_point(F, (2, 4, 6)) == (1, 2, 3)
    assert normalize_point(F, (0, 0, 5)) == (0, 0, 1)
    with pytest.raises(ZeroVector):
        normalize_point(F, (0, 0, 0))


def test_line_through_examples():
    F = GF(13)
    assert line_through(F, (1, 0, 0), (0, 1, 0)) == (0, 0, 1)
    L = line_through(F, (1, 1, 1), (1, 2, 3))
    assert L == (1, 11, 1)
    assert dot(F, L, (1, 1, 1)) == 0 and dot(F, L, (1, 2, 3)) == 0
    with pytest.raises(CoincidentPoints):
        line_through(F, (1, 0, 0), (1, 0, 0))


def test_tangent_examples(arc12):
    assert len(tangent_lines(arc12, (1, 1, 1))) == 3
    conic = fx.conic_arc(GF(5))
    assert len(conic) == 6
    assert all(len(tangent_lines(conic, a)) == 1 for a in conic.points)
    with pytest.raises(PointNotInArc):
        tangent_lines(conic, (0, 1, 0))


def test_validate_examples(arc12):
    F = GF(13)
    A = validate_arc(F, arc12.points)
    assert isinstance(A, Arc) and A.t == 3 and len(A) == 12
    bad = validate_arc(F, [(1, 0, 0), (0, 1, 0), (1, 1, 0)])
    assert isinstance(bad, Violation) and bad.kind == "collinear"
    assert set(bad.points) == {(1, 0, 0), (0, 1, 0), (1, 1, 0)}
    dup = validate_arc(F, [(1, 0, 0), (2, 0, 0), (0, 1, 0)])
    assert dup.kind == "duplicate"
    with pytest.raises(InvalidArc) as info:
        make_arc(F, [(1, 0, 0), (0, 1, 0), (1, 1, 0)])
    assert info.value.violation.kind == "collinear"


# -- properties ----------------------------------------------------------------------


@pytest.mark.parametrize("F", [GF(2), GF(5), GF(2, 2), GF(3, 2), GF(7)], ids=repr)
def test_plane_counts(F):
    q = F.q
    pts = all_points(F)
    assert len(pts) == len(set(pts)) == q * q + q + 1
    assert pts == sorted(pts)
    T = PlaneTables.of(F)
    # every line has q+1 points, every point lies on q+1 lines, two lines meet once
    assert (T.incidence.sum(axis=1) == q + 1).all()
    assert (T.incidence.sum(axis=0) == q + 1).all()
    inc = T.incidence.astype(np.int64)
    meet = inc @ inc.T
    assert (meet[~np.eye(len(pts), dtype=bool)] == 1).all()
    for form in pts[:5]:
        assert [x for x in pts if dot(F, form, x) == 0] == points_on_line(F, form)


@given(st.sampled_from([GF(7), GF(3, 2), GF(2, 3)]), st.data())
def test_join_is_incident(F, data):
    pts = all_points(F)
    a, b = data.draw(st.lists(st.sampled_from(pts), min_size=2, max_size=2, unique=True))
    L = line_through(F, a, b)
    assert dot(F, L, a) == 0 and dot(F, L, b) == 0
    c = data.draw(st.sampled_from(pts))
    assert (det3(F, a, b, c) == 0) == (dot(F, L, c) == 0)
    assert L == normalize_point(F, cross(F, a, b))


@pytest.mark.parametrize("q", [5, 7, 9, 11])
def test_random_arcs_tangent_count(q, seed):
    from planar_arcs.gf import field_of_order
    F = field_of_order(q)
    rng = np.random.default_rng(seed)
    for _ in range(10):
        A = random_arc(F, int(rng.integers(3, q + 2)), rng)
        assert find_violation(F, A.points) is None
        for a in A.points[:3]:
            tl = tangent_lines(A, a)
            assert len(tl) == A.t
            # tangent points: t lines of q points each besides a, pairwise disjoint
            tp = tangent_points(A, a)
            assert len(tp) == A.t * q
            assert not set(tp) & set(A.points)
