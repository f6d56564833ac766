import numpy as np
import pytest

from planar_arcs import fixtures as fx
from planar_arcs.errors import DeficiencyZero, PointNotInArc
from planar_arcs.gf import GF, field_of_order
from planar_arcs.plane import dot, make_arc
from planar_arcs.poly import HomPoly
from planar_arcs.tangents import build_tangent_system, check_lemma_of_tangents, sign

from .helpers import random_arc


def test_12arc_forms_are_symmetric(arc12):
    S = build_tangent_system(arc12)
    assert S.t == 3 and sign(arc12.field, 3) == 1
    pts = arc12.points
    pairs = [(x, y) for i, x in enumerate(pts) for y in pts[i + 1:]]
    assert len(pairs) == 66
    assert all(S[x](y) == S[y](x) for x, y in pairs)


def test_conic_forms_are_tangent_lines():
    F = GF(7)
    C = fx.conic_arc(F)
    S = build_tangent_system(C)
    assert S.t == 1
    for a in C.points:
        f = S[a]
        assert f.degree == 1
        (line,) = S.factors[a]
        assert f.is_scalar_multiple_of(HomPoly.linear(F, line))
        # the tangent meets the conic only at a
        assert [x for x in C.points if f(x) == 0] == [a]


def test_hyperoval_has_no_tangents():
    F = GF(2, 2)
    conic = [(0, 0, 1)] + [(1, s, F.mul(s, s)) for s in range(4)]
    H = make_arc(F, conic + [(0, 1, 0)])  # conic plus its nucleus
    assert H.t == 0
    with pytest.raises(DeficiencyZero):
        build_tangent_system(H)


def test_base_point_must_lie_on_arc(arc12):
    with pytest.raises(PointNotInArc):
        build_tangent_system(arc12, e=(0, 0, 1))


def test_base_form_normalisation(arc10):
    S = build_tangent_system(arc10)
    assert S.e == arc10.points[0]
    assert S[S.e].leading()[1] == 1


@pytest.mark.parametrize("name", ["arc12", "arc10"])
def test_lemma_passes_on_examples(name):
    A = getattr(fx, name)()
    assert check_lemma_of_tangents(build_tangent_system(A))


def test_lemma_detects_mutation(arc12):
    S = build_tangent_system(arc12)
    a = arc12.points[5]
    broken = S.with_form(a, S[a].scale(2))
    report = check_lemma_of_tangents(broken)
    assert not report
    assert a in report.witness


@pytest.mark.parametrize("q", [5, 7, 8, 9, 11, 13])
def test_lemma_on_random_arcs(q, seed):
    F = field_of_order(q)
    rng = np.random.default_rng(seed + q)
    for _ in range(5):
        A = random_arc(F, int(rng.integers(4, q + 2)), rng)
        if A.t == 0:
            continue
        e = A.points[int(rng.integers(len(A)))]
        S = build_tangent_system(A, e)
        assert check_lemma_of_tangents(S)
        # each f_a vanishes exactly on the tangents through a
        for a in A.points[:2]:
            zeros = {x for x in A.points if S[a](x) == 0}
            assert zeros == {a}
            assert all(dot(F, line, a) == 0 for line in S.factors[a])
