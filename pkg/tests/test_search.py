import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from planar_arcs import fixtures as fx
from planar_arcs.curvefinder import conic_fit
from planar_arcs.errors import BudgetExceeded, NotOddSquare, TooFewPoints
from planar_arcs.gf import GF, field_of_order
from planar_arcs.plane import make_arc, validate_arc, Arc
from planar_arcs.search import (canonical_form, classify, extensions, find_arc_on_conic_plus,
                                find_kestenband_spec, is_complete, kestenband)
from planar_arcs.socle import vanishing_space

from .helpers import random_arc, random_projectivity, transform_arc

FRAME = [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]


# -- extensions ----------------------------------------------------------------------


def test_extension_examples(arc12):
    assert extensions(arc12) == [] and is_complete(arc12)
    F = GF(7)
    full = fx.conic_arc(F)
    A = fx.conic_arc(F, remove=1)
    (removed,) = set(full.points) - set(A.points)
    assert removed in extensions(A)
    assert is_complete(make_arc(F, FRAME + [(1, 2, 3), (1, 3, 4)]))


def test_extensions_agree_with_brute_force(seed):
    F = GF(7)
    rng = np.random.default_rng(seed)
    from planar_arcs.plane import all_points
    for _ in range(5):
        A = random_arc(F, 5, rng)
        brute = [x for x in all_points(F) if x not in A and isinstance(validate_arc(F, A.points + (x,)), Arc)]
        assert extensions(A) == brute


# -- canonical form --------------------------------------------------------------------


def test_frame_is_its_own_canonical_form():
    F = GF(7)
    assert canonical_form(make_arc(F, FRAME)).points == tuple(sorted(FRAME))


def test_canonical_form_needs_four_points():
    with pytest.raises(TooFewPoints):
        canonical_form(make_arc(GF(7), FRAME[:3]))


@settings(max_examples=40)
@given(st.sampled_from([5, 7, 9, 11, 13]), st.integers(4, 10), st.integers(0, 2**32 - 1))
def test_canonical_form_is_projectively_invariant(q, size, s):
    F = field_of_order(q)
    rng = np.random.default_rng(s)
    A = random_arc(F, min(size, q + 1), rng)
    if len(A) < 4:
        return
    B = transform_arc(A, random_projectivity(F, rng))
    assert canonical_form(A) == canonical_form(B)
    # the canonical form is itself projectively equivalent to A (same size, an arc)
    C = canonical_form(A)
    assert len(C) == len(A) and canonical_form(C) == C


def test_canonical_form_separates_classes():
    # the two complete 6-arcs of PG(2,7) are inequivalent
    res = classify(GF(7), 6)
    a, b = res.representatives
    assert canonical_form(a) != canonical_form(b)


# -- classification ----------------------------------------------------------------------


@pytest.mark.parametrize("q,size,count", [(7, 6, 2), (8, 6, 3), (9, 8, 1), (9, 7, 1), (11, 10, 1)])
def test_classification_counts(q, size, count):
    res = classify(field_of_order(q), size, complete_only=True)
    assert res.count == count
    assert all(is_complete(A) and len(A) == size for A in res.representatives)


def test_classification_q11_size9():
    assert classify(GF(11), 9).count == 3


def test_classification_independent_of_jobs():
    a = classify(GF(7), 6, jobs=1)
    b = classify(GF(7), 6, jobs=2)
    assert a.to_json() == b.to_json()


def test_classification_independent_of_modulus():
    F, G = GF(3, 2, (1, 0, 1)), GF(3, 2, (2, 1, 1))
    for size in (6, 7, 8):
        assert classify(F, size).count == classify(G, size).count
        assert classify(F, size, complete_only=False).level_counts == \
            classify(G, size, complete_only=False).level_counts


@pytest.mark.parametrize("q", [5, 7, 9])
def test_ovals_are_conics(q):
    F = field_of_order(q)
    res = classify(F, q + 1, complete_only=False)
    assert res.count == 1
    assert all(conic_fit(F, A.points) is not None for A in res.representatives)


def test_budget():
    with pytest.raises(BudgetExceeded):
        classify(GF(2, 4), 10)
    with pytest.raises(TooFewPoints):
        classify(GF(7), 3)


# -- Kestenband arcs and the 17-arc search -------------------------------------------


@pytest.mark.parametrize("q,size", [(9, 7), (25, 21)])
def test_kestenband(q, size):
    F = field_of_order(q)
    spec = find_kestenband_spec(F)
    assert spec.is_hermitian() and spec.char_poly_irreducible()
    A = kestenband(F, spec)
    assert len(A) == size and isinstance(validate_arc(F, A.points), Arc)
    assert is_complete(A)
    V = vanishing_space(F, A.points, spec.root + 1)
    assert all(f in V for f in spec.forms())


def test_kestenband_needs_odd_square():
    for q in (7, 4, 16):
        with pytest.raises(NotOddSquare):
            kestenband(field_of_order(q))


def test_frozen_14arc_is_reproduced(arc14):
    F = GF(17)
    A = find_arc_on_conic_plus(F, 14, 10)
    assert A == arc14 and is_complete(A)
    assert conic_fit(F, A.points) is None
