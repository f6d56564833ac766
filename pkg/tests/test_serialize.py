import json

import numpy as np
from hypothesis import given, strategies as st

from planar_arcs import fixtures as fx
from planar_arcs.gf import GF
from planar_arcs.serialize import (arc_from_json, arc_to_json, dumps, field_from_json, field_to_json,
                                   poly_from_json, poly_to_json, ttform_from_json, ttform_to_json)
from planar_arcs.tangents import build_tangent_system
from planar_arcs.ttform import build_F

from .helpers import random_poly


def test_fixture_files_roundtrip():
    for name in fx.FILES:
        A = fx.load(name)
        text = fx.path(name).read_text()
        assert arc_from_json(json.loads(dumps(arc_to_json(A)))) == A
        assert arc_from_json(json.loads(text)) == A


def test_fields_roundtrip():
    for F in (GF(13), GF(3, 2), GF(3, 2, (2, 1, 1)), GF(2, 3)):
        assert field_from_json(field_to_json(F)) == F


@given(st.sampled_from([GF(5), GF(3, 2), GF(2, 3)]), st.integers(0, 5), st.integers(0, 1000))
def test_poly_roundtrip(F, degree, s):
    f = random_poly(F, degree, np.random.default_rng(s), density=0.5)
    assert poly_from_json(F, json.loads(dumps(poly_to_json(f)))) == f


def test_ttform_roundtrip(arc12):
    G = build_F(arc12, build_tangent_system(arc12))
    assert ttform_from_json(arc12.field, json.loads(dumps(ttform_to_json(G)))) == G


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'
