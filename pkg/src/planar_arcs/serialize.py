"""
JSON wire formats.

* field element: list of h ints, constant term first;
* arc: ``{"p", "h", "modulus", "points": [[fe, fe, fe], ...]}``;
* polynomial: ``{"degree", "terms": [{"e": [i,j,k], "c": fe}, ...]}``, terms in
  graded-lex order, optional ``"variables": "dual"``;
* (t,t)-form: ``{"t", "terms": [{"ex": [...], "ey": [...], "c": fe}, ...]}``.
"""

import json

from .gf import GF
from .plane import Arc, normalize_point, make_arc
from .poly import HomPoly, monomials


def fe_to_json(F: GF, a):
    return F.coeffs(a)


def fe_from_json(F: GF, value):
    return F.element(value)


def field_to_json(F: GF):
    return {"p": F.p, "h": F.h, "modulus": list(F.modulus)}


def field_from_json(doc):
    modulus = doc.get("modulus")
    if modulus is not None and int(doc.get("h", 1)) == 1 and len(modulus) != 2:
        modulus = None
    return GF(int(doc["p"]), int(doc.get("h", 1)), modulus)


def point_to_json(F: GF, x):
    return [fe_to_json(F, c) for c in x]


def point_from_json(F: GF, value):
    return normalize_point(F, [fe_from_json(F, c) for c in value])


def arc_to_json(A: Arc):
    doc = field_to_json(A.field)
    doc["points"] = [point_to_json(A.field, x) for x in A.points]
    return doc


def points_from_json(doc):
    F = field_from_json(doc)
    return F, [[fe_from_json(F, c) for c in x] for x in doc["points"]]


def arc_from_json(doc) -> Arc:
    F, pts = points_from_json(doc)
    return make_arc(F, pts)


def poly_to_json(f: HomPoly, dual=False):
    doc = {"degree": f.degree,
           "terms": [{"e": list(m), "c": fe_to_json(f.field, c)} for m, c in f.sorted_terms()]}
    if dual:
        doc["variables"] = "dual"
    return doc


def poly_from_json(F: GF, doc) -> HomPoly:
    return HomPoly(F, int(doc["degree"]), {tuple(t["e"]): fe_from_json(F, t["c"]) for t in doc["terms"]})


def ttform_to_json(G):
    F = G.field
    t = G.t
    terms = []
    for ex in monomials(t):
        for ey in monomials(t):
            c = G.terms.get((ex, ey))
            if c:
                terms.append({"ex": list(ex), "ey": list(ey), "c": fe_to_json(F, c)})
    return {"t": t, "terms": terms}


def ttform_from_json(F: GF, doc):
    from .ttform import TTForm
    return TTForm(F, int(doc["t"]),
                  {(tuple(x["ex"]), tuple(x["ey"])): fe_from_json(F, x["c"]) for x in doc["terms"]})


def dumps(doc):
    """Deterministic JSON text."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def load_arc(path) -> Arc:
    with open(path) as fh:
        return arc_from_json(json.load(fh))
