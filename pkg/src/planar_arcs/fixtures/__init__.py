"""
Example arcs shipped with the package.

The JSON files in this directory use the arc wire format and can be fed to the
command line tool directly.  ``arc14_q17.json`` was produced once by
:func:`planar_arcs.search.find_arc_on_conic_plus` and frozen here.
"""

import json
from importlib import resources

from ..gf import GF
from ..plane import make_arc
from ..serialize import arc_from_json

FILES = {
    "arc10_q11": "arc10_q11.json",
    "arc12_q13": "arc12_q13.json",
    "arc14_q17": "arc14_q17.json",
    "arc24_q29": "arc24_q29.json",
}


def path(name):
    return resources.files(__name__).joinpath(FILES[name])


def load(name):
    with path(name).open() as fh:
        return arc_from_json(json.load(fh))


def arc12():
    """The 12-arc of PG(2,13) on three quartics."""
    F = GF(13)
    pts = [(3, 4, 1), (-3, 4, 1), (3, -4, 1), (-3, -4, 1), (4, 3, 1), (4, -3, 1), (-4, 3, 1),
           (-4, -3, 1), (1, 1, 1), (1, -1, 1), (-1, 1, 1), (-1, -1, 1)]
    return make_arc(F, [[c % 13 for c in x] for x in pts])


def arc10():
    """The complete 10-arc of PG(2,11)."""
    F = GF(11)
    pts = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 8, 7), (1, 5, 2), (1, 3, 8), (1, 4, 1), (1, 7, 6),
           (1, 9, 4), (1, 10, 5)]
    return make_arc(F, pts)


def quartic24():
    """x1^3 x2 + x2^3 x3 + x3^3 x1 over GF(29)."""
    from ..poly import HomPoly
    F = GF(29)
    return HomPoly(F, 4, {(3, 1, 0): 1, (0, 3, 1): 1, (1, 0, 3): 1})


def arc24():
    """The 24 points of PG(2,29) on the Klein quartic."""
    from ..plane import all_points
    h = quartic24()
    F = h.field
    return make_arc(F, [x for x in all_points(F) if h(x) == 0])


def arc14():
    """A complete 14-arc of PG(2,17) with 10 points on a conic."""
    return load("arc14_q17")


def conic_arc(F, remove=0):
    """Points (1, s, s^2) and (0, 0, 1) of the conic x2^2 = x1 x3, minus the
    last ``remove`` of them in canonical order."""
    pts = sorted([(0, 0, 1)] + [(1, s, F.mul(s, s)) for s in range(F.q)])
    if remove:
        pts = pts[:-remove]
    return make_arc(F, pts)


def sporadic():
    """The four complete arcs of odd order < 32 not on a conic with |A| >= 2d+1."""
    return {"arc10_q11": arc10(), "arc12_q13": arc12(), "arc14_q17": arc14(), "arc24_q29": arc24()}
