"""
Points, lines and arcs of the Desarguesian plane PG(2,q).

A point is a triple of field elements (ints, see :mod:`planar_arcs.gf`) whose
first nonzero entry is 1.  A line is stored only through its linear form,
normalised the same way, so that incidence is a dot product.  Triples compare
lexicographically on the element encoding and this is the canonical order
used for every otherwise arbitrary choice in the package.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple

import numpy as np

from .errors import CoincidentPoints, InvalidArc, PointNotInArc, ZeroVector
from .gf import GF

Point = tuple  # (x1, x2, x3), normalised


def normalize_point(F: GF, raw) -> Point:
    raw = tuple(int(c) for c in raw)
    for c in raw:
        if c:
            inv = F.inv(c)
            return tuple(F.mul(inv, x) for x in raw)
    raise ZeroVector(raw)


normalize_form = normalize_point


def dot(F: GF, u, v):
    return F.add(F.add(F.mul(u[0], v[0]), F.mul(u[1], v[1])), F.mul(u[2], v[2]))


def cross(F: GF, u, v):
    m, s = F.mul, F.sub
    return (
        s(m(u[1], v[2]), m(u[2], v[1])),
        s(m(u[2], v[0]), m(u[0], v[2])),
        s(m(u[0], v[1]), m(u[1], v[0])),
    )


def det3(F: GF, a, b, c):
    return dot(F, a, cross(F, b, c))


def line_through(F: GF, a, b):
    """Normalised linear form of the line joining two distinct points."""
    c = cross(F, a, b)
    if not any(c):
        raise CoincidentPoints((a, b))
    return normalize_form(F, c)


def all_points(F: GF):
    """Every point of PG(2,q), in canonical order."""
    q = F.q
    pts = [(0, 0, 1)]
    pts += [(0, 1, z) for z in range(q)]
    pts += [(1, y, z) for y in range(q) for z in range(q)]
    return pts


def points_on_line(F: GF, form):
    """Points of PG(2,q) in the kernel of ``form``, canonical order."""
    a, b, c = form
    pts = []
    if c:
        # x3 = -(a x1 + b x2) / c
        ic = F.neg(F.inv(c))
        for base in [(0, 1)] + [(1, y) for y in range(F.q)]:
            x3 = F.mul(ic, F.add(F.mul(a, base[0]), F.mul(b, base[1])))
            pts.append(normalize_point(F, (base[0], base[1], x3)))
        # (0,0,1) is on the line only if c = 0, so not here
    else:
        pts = [x for x in all_points(F) if dot(F, form, x) == 0]
    return sorted(pts)


class PlaneTables:
    """Integer indexing of the points and lines of PG(2,q) for vectorised work.

    Points and lines are numbered in canonical order.  ``index`` maps a
    normalised triple to its number, ``code`` is a dense ``q**3`` lookup from
    ``x1*q*q + x2*q + x3`` (normalised) to the number.
    """

    _cache = {}

    def __init__(self, F: GF):
        self.F = F
        q = F.q
        self.points = all_points(F)
        self.n = len(self.points)
        self.coords = np.array(self.points, dtype=np.int64)
        self.index = {x: i for i, x in enumerate(self.points)}
        self.code = np.full(q**3, -1, dtype=np.int64)
        for i, (a, b, c) in enumerate(self.points):
            self.code[(a * q + b) * q + c] = i
        # incidence: lines indexed like points (dual coordinates)
        P = self.coords
        dots = F.ADD[F.ADD[F.MUL[P[:, None, 0], P[None, :, 0]], F.MUL[P[:, None, 1], P[None, :, 1]]],
                     F.MUL[P[:, None, 2], P[None, :, 2]]]
        self.incidence = dots == 0  # [line, point]
        self.line_points = [np.nonzero(row)[0] for row in self.incidence]
        # line through two points
        self.join = np.full((self.n, self.n), -1, dtype=np.int64)
        for li, pts in enumerate(self.line_points):
            self.join[np.ix_(pts, pts)] = li
        np.fill_diagonal(self.join, -1)

    @classmethod
    def of(cls, F: GF):
        key = F._key()
        if key not in cls._cache:
            cls._cache[key] = cls(F)
        return cls._cache[key]

    def normalize_rows(self, X):
        """Normalise an array of nonzero coordinate rows and return their indices."""
        F = self.F
        q = F.q
        X = np.asarray(X, dtype=np.int64)
        lead = np.where(X[..., 0] != 0, X[..., 0], np.where(X[..., 1] != 0, X[..., 1], X[..., 2]))
        inv = F.INV[lead]
        Y = F.MUL[inv[..., None], X]
        return self.code[(Y[..., 0] * q + Y[..., 1]) * q + Y[..., 2]]


class Violation(NamedTuple):
    kind: str  # "duplicate" or "collinear"
    points: tuple

    def to_json(self, F):
        from .serialize import point_to_json
        return {"violation": self.kind, "points": [point_to_json(F, x) for x in self.points]}


@dataclass(frozen=True)
class Arc:
    """A planar arc; points are kept in canonical order."""

    field: GF
    points: tuple
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(sorted(self.points)))
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(self.points)})

    @property
    def q(self):
        return self.field.q

    @property
    def t(self):
        return self.field.q + 2 - len(self.points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, x):
        return x in self._index

    def position(self, x):
        return self._index[x]


def find_violation(F: GF, pts):
    """First duplicate pair or collinear triple in ``pts``, or None."""
    seen = {}
    for x in pts:
        if x in seen:
            return Violation("duplicate", (x, x))
        seen[x] = True
    ordered = sorted(pts)
    for a, b in combinations(ordered, 2):
        ab = cross(F, a, b)
        for c in ordered:
            if c > b and dot(F, ab, c) == 0:
                return Violation("collinear", (a, b, c))
    return None


def validate_arc(F: GF, pts):
    """Return an :class:`Arc`, or a :class:`Violation` witness if ``pts`` is not an arc."""
    pts = [normalize_point(F, x) for x in pts]
    bad = find_violation(F, pts)
    if bad is not None:
        return bad
    if len(pts) > F.q + 2:
        # cannot happen for a genuine arc; keeps t >= 0 explicit
        return Violation("collinear", tuple(pts[:3]))
    return Arc(F, tuple(pts))


def make_arc(F: GF, pts):
    """Like :func:`validate_arc` but raises :class:`InvalidArc` on failure."""
    result = validate_arc(F, pts)
    if isinstance(result, Violation):
        raise InvalidArc(result)
    return result


def tangent_lines(A: Arc, a):
    """The t tangent forms at the arc point ``a``, canonical order."""
    F = A.field
    if a not in A:
        raise PointNotInArc(a)
    bisecants = {line_through(F, a, b) for b in A.points if b != a}
    # the pencil through a is the dual line with coordinates a
    pencil = points_on_line(F, a)
    return sorted(set(pencil) - bisecants)


def tangent_points(A: Arc, a):
    """Points on the tangents at ``a``, excluding ``a``, canonical order."""
    F = A.field
    pts = set()
    for form in tangent_lines(A, a):
        pts.update(points_on_line(F, form))
    pts.discard(a)
    return sorted(pts)
