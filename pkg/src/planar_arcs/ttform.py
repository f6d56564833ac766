"""
The (t,t)-form of an arc.

A (t,t)-form F(X, Y) is bihomogeneous of degree t in X and in Y.  For an arc
of deficiency t there is one with ``F(X, y) = f_y(X)`` for every y in a large
subset S of the arc and ``F(X, y) = f_y(X)`` modulo the degree-t curves through
the arc for every arc point y.  :func:`build_F` finds it as a nonzero solution
of a homogeneous linear system on its ``C(t+2,2)**2`` coefficients.
"""

from dataclasses import dataclass
from math import comb

import numpy as np

from .bounds import floor_log
from .errors import NoSolution, ScalingDegenerate
from .gf import GF
from .linalg import matmul, nullspace
from .plane import Arc, tangent_points
from .poly import HomPoly, monomial_index, monomial_matrix, monomials
from .report import Report
from .socle import Socle, socle, vanishing_space
from .tangents import TangentSystem, sign


class TTForm:
    """``terms`` maps ``(ex, ey)`` exponent-triple pairs to nonzero coefficients."""

    def __init__(self, field: GF, t, terms=None):
        self.field = field
        self.t = t
        self.terms = {(tuple(a), tuple(b)): int(c) for (a, b), c in (terms or {}).items() if c}
        for a, b in self.terms:
            if sum(a) != t or sum(b) != t:
                raise ValueError(f"term {(a, b)} is not of bidegree ({t},{t})")

    @classmethod
    def from_matrix(cls, F, t, C):
        mons = monomials(t)
        terms = {}
        for i, j in zip(*np.nonzero(C)):
            terms[(mons[i], mons[j])] = int(C[i, j])
        return cls(F, t, terms)

    def matrix(self):
        """Coefficient matrix, rows indexed by X-monomials, columns by Y-monomials."""
        idx = monomial_index(self.t)
        n = len(idx)
        C = np.zeros((n, n), dtype=np.int64)
        for (a, b), c in self.terms.items():
            C[idx[a], idx[b]] = c
        return C

    def __eq__(self, other):
        return (isinstance(other, TTForm) and self.field == other.field and self.t == other.t
                and self.terms == other.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"TTForm(t={self.t}, {len(self.terms)} terms)"

    def scale(self, c):
        F = self.field
        return TTForm(F, self.t, {k: F.mul(c, v) for k, v in self.terms.items()})

    def normalized_on(self, ex, ey):
        """Scale so that the coefficient of X^ex Y^ey is 1."""
        c = self.terms.get((tuple(ex), tuple(ey)), 0)
        if not c:
            raise ValueError(f"coefficient of {(ex, ey)} is zero")
        return self.scale(self.field.inv(c))

    def at_y(self, y) -> HomPoly:
        """F(X, y) as a polynomial in X."""
        F = self.field
        v = monomial_matrix(F, self.t, [y])[:, 0]
        return HomPoly.from_vector(F, self.t, matmul(F, self.matrix(), v))

    def at_x(self, x) -> HomPoly:
        """F(x, Y) as a polynomial in Y."""
        F = self.field
        v = monomial_matrix(F, self.t, [x])[:, 0]
        return HomPoly.from_vector(F, self.t, matmul(F, self.matrix().T, v))

    def __call__(self, x, y):
        return self.at_y(y)(x)

    def values(self, xs, ys):
        """Matrix of F(x, y) over x in xs, y in ys."""
        F = self.field
        MX = monomial_matrix(F, self.t, list(xs))
        MY = monomial_matrix(F, self.t, list(ys))
        return matmul(F, matmul(F, MX.T, self.matrix()), MY)


@dataclass(frozen=True)
class TangentPointSet:
    owner: tuple
    points: tuple


def select_S(A: Arc, e=None):
    """A t-socle S0 (containing e) and a superset S with
    ``|S - S0| = min(C(t+2,2), |A - S0|)``.

    The extra points start with those of the socle chain up to degree
    t + p**floor(log_p t), then follow canonical order.
    """
    F = A.field
    t = A.t
    if e is None:
        e = A.points[0]
    S0 = socle(F, A.points, t, seed=[e])
    k = min(comb(t + 2, 2), len(A) - len(S0))
    pe = F.p ** floor_log(F.p, t)
    chain = [S0]
    for j in range(1, pe + 1):
        chain.append(socle(F, A.points, t + j, seed=chain[-1].points))
    s0 = set(S0.points)
    extra = [x for x in chain[-1].points if x not in s0]
    extra += [x for x in A.points if x not in s0 and x not in set(extra)]
    S = tuple(S0.points) + tuple(extra[:k])
    return S0, S


def tangent_point_sets(A: Arc, S0: Socle, S):
    """T(y) for every y in S."""
    F = A.field
    t = A.t
    s0 = list(S0.points)
    out = {}
    for y in S:
        tan = tangent_points(A, y)
        if y in set(s0):
            T = socle(F, tan, t).points
        else:
            T = socle(F, s0 + tan, t, seed=s0).points[len(s0):]
        out[y] = TangentPointSet(y, tuple(T))
    return out


def condition_matrix(A: Arc, sys: TangentSystem, S0: Socle, S, Tsets=None):
    """Rows of the homogeneous system whose solutions are the candidate F."""
    F = A.field
    t = A.t
    e = sys.e
    s = sign(F, t)
    if Tsets is None:
        Tsets = tangent_point_sets(A, S0, S)

    def mono(x):
        return monomial_matrix(F, t, [x])[:, 0]

    def outer(u, v):
        return F.MUL[u[:, None], v[None, :]].ravel()

    rows = []
    me = mono(e)
    for z in Tsets[e].points:
        rows.append(outer(mono(z), me))
    s0 = set(S0.points)
    for y in S0.points:
        if y == e:
            continue
        my = mono(y)
        for z in Tsets[y].points:
            rows.append(outer(mono(z), my))
        rows.append(F.SUB[outer(my, me), F.MUL[s, outer(me, my)]])
    for y in S:
        if y in s0:
            continue
        my = mono(y)
        for z in Tsets[y].points:
            rows.append(outer(mono(z), my))
    n = comb(t + 2, 2)
    return np.array(rows, dtype=np.int64).reshape(-1, n * n)


def build_F(A: Arc, sys: TangentSystem, S0=None, S=None) -> TTForm:
    F = A.field
    t = A.t
    n = comb(t + 2, 2)
    if S0 is None or S is None:
        S0, S = select_S(A, sys.e)
    M = condition_matrix(A, sys, S0, S)
    if len(M) > n * n - 1:
        raise NoSolution(f"{len(M)} conditions on {n * n} unknowns")
    N = nullspace(F, M, n * n)
    if not len(N):
        raise NoSolution("condition system has only the zero solution")
    f_e = sys.forms[sys.e]
    lead_m, lead_c = f_e.leading()
    for row in N:
        G = TTForm.from_matrix(F, t, row.reshape(n, n))
        ge = G.at_y(sys.e)
        if ge.is_zero():
            continue
        if not ge.is_scalar_multiple_of(f_e):
            raise NoSolution("F(X,e) is not a multiple of f_e")
        return G.scale(F.div(lead_c, ge.terms[lead_m]))
    raise ScalingDegenerate("every solution has F(X,e) = 0")


def verify_F(A: Arc, sys: TangentSystem, G: TTForm, S=None) -> Report:
    """Check F(X,y) = f_y on S, F(X,y) = f_y mod the degree-t curves on A, and the symmetry."""
    F = A.field
    t = A.t
    if S is None:
        S = select_S(A, sys.e)[1]
    for y in S:
        if G.at_y(y) != sys.forms[y]:
            return Report(False, ("exact", y), "F(X,y) differs from f_y")
    V = vanishing_space(F, A.points, t)
    for y in A.points:
        if (G.at_y(y) - sys.forms[y]) not in V:
            return Report(False, ("modulo", y), "F(X,y) - f_y does not vanish on the arc")
    s = sign(F, t)
    vals = G.values(A.points, A.points)
    bad = np.nonzero(vals != F.MUL[s, vals.T])
    if len(bad[0]):
        i, j = bad[0][0], bad[1][0]
        return Report(False, ("symmetry", A.points[i], A.points[j]), "F(x,y) != (-1)^(t+1) F(y,x)")
    return Report(True)
