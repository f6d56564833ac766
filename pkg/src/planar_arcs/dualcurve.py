"""
The dual curve of degree m*t through the tangents of an arc.

Here m = 2 for q odd and m = 1 for q even.  With E the first m*t + 2 arc
points in canonical order,

    G(X, Y) = sum over pairs a < b in E of
              f_a(b)^m * prod_{u in E - {a,b}} det(X, Y, u) / det(a, b, u),

and since ``det(X, Y, u) = u . (X x Y)`` this is a polynomial phi(Z) of
degree m*t evaluated at ``Z = X x Y``, i.e. Z1 = X2 Y3 - X3 Y2,
Z2 = X3 Y1 - X1 Y3, Z3 = X1 Y2 - X2 Y1.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .errors import ArcTooSmall
from .plane import det3
from .poly import HomPoly
from .report import Report
from .tangents import TangentSystem
from .ttform import TTForm


@dataclass(frozen=True)
class DualCurve:
    m: int
    phi: HomPoly  # in the dual variables Z
    E: tuple
    _G: list = field(default_factory=list, repr=False, compare=False)

    @property
    def degree(self):
        return self.phi.degree

    def at(self, y) -> HomPoly:
        """G(X, y) as a polynomial in X."""
        F = self.phi.field
        y1, y2, y3 = y
        n = F.neg
        # components of X x y as linear forms in X
        z1 = HomPoly.linear(F, (0, y3, n(y2)))
        z2 = HomPoly.linear(F, (n(y3), 0, y1))
        z3 = HomPoly.linear(F, (y2, n(y1), 0))
        return self.phi.compose([z1, z2, z3])

    @property
    def G(self) -> TTForm:
        """The (mt, mt)-form phi(X x Y), expanded."""
        if not self._G:
            self._G.append(_expand(self.phi))
        return self._G[0]


def _expand(phi: HomPoly) -> TTForm:
    # substitute Z_i by bilinear forms, tracking X and Y exponents separately
    F = phi.field
    one = F.neg(1)
    zs = [
        {((0, 1, 0), (0, 0, 1)): 1, ((0, 0, 1), (0, 1, 0)): one},
        {((0, 0, 1), (1, 0, 0)): 1, ((1, 0, 0), (0, 0, 1)): one},
        {((1, 0, 0), (0, 1, 0)): 1, ((0, 1, 0), (1, 0, 0)): one},
    ]

    def mul(a, b):
        out = {}
        for (ax, ay), c in a.items():
            for (bx, by), d in b.items():
                k = (tuple(i + j for i, j in zip(ax, bx)), tuple(i + j for i, j in zip(ay, by)))
                out[k] = F.add(out.get(k, 0), F.mul(c, d))
        return {k: v for k, v in out.items() if v}

    unit = {((0, 0, 0), (0, 0, 0)): 1}
    powers = []
    for v in range(3):
        top = max((m[v] for m in phi.terms), default=0)
        pw = [unit]
        for _ in range(top):
            pw.append(mul(pw[-1], zs[v]))
        powers.append(pw)
    total = {}
    for (i, j, k), c in phi.terms.items():
        for key, val in mul(mul(powers[0][i], powers[1][j]), powers[2][k]).items():
            total[key] = F.add(total.get(key, 0), F.mul(c, val))
    return TTForm(F, phi.degree, total)


def build_dual_curve(S: TangentSystem, E=None) -> DualCurve:
    A = S.arc
    F = A.field
    t = A.t
    m = 2 if F.q % 2 else 1
    need = m * t + 2
    if len(A) < need:
        raise ArcTooSmall(f"|A| = {len(A)} < m t + 2 = {need}")
    E = tuple(A.points[:need] if E is None else E)
    if len(E) != need:
        raise ArcTooSmall(f"interpolation set must have {need} points")
    phi = HomPoly(F, m * t)
    linear = {u: HomPoly.linear(F, u) for u in E}
    for a, b in combinations(E, 2):
        coef = F.pow(S.forms[a](b), m)
        term = HomPoly.constant(F, 1)
        for u in E:
            if u == a or u == b:
                continue
            d = det3(F, a, b, u)
            assert d, "three arc points are collinear"
            coef = F.div(coef, d)
            term = term * linear[u]
        phi = phi + term.scale(coef)
    return DualCurve(m, phi, E)


def verify_dual(S: TangentSystem, D: DualCurve) -> Report:
    """G(X, a) = f_a(X)^m for every arc point, and phi vanishes on every tangent."""
    A = S.arc
    for a in A.points:
        if D.at(a) != S.forms[a] ** D.m:
            return Report(False, ("identity", a), "G(X,a) != f_a(X)^m")
    for a in A.points:
        for form in S.factors[a]:
            if D.phi(form) != 0:
                return Report(False, ("tangent", a, form), "phi does not vanish on a tangent")
    return Report(True)
