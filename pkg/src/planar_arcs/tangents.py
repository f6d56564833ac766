"""
Tangent forms of an arc and the scaled lemma of tangents.

For an arc point a, f_a is the product of the t linear forms of the tangents
at a.  The forms are scaled against a base point e so that
``f_a(e) = (-1)**(t+1) * f_e(a)``; f_e itself is normalised to have leading
coefficient 1 in the canonical monomial order.
"""

from dataclasses import dataclass

from .errors import DeficiencyZero, PointNotInArc
from .plane import Arc, tangent_lines
from .poly import HomPoly
from .report import Report


def sign(F, t):
    """(-1)**(t+1) as a field element."""
    return 1 if (t + 1) % 2 == 0 else F.neg(1)


@dataclass(frozen=True)
class TangentSystem:
    arc: Arc
    e: tuple
    forms: dict  # point -> HomPoly of degree t
    factors: dict  # point -> tuple of tangent forms

    @property
    def t(self):
        return self.arc.t

    @property
    def field(self):
        return self.arc.field

    def __getitem__(self, a):
        return self.forms[a]

    def with_form(self, a, f):
        """Copy with ``f_a`` replaced; used to build broken fixtures."""
        forms = dict(self.forms)
        forms[a] = f
        return TangentSystem(self.arc, self.e, forms, self.factors)


def _product(F, linear_forms):
    f = HomPoly.constant(F, 1)
    for form in linear_forms:
        f = f * HomPoly.linear(F, form)
    return f


def build_tangent_system(A: Arc, e=None) -> TangentSystem:
    F = A.field
    t = A.t
    if t < 1:
        raise DeficiencyZero(f"arc of size {len(A)} in PG(2,{F.q}) has no tangents")
    if e is None:
        e = A.points[0]
    if e not in A:
        raise PointNotInArc(e)
    factors = {a: tuple(tangent_lines(A, a)) for a in A.points}
    raw = {a: _product(F, factors[a]) for a in A.points}
    f_e = raw[e].normalized()
    s = sign(F, t)
    forms = {e: f_e}
    for a in A.points:
        if a == e:
            continue
        target = F.mul(s, f_e(a))
        forms[a] = raw[a].scale(F.div(target, raw[a](e)))
    return TangentSystem(A, e, forms, factors)


def check_lemma_of_tangents(S: TangentSystem) -> Report:
    """Check ``f_x(y) = (-1)**(t+1) f_y(x)`` over all ordered pairs of arc points."""
    F = S.field
    s = sign(F, S.t)
    pts = S.arc.points
    values = {a: S.forms[a].evaluate_many(pts).tolist() for a in pts}
    for i, x in enumerate(pts):
        for j, y in enumerate(pts):
            if i != j and values[x][j] != F.mul(s, values[y][i]):
                return Report(False, (x, y), f"f_x(y)={values[x][j]} but f_y(x)={values[y][i]}")
    return Report(True)
