"""
Low degree curves through an arc.

The chain is: (t,t)-form F  ->  the coefficients rho_w(Y) of X^w in
F(X+Y, Y) - F(X, Y) for t - p^eps <= |w| <= t-1  ->  their gcd phi together
with the degree-t curves through the arc  ->  either two coprime curves of
degree at most t + p^eps containing the arc, or a form hyperbolic on the arc
(which forces the arc onto a conic).  :func:`coprime_certificate` runs the
chain and then searches the vanishing spaces for a coprime pair.
"""

from dataclasses import dataclass, field
from itertools import product

from .bounds import Bounds, compute_bounds
from .errors import (AllGeneratorsZero, EvenCharacteristic, NoLambda, NotCoprime, NotFound,
                     TooFewPoints, ZeroPolynomial)
from .gf import GF
from .plane import Arc, all_points, line_through
from .poly import HomPoly, binom_mod
from .polygcd import gcd_many, trivariate_gcd
from .report import Report
from .socle import VanishingSpace, vanishing_space
from .tangents import build_tangent_system
from .ttform import TTForm, build_F, select_S

__all__ = ["Bounds", "compute_bounds", "RhoSystem", "rho_system", "trivariate_gcd", "almost_phi",
           "coprime_combination", "hyperbolic_test", "conic_fit", "CurveCertificate",
           "ConicContainment", "coprime_certificate", "common_zeros"]


@dataclass(frozen=True)
class RhoSystem:
    t: int
    W: tuple
    rhos: dict  # w -> HomPoly in Y of degree 2t - |w|


def rho_index_set(t, pe):
    return tuple((i, j, k) for s in range(max(t - pe, 0), t)
                 for i in range(s, -1, -1) for j in range(s - i, -1, -1) for k in [s - i - j]
                 if max(i, j, k) <= t - 1)


def rho_system(G: TTForm, B: Bounds) -> RhoSystem:
    """Coefficients of X^w in G(X+Y, Y) - G(X, Y) for w in W."""
    F = G.field
    t = G.t
    p = F.p
    W = rho_index_set(t, B.pe)
    rhos = {}
    for w in W:
        terms = {}
        for (a, b), c in G.terms.items():
            if a[0] < w[0] or a[1] < w[1] or a[2] < w[2]:
                continue
            k = binom_mod(a[0], w[0], p) * binom_mod(a[1], w[1], p) * binom_mod(a[2], w[2], p) % p
            if not k:
                continue
            m = tuple(a[i] - w[i] + b[i] for i in range(3))
            terms[m] = F.add(terms.get(m, 0), F.mul(F.from_int(k), c))
        rhos[w] = HomPoly(F, 2 * t - sum(w), terms)
    return RhoSystem(t, W, rhos)


def almost_phi(A: Arc, R: RhoSystem, V: VanishingSpace) -> HomPoly:
    """gcd of all rho_w and of the degree-t curves through the arc."""
    if A.field.p == 2:
        raise EvenCharacteristic("the gcd construction needs q odd")
    g = gcd_many(list(R.rhos.values()) + V.basis)
    if g is None:
        raise AllGeneratorsZero("every rho_w and every degree-t curve through the arc is zero")
    return g


def coprime_combination(f: HomPoly, g: HomPoly, h: HomPoly) -> HomPoly:
    """f + lambda g coprime to h, for the first lambda in field order."""
    if trivariate_gcd(f, g).degree > 0:
        raise NotCoprime((f, g))
    F = f.field
    for lam in range(F.q):
        c = f + g.scale(lam)
        if c.is_zero():
            continue
        if trivariate_gcd(c, h).degree == 0:
            return c
    raise NoLambda("no combination coprime to h")


def restrict_to_line(phi: HomPoly, x, y) -> HomPoly:
    """phi(s x + u y) as a binary form in (s, u) (third exponent always 0)."""
    F = phi.field
    subs = [HomPoly.linear(F, (x[i], y[i], 0)) for i in range(3)]
    return phi.compose(subs)


def hyperbolic_test(phi: HomPoly, A: Arc) -> Report:
    """Check that on every bisecant xy, phi restricts to c s^i u^j.

    In the parametrisation s x + u y the linear form u vanishes at x and s at
    y, so this is exactly the requirement that phi mod the bisecant splits
    into linear factors vanishing at the two arc points.
    """
    if phi.is_zero():
        raise ZeroPolynomial("hyperbolic test of the zero polynomial")
    pts = A.points
    for i, x in enumerate(pts):
        for y in pts[i + 1:]:
            r = restrict_to_line(phi, x, y)
            if len(r.terms) != 1:
                return Report(False, line_through(A.field, x, y),
                              f"restriction to the bisecant has {len(r.terms)} terms")
    return Report(True)


def conic_fit(F: GF, pts):
    """A conic through the points, or None if there is none."""
    pts = list(pts)
    if len(pts) < 5:
        raise TooFewPoints(f"need at least 5 points, got {len(pts)}")
    V = vanishing_space(F, pts, 2)
    return V.basis[0] if V.dim else None


def common_zeros(F: GF, f: HomPoly, g: HomPoly):
    pts = all_points(F)
    vf = f.evaluate_many(pts)
    vg = g.evaluate_many(pts)
    return [x for x, a, b in zip(pts, vf, vg) if a == 0 and b == 0]


@dataclass
class ConicContainment:
    arc: Arc
    conic: HomPoly


@dataclass
class CurveCertificate:
    arc: Arc
    curves: tuple
    d: int
    gcd_degree: int
    vanish_on_arc: bool
    coprime: bool
    degrees_ok: bool
    bounds: Bounds = None
    phi: HomPoly = None
    common_zero_count: int = None
    notes: dict = field(default_factory=dict)

    @property
    def checked(self):
        return self.vanish_on_arc and self.coprime and self.degrees_ok

    def to_json(self):
        from .serialize import arc_to_json, poly_to_json
        return {"arc": arc_to_json(self.arc), "curves": [poly_to_json(c) for c in self.curves],
                "d": self.d, "gcd_degree": self.gcd_degree, "checked": self.checked}


def check_certificate(A: Arc, c1: HomPoly, c2: HomPoly, d) -> CurveCertificate:
    F = A.field
    vanish = all(not c.evaluate_many(A.points).any() for c in (c1, c2))
    g = trivariate_gcd(c1, c2)
    zeros = len(common_zeros(F, c1, c2)) if g.degree == 0 else None
    return CurveCertificate(A, (c1, c2), d, g.degree, vanish, g.degree == 0,
                            max(c1.degree, c2.degree) <= d, common_zero_count=zeros)


def _candidates(F, A, r, phi, cache):
    if r not in cache:
        cache[r] = vanishing_space(F, A.points, r)
    basis = cache[r].basis
    if phi is not None and phi.degree == r and phi not in basis:
        basis = [phi] + basis
    return basis


def coprime_certificate(A: Arc, run_pipeline=True):
    """Two coprime curves of degree <= t + p^eps through A, or the conic containing A."""
    F = A.field
    if F.p == 2:
        raise EvenCharacteristic("certificates are only defined for q odd")
    t = A.t
    if len(A) >= 5:
        conic = conic_fit(F, A.points)
        if conic is not None:
            return ConicContainment(A, conic)
    B = compute_bounds(F.q, F.p, t)
    d = B.d
    cache = {}
    phi = None
    notes = {}
    if run_pipeline:
        sys = build_tangent_system(A)
        S0, S = select_S(A, sys.e)
        G = build_F(A, sys, S0, S)
        cache[t] = vanishing_space(F, A.points, t)
        R = rho_system(G, B)
        phi = almost_phi(A, R, cache[t])
        notes["phi_degree"] = phi.degree
        if phi.degree == 0:
            phi = None
    pairs = sorted(((r1, r2) for r1 in range(1, d + 1) for r2 in range(r1, d + 1)),
                   key=lambda rr: (rr[0] + rr[1], rr[0]))
    for r1, r2 in pairs:
        first = _candidates(F, A, r1, phi, cache)
        if not first:
            continue
        second = _candidates(F, A, r2, phi, cache)
        for c1, c2 in product(first, second):
            if c1 is c2 or c1 == c2:
                continue
            if trivariate_gcd(c1, c2).degree == 0:
                cert = check_certificate(A, c1, c2, d)
                cert.bounds, cert.phi, cert.notes = B, phi, notes
                return cert
        # a mate for c1 as a combination of two coprime members of the second space
        for c1 in first:
            for i, g1 in enumerate(second):
                for g2 in second[i + 1:]:
                    if trivariate_gcd(g1, g2).degree:
                        continue
                    try:
                        c2 = coprime_combination(g1, g2, c1)
                    except NoLambda:
                        continue
                    cert = check_certificate(A, c1, c2, d)
                    cert.bounds, cert.phi, cert.notes = B, phi, notes
                    return cert
    raise NotFound(f"no coprime pair of degree <= {d}", bounds=B)
