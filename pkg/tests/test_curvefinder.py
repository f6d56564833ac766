from fractions import Fraction

import numpy as np
import pytest

from planar_arcs import fixtures as fx
from planar_arcs.bounds import compute_bounds
from planar_arcs.curvefinder import (ConicContainment, CurveCertificate, almost_phi, check_certificate,
                                     common_zeros, conic_fit, coprime_certificate, coprime_combination,
                                     hyperbolic_test, rho_index_set, rho_system)
from planar_arcs.errors import (BadParams, BothZero, EvenCharacteristic, NotCoprime, TooFewPoints,
                                ZeroPolynomial)
from planar_arcs.gf import GF, field_of_order
from planar_arcs.plane import make_arc
from planar_arcs.poly import HomPoly
from planar_arcs.polygcd import divides, gcd_many, trivariate_gcd
from planar_arcs.socle import vanishing_space
from planar_arcs.tangents import build_tangent_system
from planar_arcs.ttform import build_F

from .helpers import random_poly
from .sympy_oracle import oracle_gcd


def P(F, degree, terms):
    return HomPoly(F, degree, {tuple(k): v % F.q for k, v in terms.items()})


def quartics_12arc():
    F = GF(13)
    return (P(F, 4, {(0, 4, 0): 1, (2, 0, 2): -1}), P(F, 4, {(4, 0, 0): 1, (0, 2, 2): -1}))


# -- bounds ------------------------------------------------------------------------


def test_bounds_examples():
    B = compute_bounds(29, 29, 7)
    assert (B.eps, B.pe, B.d, B.cond_ok) == (0, 1, 8, True)
    B = compute_bounds(29, 29, curve_degree=4)
    assert B.boundeddeg == Fraction(129, 5) and float(B.boundeddeg) == 25.8
    assert B.max_arc_on_curve == 25
    B = compute_bounds(9, 3, 4)
    assert (B.eps, B.pe, B.d, B.cond_ok) == (1, 3, 7, False)
    with pytest.raises(BadParams):
        compute_bounds(12, 2, 1)
    with pytest.raises(BadParams):
        compute_bounds(9, 3, 0)


# -- rho system and its gcd --------------------------------------------------------


def test_rho_12arc(arc12):
    G = build_F(arc12, build_tangent_system(arc12))
    R = rho_system(G, compute_bounds(13, 13, 3))
    assert sorted(R.W) == sorted(w for w in rho_index_set(3, 1))
    assert len(R.W) == 6 and all(sum(w) == 2 for w in R.W)
    for r in R.rhos.values():
        assert r.degree == 4
        assert not r.evaluate_many(arc12.points).any()


def test_rho_index_set_t1():
    assert rho_index_set(1, 1) == ((0, 0, 0),)


def test_rho_conic_t1():
    F = GF(7)
    C = fx.conic_arc(F)
    G = build_F(C, build_tangent_system(C))
    R = rho_system(G, compute_bounds(7, 7, 1))
    assert R.W == ((0, 0, 0),) and R.rhos[(0, 0, 0)].degree == 2


def test_rho_10arc(arc10):
    G = build_F(arc10, build_tangent_system(arc10))
    R = rho_system(G, compute_bounds(11, 11, 3))
    assert all(not r.evaluate_many(arc10.points).any() for r in R.rhos.values())


@pytest.mark.parametrize("name", ["arc12", "arc10"])
def test_almost_phi_examples(name):
    A = getattr(fx, name)()
    G = build_F(A, build_tangent_system(A))
    R = rho_system(G, compute_bounds(A.q, A.field.p, A.t))
    phi = almost_phi(A, R, vanishing_space(A.field, A.points, A.t))
    assert phi.degree <= 4
    # vanishing is only required of a nonconstant gcd; here the rho_w are
    # quartics through the arc without a common factor, so phi is a unit
    assert phi.degree == 0 or not phi.evaluate_many(A.points).any()
    assert phi.degree == 0 and phi == HomPoly.constant(A.field, 1)
    V4 = vanishing_space(A.field, A.points, 4)
    assert all(r in V4 for r in R.rhos.values())


@pytest.mark.parametrize("q", [5, 7, 9, 11])
def test_almost_phi_on_conic_is_the_conic(q):
    F = field_of_order(q)
    C = fx.conic_arc(F)
    G = build_F(C, build_tangent_system(C))
    R = rho_system(G, compute_bounds(q, F.p, 1))
    phi = almost_phi(C, R, vanishing_space(F, C.points, 1))
    conic = conic_fit(F, C.points)
    assert phi.degree <= 2 and divides(conic, phi)
    assert all(divides(conic, r) for r in R.rhos.values())


def test_almost_phi_needs_odd_q():
    F = GF(2, 3)
    C = fx.conic_arc(F)
    G = build_F(C, build_tangent_system(C))
    with pytest.raises(EvenCharacteristic):
        almost_phi(C, rho_system(G, compute_bounds(8, 2, 1)), vanishing_space(F, C.points, 1))


# -- gcd ---------------------------------------------------------------------------------


def test_gcd_examples():
    F = GF(13)
    assert trivariate_gcd(P(F, 3, {(2, 1, 0): 1}), P(F, 2, {(1, 0, 1): 1})) == P(F, 1, {(1, 0, 0): 1})
    f = P(F, 2, {(1, 1, 0): 3, (0, 0, 2): 5})
    assert trivariate_gcd(f, HomPoly.zero(F, 2)) == f.normalized()
    with pytest.raises(BothZero):
        trivariate_gcd(HomPoly.zero(F, 1), HomPoly.zero(F, 2))
    assert gcd_many([HomPoly.zero(F, 1)]) is None


def test_12arc_quartics_coprime_by_bezout():
    f, g = quartics_12arc()
    assert trivariate_gcd(f, g).degree == 0
    assert oracle_gcd(f, g).degree == 0
    # brute force: curves with a common component meet in far more than
    # 4 * 4 = 16 points of PG(2,169); coprime quartics meet in at most 16
    K = GF(13, 2)
    fK, gK = HomPoly(K, 4, f.terms), HomPoly(K, 4, g.terms)
    assert len(common_zeros(K, fK, gK)) <= 16
    # and a planted common line is found both ways
    line = P(GF(13), 1, {(1, 0, 0): 1, (0, 1, 0): 3})
    fl, gl = f * line, g * line
    assert trivariate_gcd(fl, gl) == line.normalized() == oracle_gcd(fl, gl)
    flK, glK = HomPoly(K, 5, fl.terms), HomPoly(K, 5, gl.terms)
    assert len(common_zeros(K, flK, glK)) > 16


@pytest.mark.parametrize("p", [3, 5, 7, 13])
def test_gcd_matches_oracle(p, seed):
    F = GF(p)
    rng = np.random.default_rng(seed + p)
    for _ in range(15):
        c = random_poly(F, int(rng.integers(0, 4)), rng)
        if c.is_zero():
            continue
        f = c * random_poly(F, int(rng.integers(0, 4)), rng, density=0.6)
        g = c * random_poly(F, int(rng.integers(0, 4)), rng, density=0.6)
        if f.is_zero() or g.is_zero():
            continue
        got = trivariate_gcd(f, g)
        assert got == oracle_gcd(f, g)
        assert divides(c, got) and divides(got, f) and divides(got, g)


def test_gcd_over_extension_field(gf9):
    rng = np.random.default_rng(7)
    for _ in range(10):
        c = random_poly(gf9, 2, rng)
        u, v = random_poly(gf9, 2, rng), random_poly(gf9, 3, rng)
        if c.is_zero() or u.is_zero() or v.is_zero():
            continue
        g = trivariate_gcd(c * u, c * v)
        assert divides(c, g) and divides(g, c * u) and divides(g, c * v)


# -- combinations, hyperbolic test, conics ---------------------------------------------


def test_coprime_combination_examples():
    F = GF(5)
    x1, x2 = P(F, 1, {(1, 0, 0): 1}), P(F, 1, {(0, 1, 0): 1})
    h = P(F, 2, {(1, 0, 1): 1})
    assert coprime_combination(x1, x2, h) == x1 + x2
    with pytest.raises(NotCoprime):
        coprime_combination(x1, P(F, 2, {(1, 1, 0): 1}), h)


def test_24arc_septic_coprime_to_klein_quartic(arc24):
    F = arc24.field
    h = fx.quartic24()
    V = vanishing_space(F, arc24.points, 7)
    assert V.dim == 13
    # the multiples of h in degree 7: h times the 10 cubic monomials
    from planar_arcs.linalg import rank
    from planar_arcs.poly import monomials
    multiples = [h * HomPoly.monomial(F, e) for e in monomials(3)]
    assert all(f in V for f in multiples)
    assert rank(F, np.array([f.vector() for f in multiples])) == 10
    basis = V.basis
    pairs = [(f, g) for i, f in enumerate(basis) for g in basis[i + 1:] if trivariate_gcd(f, g).degree == 0]
    c = coprime_combination(*pairs[0], h)
    assert c.degree == 7 and c in V and trivariate_gcd(c, h).degree == 0


def test_hyperbolic_examples():
    F = GF(7)
    C = fx.conic_arc(F)
    assert hyperbolic_test(conic_fit(F, C.points), C)
    F5 = GF(5)
    C5 = fx.conic_arc(F5)
    bad = hyperbolic_test(P(F5, 3, {(1, 1, 1): 1}), C5)
    assert not bad and bad.witness is not None
    single = make_arc(F5, [(1, 0, 0)])
    assert hyperbolic_test(P(F5, 3, {(1, 1, 1): 1}), single)
    with pytest.raises(ZeroPolynomial):
        hyperbolic_test(HomPoly.zero(F5, 2), C5)


def test_conic_fit_examples(arc12):
    F = GF(7)
    C = fx.conic_arc(F)
    fit = conic_fit(F, C.points[:5])
    assert fit.is_scalar_multiple_of(P(F, 2, {(0, 2, 0): 1, (1, 0, 1): -1}))
    assert conic_fit(arc12.field, arc12.points) is None
    assert vanishing_space(arc12.field, arc12.points, 2).dim == 0
    with pytest.raises(TooFewPoints):
        conic_fit(F, C.points[:4])


# -- certificates ------------------------------------------------------------------


def test_certificate_12arc(arc12):
    cert = coprime_certificate(arc12)
    assert isinstance(cert, CurveCertificate) and cert.checked
    assert cert.d == 4 and [c.degree for c in cert.curves] == [4, 4]
    V = vanishing_space(arc12.field, arc12.points, 4)
    f, g = quartics_12arc()
    assert f in V and g in V
    assert check_certificate(arc12, f, g, 4).checked


def test_certificate_24arc_contains_klein_quartic_mate(arc24):
    h = fx.quartic24()
    cert = coprime_certificate(arc24)
    assert cert.checked and cert.d == 8
    assert max(c.degree for c in cert.curves) <= 8
    assert any(c.is_scalar_multiple_of(h) for c in cert.curves)


def test_conic_arc_is_contained():
    F = GF(3, 2)
    res = coprime_certificate(fx.conic_arc(F))
    assert isinstance(res, ConicContainment)
    assert res.conic.is_scalar_multiple_of(P(F, 2, {(0, 2, 0): 1, (1, 0, 1): F.neg(1)}))


def test_check_certificate_flags_shared_component(arc12):
    f, g = quartics_12arc()
    bad = check_certificate(arc12, f, f.scale(3), 4)
    assert not bad.checked and not bad.coprime
    assert not check_certificate(arc12, f, g, 3).degrees_ok
