"""
GCD of homogeneous trivariate polynomials over GF(q).

A homogeneous f factors as ``X3**k * f0`` with f0 not divisible by X3, and
dehomogenising at X3 = 1 maps such f0 bijectively onto bivariate polynomials,
preserving factorisations.  So

    gcd(f, g) = X3**min(k_f, k_g) * homogenise(gcd(f0(x, y, 1), g0(x, y, 1))).

The bivariate gcd views polynomials as univariate in x over GF(q)[y]: contents
are handled by univariate Euclid in y, primitive parts by a primitive
pseudo-remainder sequence.
"""

from .errors import BothZero
from .gf import GF
from .poly import HomPoly

# -- univariate polynomials: coefficient lists, constant term first, no trailing zeros


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def u_add(F, a, b):
    n = max(len(a), len(b))
    return _trim([F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)])


def u_sub(F, a, b):
    n = max(len(a), len(b))
    return _trim([F.sub(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)])


def u_mul(F, a, b):
    if not a or not b:
        return []
    add, mul = F._add, F._mul
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = add[out[i + j]][mul[x][y]]
    return _trim(out)


def u_scale(F, a, c):
    return _trim([F.mul(c, x) for x in a])


def u_divmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv = F.inv(b[-1])
    db = len(b) - 1
    qt = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            c = F.mul(c, inv)
            qt[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = F.sub(a[i - db + j], F.mul(c, b[j]))
    return _trim(qt), _trim(a[:db])


def u_monic(F, a):
    return u_scale(F, a, F.inv(a[-1])) if a else a


def u_gcd(F, a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, u_divmod(F, a, b)[1]
    return u_monic(F, a)


# -- bivariate polynomials: lists (indexed by power of x) of univariate polys in y


def _btrim(a):
    while a and not a[-1]:
        a.pop()
    return a


def b_content(F, a):
    c = []
    for coef in a:
        c = u_gcd(F, c, coef)
        if len(c) == 1:
            break
    return c


def b_divide_scalar(F, a, c):
    # exact division of every coefficient by the univariate c
    out = []
    for coef in a:
        qt, r = u_divmod(F, coef, c)
        assert not r
        out.append(qt)
    return out


def b_primitive(F, a):
    c = b_content(F, a)
    return b_divide_scalar(F, a, c) if len(c) > 1 or (c and c[0] != 1) else a


def b_prem(F, a, b):
    """Pseudo-remainder of a by b (as polynomials in x)."""
    a = [list(c) for c in a]
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [u_mul(F, c, lb) for c in a]
        for j in range(db + 1):
            a[shift + j] = u_sub(F, a[shift + j], u_mul(F, la, b[j]))
        _btrim(a)
    return a


def b_gcd(F, a, b):
    a, b = _btrim([list(c) for c in a]), _btrim([list(c) for c in b])
    if not a:
        return b
    if not b:
        return a
    cont = u_gcd(F, b_content(F, a), b_content(F, b))
    a, b = b_primitive(F, a), b_primitive(F, b)
    if len(a) < len(b):
        a, b = b, a
    while b and len(b) > 1:
        r = b_prem(F, a, b)
        a, b = b, (b_primitive(F, r) if r else r)
    g = a if not b else [[1]]  # b constant in x, nonzero, primitive -> unit
    g = b_primitive(F, g)
    return [u_mul(F, c, cont) for c in g]


# -- conversions


def _dehomogenise(f: HomPoly):
    """Strip the X3 power and return (k, bivariate) with f = X3**k * f0."""
    k = min(m[2] for m in f.terms)
    dx = max(m[0] for m in f.terms)
    out = [[] for _ in range(dx + 1)]
    for (i, j, _), c in f.terms.items():
        row = out[i]
        if len(row) <= j:
            row.extend([0] * (j + 1 - len(row)))
        row[j] = c
    return k, _btrim([_trim(r) for r in out])


def _homogenise(F, a, extra_x3):
    deg = max(i + len(c) - 1 for i, c in enumerate(a) if c)
    terms = {}
    for i, coef in enumerate(a):
        for j, c in enumerate(coef):
            if c:
                terms[(i, j, deg - i - j + extra_x3)] = c
    return HomPoly(F, deg + extra_x3, terms)


def trivariate_gcd(f: HomPoly, g: HomPoly) -> HomPoly:
    """Normalised gcd of two homogeneous polynomials (leading coefficient 1)."""
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    if f.is_zero():
        return g.normalized()
    if g.is_zero():
        return f.normalized()
    F: GF = f.field
    kf, af = _dehomogenise(f)
    kg, ag = _dehomogenise(g)
    return _homogenise(F, b_gcd(F, af, ag), min(kf, kg)).normalized()


def gcd_many(polys):
    """gcd of a sequence of homogeneous polynomials, zeros skipped; None if all zero."""
    g = None
    for f in polys:
        if f.is_zero():
            continue
        g = f.normalized() if g is None else trivariate_gcd(g, f)
        if g.degree == 0:
            break
    return g


def divides(d: HomPoly, f: HomPoly) -> bool:
    """Exact divisibility test for homogeneous polynomials."""
    if f.is_zero():
        return True
    if d.is_zero():
        return False
    return trivariate_gcd(d, f) == d.normalized()
