"""
Homogeneous polynomials in three variables over GF(q).

Monomials of degree r are exponent triples ``(i, j, k)``; the graded
lexicographic order with X1 > X2 > X3 lists them as ``(r,0,0), (r-1,1,0),
(r-1,0,1), (r-2,2,0), ...``.  That list order is the canonical monomial order
used for serialisation, for coefficient vectors and for normalisation ("the
canonically smallest monomial" is the first one in the list).
"""

from functools import lru_cache
from math import comb

import numpy as np

from .gf import GF


@lru_cache(maxsize=None)
def monomials(r):
    return tuple((i, j, r - i - j) for i in range(r, -1, -1) for j in range(r - i, -1, -1))


@lru_cache(maxsize=None)
def monomial_index(r):
    return {m: n for n, m in enumerate(monomials(r))}


def n_monomials(r):
    return comb(r + 2, 2)


def power_table(F: GF, r):
    """``P[x, k] = x**k`` for every field element x and 0 <= k <= r."""
    P = np.zeros((F.q, r + 1), dtype=np.int64)
    P[:, 0] = 1
    for k in range(1, r + 1):
        P[:, k] = F.MUL[P[:, k - 1], np.arange(F.q)]
    return P


def monomial_matrix(F: GF, r, points):
    """Evaluation matrix: rows are degree-r monomials, columns are points."""
    pts = np.asarray(points, dtype=np.int64).reshape(-1, 3)
    P = power_table(F, r)
    E = np.array(monomials(r), dtype=np.int64)
    a = P[pts[None, :, 0], E[:, None, 0]]
    b = P[pts[None, :, 1], E[:, None, 1]]
    c = P[pts[None, :, 2], E[:, None, 2]]
    return F.MUL[F.MUL[a, b], c]


class HomPoly:
    """A homogeneous polynomial of fixed degree with coefficients in ``field``.

    ``terms`` maps exponent triples to nonzero field elements.  The zero
    polynomial of any degree has no terms.
    """

    __slots__ = ("field", "degree", "terms")

    def __init__(self, field: GF, degree, terms=None):
        self.field = field
        self.degree = degree
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if sum(e) != degree or min(e) < 0:
                    raise ValueError(f"monomial {e} is not of degree {degree}")
                if c:
                    clean[e] = int(c)
        self.terms = clean

    # constructors -------------------------------------------------------------
    @classmethod
    def zero(cls, F, degree):
        return cls(F, degree)

    @classmethod
    def constant(cls, F, c):
        return cls(F, 0, {(0, 0, 0): c})

    @classmethod
    def linear(cls, F, coeffs):
        return cls(F, 1, {(1, 0, 0): coeffs[0], (0, 1, 0): coeffs[1], (0, 0, 1): coeffs[2]})

    @classmethod
    def monomial(cls, F, e, c=1):
        return cls(F, sum(e), {tuple(e): c})

    @classmethod
    def from_vector(cls, F, degree, vec):
        return cls(F, degree, {m: int(c) for m, c in zip(monomials(degree), vec) if c})

    # basic protocol -----------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return self.field == other.field
        return self.field == other.field and self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __repr__(self):
        return f"HomPoly({self.to_str()})"

    def is_zero(self):
        return not self.terms

    def to_str(self, var="x"):
        if not self.terms:
            return "0"
        out = []
        for m in monomials(self.degree):
            c = self.terms.get(m)
            if not c:
                continue
            mono = "*".join(f"{var}{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e)
            if self.field.h == 1:
                cs = str(c)
            else:
                cs = "[" + ",".join(map(str, self.field.coeffs(c))) + "]"
            if not mono:
                out.append(cs)
            elif c == 1:
                out.append(mono)
            else:
                out.append(f"{cs}*{mono}")
        return " + ".join(out)

    def sorted_terms(self):
        return [(m, self.terms[m]) for m in monomials(self.degree) if m in self.terms]

    def vector(self):
        return np.array([self.terms.get(m, 0) for m in monomials(self.degree)], dtype=np.int64)

    # arithmetic ---------------------------------------------------------------
    def _check(self, other):
        if self.field != other.field:
            raise ValueError("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise ValueError("sum of homogeneous polynomials of different degrees")
        F = self.field
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = F.add(terms.get(m, 0), c)
        return HomPoly(F, self.degree, terms)

    def __neg__(self):
        F = self.field
        return HomPoly(F, self.degree, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        F = self.field
        return HomPoly(F, self.degree, {m: F.mul(c, v) for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.scale(int(other))
        self._check(other)
        F = self.field
        add, mul = F._add, F._mul
        terms = {}
        for (a1, a2, a3), c in self.terms.items():
            for (b1, b2, b3), d in other.terms.items():
                m = (a1 + b1, a2 + b2, a3 + b3)
                terms[m] = add[terms.get(m, 0)][mul[c][d]]
        return HomPoly(F, self.degree + other.degree, terms)

    def __pow__(self, n):
        result = HomPoly.constant(self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # evaluation ---------------------------------------------------------------
    def __call__(self, x):
        F = self.field
        add, mul = F._add, F._mul
        pw = [[1] for _ in range(3)]
        for v in range(3):
            for _ in range(self.degree):
                pw[v].append(mul[pw[v][-1]][x[v]])
        s = 0
        for (i, j, k), c in self.terms.items():
            s = add[s][mul[mul[c][pw[0][i]]][mul[pw[1][j]][pw[2][k]]]]
        return s

    def evaluate_many(self, points):
        """Values at a sequence of points, as an int array."""
        F = self.field
        if not len(points):
            return np.zeros(0, dtype=np.int64)
        M = monomial_matrix(F, self.degree, points)
        v = self.vector()
        prods = F.MUL[v[:, None], M]
        out = np.zeros(M.shape[1], dtype=np.int64)
        for row in prods:
            out = F.ADD[out, row]
        return out

    def compose(self, subs):
        """Substitute three homogeneous polynomials of a common degree for X1, X2, X3."""
        F = self.field
        d = subs[0].degree
        if self.is_zero():
            return HomPoly(F, self.degree * d)
        pw = [[HomPoly.constant(F, 1)] for _ in range(3)]
        for v in range(3):
            top = max(m[v] for m in self.terms)
            for _ in range(top):
                pw[v].append(pw[v][-1] * subs[v])
        out = HomPoly(F, self.degree * d)
        for (i, j, k), c in self.terms.items():
            out = out + (pw[0][i] * pw[1][j] * pw[2][k]).scale(c)
        return out

    # normalisation ------------------------------------------------------------
    def leading(self):
        """First (monomial, coefficient) in canonical order, or None."""
        for m in monomials(self.degree):
            if m in self.terms:
                return m, self.terms[m]
        return None

    def normalized(self):
        lead = self.leading()
        if lead is None:
            return self
        return self.scale(self.field.inv(lead[1]))

    def is_scalar_multiple_of(self, other):
        """True iff self = c * other for some nonzero c (both nonzero)."""
        if self.is_zero() or other.is_zero() or self.degree != other.degree:
            return False
        return self.normalized() == other.normalized()

    def variable_degrees(self):
        """Highest power of each variable occurring."""
        if not self.terms:
            return (0, 0, 0)
        return tuple(max(m[v] for m in self.terms) for v in range(3))


def binom_mod(n, k, p):
    """C(n, k) mod p by Lucas' theorem."""
    r = 1
    while n or k:
        a, b = n % p, k % p
        if b > a:
            return 0
        r = r * comb(a, b) % p
        n //= p
        k //= p
    return r
