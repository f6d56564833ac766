"""
Exact arithmetic in GF(p^h).

Elements are plain Python ints in ``range(q)``.  The int ``sum(c[i] * p**i)``
stands for the polynomial ``sum(c[i] * x**i)`` modulo the field's monic
irreducible modulus, so for a prime field the encoding is just the residue.
All arithmetic goes through precomputed ``q x q`` tables, which also serve the
vectorised numpy routines elsewhere in the package.
"""

from itertools import product

import numpy as np

from .errors import DegreeMismatch, DivisionByZero, NonPrime, ReducibleModulus


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _polymod(a, m, p):
    # a, m: coefficient lists over Z_p, constant term first; m monic
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    a = [c % p for c in a[:dm]]
    return a


def _is_irreducible(modulus, p):
    h = len(modulus) - 1
    if h == 1:
        return True
    # roots first, then monic factors of degree 2..h//2
    for x in range(p):
        if sum(c * pow(x, i, p) for i, c in enumerate(modulus)) % p == 0:
            return False
    for d in range(2, h // 2 + 1):
        for low in product(range(p), repeat=d):
            factor = list(low) + [1]
            if not any(_polymod(modulus, factor, p)):
                return False
    return True


def default_modulus(p, h):
    """The smallest monic irreducible polynomial of degree h over Z_p.

    Candidates are ordered by the integer value of their lower coefficients
    with the constant term varying fastest.
    """
    for n in range(p**h):
        low = [(n // p**i) % p for i in range(h)]
        m = tuple(low) + (1,)
        if _is_irreducible(m, p):
            return m
    raise ReducibleModulus(f"no irreducible polynomial of degree {h} over Z_{p}")


class GF:
    """The finite field GF(p^h).

    >>> F = GF(3, 2)
    >>> F.modulus
    (1, 0, 1)
    >>> F.mul(3, 3)     # x * x = -1 = 2
    2
    """

    def __init__(self, p, h=1, modulus=None):
        if not is_prime(p):
            raise NonPrime(p)
        if h < 1:
            raise DegreeMismatch(f"extension degree must be >= 1, got {h}")
        if modulus is None:
            modulus = default_modulus(p, h) if h > 1 else (0, 1)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != h + 1:
            raise DegreeMismatch(f"modulus {modulus} does not have degree {h}")
        if modulus[-1] != 1:
            raise DegreeMismatch(f"modulus {modulus} is not monic")
        if not _is_irreducible(modulus, p):
            raise ReducibleModulus(modulus)
        self.p = p
        self.h = h
        self.q = q = p**h
        self.modulus = modulus

        digits = np.array([[(a // p**i) % p for i in range(h)] for a in range(q)], dtype=np.int64)
        weights = p ** np.arange(h, dtype=np.int64)
        self.ADD = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        self.NEG = ((-digits) % p) @ weights
        self.SUB = self.ADD[:, self.NEG]
        if h == 1:
            r = np.arange(q, dtype=np.int64)
            self.MUL = (r[:, None] * r[None, :]) % p
        else:
            self.MUL = np.zeros((q, q), dtype=np.int64)
            for a in range(q):
                for b in range(a, q):
                    prod = [0] * (2 * h - 1)
                    for i in range(h):
                        if digits[a, i]:
                            for j in range(h):
                                prod[i + j] += int(digits[a, i]) * int(digits[b, j])
                    c = _polymod(prod, modulus, p)
                    self.MUL[a, b] = self.MUL[b, a] = sum(ci * p**i for i, ci in enumerate(c))
        self.INV = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            self.INV[a] = int(np.nonzero(self.MUL[a] == 1)[0][0])
        for tab in (self.ADD, self.NEG, self.SUB, self.MUL, self.INV):
            tab.setflags(write=False)
        # plain nested lists are much faster than numpy for scalar lookups
        self._add = self.ADD.tolist()
        self._mul = self.MUL.tolist()
        self._sub = self.SUB.tolist()
        self._neg = self.NEG.tolist()
        self._inv = self.INV.tolist()

    # identity ---------------------------------------------------------------
    def _key(self):
        return (self.p, self.h, self.modulus)

    def __eq__(self, other):
        return isinstance(other, GF) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.h == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.h}, modulus={list(self.modulus)})"

    def __reduce__(self):
        return (GF, (self.p, self.h, self.modulus))

    # scalar arithmetic --------------------------------------------------------
    def add(self, a, b):
        return self._add[a][b]

    def sub(self, a, b):
        return self._sub[a][b]

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._inv[a]

    def div(self, a, b):
        return self._mul[a][self.inv(b)]

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        result = 1
        while n:
            if n & 1:
                result = self._mul[result][a]
            a = self._mul[a][a]
            n >>= 1
        return result

    def from_int(self, n):
        """Image of the integer n under Z -> GF(q)."""
        return n % self.p

    def sum(self, values):
        s = 0
        add = self._add
        for v in values:
            s = add[s][v]
        return s

    # encoding -----------------------------------------------------------------
    def coeffs(self, a):
        """Wire form of an element: h residues, constant term first."""
        p = self.p
        return [(a // p**i) % p for i in range(self.h)]

    def element(self, coeffs):
        if isinstance(coeffs, (int, np.integer)):
            if self.h != 1:
                raise DegreeMismatch(f"element of GF({self.q}) needs {self.h} coefficients")
            return int(coeffs) % self.p
        coeffs = list(coeffs)
        if len(coeffs) != self.h:
            raise DegreeMismatch(f"element of GF({self.q}) needs {self.h} coefficients, got {coeffs}")
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs))

    def elements(self):
        return range(self.q)

    # vectorised arithmetic on integer arrays ---------------------------------
    def vadd(self, a, b):
        return self.ADD[a, b]

    def vsub(self, a, b):
        return self.SUB[a, b]

    def vmul(self, a, b):
        return self.MUL[a, b]


def make_field(p, h=1, modulus=None):
    return GF(p, h, modulus)


def fe_mul(F, a, b):
    return F.mul(a, b)


def fe_inv(F, a):
    return F.inv(a)


def field_of_order(q, modulus=None):
    """GF(q) for a prime power q, default modulus unless one is given."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    else:
        raise NonPrime(q)
    h, n = 0, q
    while n % p == 0:
        n //= p
        h += 1
    if n != 1:
        raise NonPrime(f"{q} is not a prime power")
    return GF(p, h, modulus)
