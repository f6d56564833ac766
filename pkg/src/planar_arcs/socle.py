"""
Evaluation matrices, vanishing spaces and socles.

The evaluation matrix of degree r has one row per degree-r monomial (graded
lex order) and one column per point.  Its kernel from the left is the space of
degree-r curves through the points; a set of points indexing a column basis
is an r-socle.
"""

from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import SeedDependent
from .gf import GF
from .linalg import in_span, nullspace, rank, rref
from .plane import Arc
from .poly import HomPoly, monomial_matrix, monomials


@dataclass(frozen=True)
class EvalMatrix:
    degree: int
    points: tuple
    entries: np.ndarray  # rows: monomials, columns: points


def eval_matrix(F: GF, D, r) -> EvalMatrix:
    D = tuple(D)
    return EvalMatrix(r, D, monomial_matrix(F, r, list(D)) if D else np.zeros((comb(r + 2, 2), 0), dtype=np.int64))


@dataclass(frozen=True)
class VanishingSpace:
    field: GF
    degree: int
    echelon: np.ndarray  # rows are coefficient vectors in reduced echelon form

    @property
    def dim(self):
        return len(self.echelon)

    @property
    def basis(self):
        return [HomPoly.from_vector(self.field, self.degree, row) for row in self.echelon]

    def __contains__(self, f: HomPoly):
        if f.is_zero():
            return True
        if f.degree != self.degree:
            return False
        return in_span(self.field, self.echelon, f.vector())


def vanishing_space(F: GF, D, r) -> VanishingSpace:
    """Degree-r homogeneous polynomials vanishing on every point of D."""
    D = list(D)
    n = comb(r + 2, 2)
    if not D:
        return VanishingSpace(F, r, np.eye(n, dtype=np.int64))
    M = monomial_matrix(F, r, D).T  # points x monomials
    return VanishingSpace(F, r, nullspace(F, M, n))


@dataclass(frozen=True)
class Socle:
    degree: int
    points: tuple

    def __len__(self):
        return len(self.points)


def socle(F: GF, D, r, seed=()) -> Socle:
    """Greedy column basis of the degree-r evaluation matrix of D.

    The seed points come first, the rest of D follows in canonical order.
    """
    seed = list(seed)
    rest = sorted(x for x in D if x not in set(seed))
    cols = seed + rest
    if not cols:
        return Socle(r, ())
    M = monomial_matrix(F, r, cols)
    if seed and rank(F, M[:, : len(seed)]) < len(seed):
        raise SeedDependent(f"seed columns are dependent in degree {r}")
    _, piv = rref(F, M)
    return Socle(r, tuple(cols[c] for c in piv))


def socle_chain(A: Arc, r_max):
    """Nested socles of degrees t, t+1, ..., t+r_max of the arc."""
    F = A.field
    t = A.t
    chain = [socle(F, A.points, t)]
    for j in range(1, r_max + 1):
        chain.append(socle(F, A.points, t + j, seed=chain[-1].points))
    return chain


def chain_bound(t, r):
    """Upper bound r (t + r/2 + 3/2) on |S_r minus S_0|, as an exact fraction."""
    from fractions import Fraction
    return r * (t + Fraction(r, 2) + Fraction(3, 2))


def socle_size(r, dim_phi):
    return comb(r + 2, 2) - dim_phi


__all__ = ["EvalMatrix", "eval_matrix", "VanishingSpace", "vanishing_space", "Socle", "socle",
           "socle_chain", "chain_bound", "socle_size", "monomials"]
