"""Shared builders for tests: random projectivities, random arcs, polynomials."""

from planar_arcs.plane import Arc, PlaneTables, make_arc, normalize_point
from planar_arcs.poly import HomPoly, monomials
from planar_arcs.search import extension_indices


def det(F, M):
    m, a, s = F.mul, F.add, F.sub
    return a(a(m(M[0][0], s(m(M[1][1], M[2][2]), m(M[1][2], M[2][1]))),
               F.neg(m(M[0][1], s(m(M[1][0], M[2][2]), m(M[1][2], M[2][0]))))),
             m(M[0][2], s(m(M[1][0], M[2][1]), m(M[1][1], M[2][0]))))


def random_projectivity(F, rng):
    while True:
        M = [[int(rng.integers(F.q)) for _ in range(3)] for _ in range(3)]
        if det(F, M):
            return M


def apply(F, M, x):
    return normalize_point(F, [F.sum(F.mul(M[i][j], x[j]) for j in range(3)) for i in range(3)])


def transform_arc(A, M):
    F = A.field
    return make_arc(F, [apply(F, M, x) for x in A.points])


def random_arc(F, size, rng):
    """Random arc grown greedily; may stop short of ``size`` if it becomes complete."""
    T = PlaneTables.of(F)
    idx = [int(rng.integers(T.n))]
    while len(idx) < size:
        ext = extension_indices(T, idx)
        if not len(ext):
            break
        idx.append(int(rng.choice(ext)))
    return Arc(F, tuple(T.points[i] for i in idx))


def random_points(F, k, rng):
    T = PlaneTables.of(F)
    idx = rng.choice(T.n, size=k, replace=False)
    return [T.points[i] for i in sorted(idx)]


def random_poly(F, degree, rng, density=1.0):
    terms = {}
    for m in monomials(degree):
        if rng.random() < density:
            terms[m] = int(rng.integers(F.q))
    return HomPoly(F, degree, terms)
