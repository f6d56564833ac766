"""
Arc extension, projective canonical forms, classification and Kestenband arcs.

Canonical form: every ordered 4-subset (a, b, c, d) of an arc is in general
position, so there is a unique projectivity sending it to the standard frame
e1, e2, e3, (1,1,1).  It sends an arc point x to

    (det(x,b,c)/det(d,b,c), det(a,x,c)/det(a,d,c), det(a,b,x)/det(a,b,d)).

The canonical form is the lexicographically least sorted image over all
ordered 4-subsets; it is a PGL(3,q) invariant of the arc.  Everything is
vectorised over the 4-subsets with the field's lookup tables.

Classification builds arcs point by point from the frame and keeps one
representative per projective class at every size.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from math import isqrt

import numpy as np

from .errors import BudgetExceeded, NotOddSquare, NoValidH, TooFewPoints
from .gf import GF
from .plane import Arc, PlaneTables, all_points, make_arc
from .poly import HomPoly

log = logging.getLogger(__name__)

EXHAUSTIVE_Q_LIMIT = 13


@lru_cache(maxsize=None)
def _ordered_quads(k):
    return np.array(list(permutations(range(k), 4)), dtype=np.int64).reshape(-1, 4)


def _extension_mask(T: PlaneTables, idx):
    idx = np.asarray(idx, dtype=np.int64)
    lines = T.join[np.ix_(idx, idx)]
    iu = np.triu_indices(len(idx), 1)
    blocked = T.incidence[lines[iu]].any(axis=0) if len(iu[0]) else np.zeros(T.n, dtype=bool)
    free = ~blocked
    free[idx] = False
    return free


def extension_indices(T: PlaneTables, idx):
    return np.nonzero(_extension_mask(T, idx))[0]


def extensions(A: Arc):
    """Points x not in A with A + {x} still an arc, canonical order."""
    T = PlaneTables.of(A.field)
    idx = [T.index[x] for x in A.points]
    return [T.points[i] for i in extension_indices(T, idx)]


def is_complete(A: Arc):
    return not extensions(A)


def canonical_indices(T: PlaneTables, idx):
    """Canonical form of the arc with point indices ``idx``, as a sorted index tuple."""
    F = T.F
    k = len(idx)
    if k < 4:
        raise TooFewPoints(f"canonical form needs at least 4 points, got {k}")
    P = T.coords[np.asarray(idx, dtype=np.int64)]
    M, A_, S_ = F.MUL, F.ADD, F.SUB
    # cross[j, l] = P_j x P_l, det[i, j, l] = P_i . (P_j x P_l)
    a, b = P[:, None, :], P[None, :, :]
    cx = np.stack([
        S_[M[a[..., 1], b[..., 2]], M[a[..., 2], b[..., 1]]],
        S_[M[a[..., 2], b[..., 0]], M[a[..., 0], b[..., 2]]],
        S_[M[a[..., 0], b[..., 1]], M[a[..., 1], b[..., 0]]],
    ], axis=-1)
    Pi = P[:, None, None, :]
    D = A_[A_[M[Pi[..., 0], cx[None, ..., 0]], M[Pi[..., 1], cx[None, ..., 1]]], M[Pi[..., 2], cx[None, ..., 2]]]
    Q = _ordered_quads(k)
    qa, qb, qc, qd = (Q[:, i:i + 1] for i in range(4))
    x = np.arange(k)[None, :]
    inv = F.INV
    c1 = M[D[x, qb, qc], inv[D[qd, qb, qc]]]
    c2 = M[D[qa, x, qc], inv[D[qa, qd, qc]]]
    c3 = M[D[qa, qb, x], inv[D[qa, qb, qd]]]
    images = T.normalize_rows(np.stack([c1, c2, c3], axis=-1))
    images.sort(axis=1)
    best = images[np.lexsort(images.T[::-1])[0]]
    return tuple(int(i) for i in best)


def canonical_form(A: Arc) -> Arc:
    T = PlaneTables.of(A.field)
    key = canonical_indices(T, [T.index[x] for x in A.points])
    return Arc(A.field, tuple(T.points[i] for i in key))


@dataclass
class ClassificationResult:
    q: int
    size: int
    complete_only: bool
    count: int
    representatives: list
    level_counts: dict = field(default_factory=dict)

    def to_json(self):
        from .serialize import arc_to_json
        return {"q": self.q, "size": self.size, "complete_only": self.complete_only, "count": self.count,
                "level_counts": {str(k): v for k, v in sorted(self.level_counts.items())},
                "representatives": [arc_to_json(A) for A in self.representatives]}


def _frame(T: PlaneTables):
    return canonical_indices(T, [T.index[x] for x in [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]])


def _children(T, rep, size):
    ext = extension_indices(T, rep)
    need = size - len(rep)
    if len(ext) < need:
        return []
    return [canonical_indices(T, rep + (int(x),)) for x in ext]


def classify(F: GF, size, complete_only=True, allow_large=False, jobs=1) -> ClassificationResult:
    """Projective classes of arcs of the given size in PG(2,q).

    Arcs are grown from the frame one point at a time; at each size only one
    representative per class is kept.  An arc is dropped as soon as it has
    fewer extension points than are still needed.
    """
    if F.q > EXHAUSTIVE_Q_LIMIT and not allow_large:
        raise BudgetExceeded(f"exhaustive classification is limited to q <= {EXHAUSTIVE_Q_LIMIT}")
    T = PlaneTables.of(F)
    if size < 4:
        raise TooFewPoints("classification starts from the frame (size 4)")
    level = {_frame(T)}
    counts = {4: 1}
    for k in range(5, size + 1):
        nxt = set()
        reps = sorted(level)
        if jobs > 1:
            from concurrent.futures import ProcessPoolExecutor
            with ProcessPoolExecutor(jobs) as ex:
                for kids in ex.map(_children, [T] * len(reps), reps, [size] * len(reps), chunksize=16):
                    nxt.update(kids)
        else:
            for rep in reps:
                nxt.update(_children(T, rep, size))
        level = nxt
        counts[k] = len(level)
        log.info("q=%d size %d: %d classes", F.q, k, len(level))
    reps = sorted(level)
    if complete_only:
        reps = [r for r in reps if not len(extension_indices(T, r))]
    arcs = [Arc(F, tuple(T.points[i] for i in r)) for r in reps]
    return ClassificationResult(F.q, size, complete_only, len(arcs), arcs, counts)


# -- Kestenband arcs -------------------------------------------------------------


@dataclass(frozen=True)
class KestenbandSpec:
    field: GF
    H: tuple  # 3x3 nested tuple

    @property
    def root(self):
        return isqrt(self.field.q)

    def is_hermitian(self):
        F, s, H = self.field, self.root, self.H
        return all(H[i][j] == F.pow(H[j][i], s) for i in range(3) for j in range(3))

    def char_poly(self):
        """Coefficients (c0, c1, c2, 1) of det(lambda I - H)."""
        F, H = self.field, self.H
        m, a, s = F.mul, F.add, F.sub
        tr = a(a(H[0][0], H[1][1]), H[2][2])
        minors = F.sum(s(m(H[i][i], H[j][j]), m(H[i][j], H[j][i])) for i, j in ((0, 1), (0, 2), (1, 2)))
        det = F.sum([m(H[0][0], s(m(H[1][1], H[2][2]), m(H[1][2], H[2][1]))),
                     F.neg(m(H[0][1], s(m(H[1][0], H[2][2]), m(H[1][2], H[2][0])))),
                     m(H[0][2], s(m(H[1][0], H[2][1]), m(H[1][1], H[2][0])))])
        return (F.neg(det), minors, F.neg(tr), 1)

    def char_poly_irreducible(self):
        F = self.field
        c = self.char_poly()
        # a cubic is irreducible iff it has no root
        for x in range(F.q):
            v = F.add(F.add(F.mul(F.add(F.mul(x, x), F.mul(c[2], x)), x), F.mul(c[1], x)), c[0])
            if v == 0:
                return False
        return True

    def forms(self):
        """The two Hermitian curves of degree sqrt(q) + 1."""
        F, s, H = self.field, self.root, self.H
        hermitian = HomPoly(F, s + 1, {(s + 1, 0, 0): 1, (0, s + 1, 0): 1, (0, 0, s + 1): 1})
        terms = {}
        for i in range(3):
            for j in range(3):
                e = [0, 0, 0]
                e[i] += s
                e[j] += 1
                e = tuple(e)
                terms[e] = F.add(terms.get(e, 0), H[i][j])
        return hermitian, HomPoly(F, s + 1, terms)


def _odd_square_root(F: GF):
    s = isqrt(F.q)
    if s * s != F.q or F.q % 2 == 0:
        raise NotOddSquare(F.q)
    return s


def find_kestenband_spec(F: GF, limit=None) -> KestenbandSpec:
    """First valid Hermitian H with entries scanned in field-encoding order.

    Entries are (h11, h22, h33, h12, h13, h23), h11..h33 fixed by Frobenius,
    h21, h31, h32 their conjugates.
    """
    s = _odd_square_root(F)
    subfield = [x for x in range(F.q) if F.pow(x, s) == x]
    tried = 0
    for h11, h22, h33 in product(subfield, repeat=3):
        for h12, h13, h23 in product(range(F.q), repeat=3):
            c = lambda z: F.pow(z, s)  # noqa: E731
            H = ((h11, h12, h13), (c(h12), h22, h23), (c(h13), c(h23), h33))
            spec = KestenbandSpec(F, H)
            if spec.char_poly_irreducible():
                pts = kestenband_points(F, spec)
                if len(pts) == F.q - s + 1 and make_arc_or_none(F, pts) is not None:
                    return spec
            tried += 1
            if limit and tried >= limit:
                raise NoValidH(f"no valid H among the first {limit} candidates")
    raise NoValidH(f"no valid H for q={F.q}")


def make_arc_or_none(F, pts):
    from .plane import validate_arc, Violation
    r = validate_arc(F, pts)
    return None if isinstance(r, Violation) else r


def kestenband_points(F: GF, spec: KestenbandSpec):
    f, g = spec.forms()
    pts = all_points(F)
    vf, vg = f.evaluate_many(pts), g.evaluate_many(pts)
    return [x for x, a, b in zip(pts, vf, vg) if a == 0 and b == 0]


def kestenband(F: GF, spec: KestenbandSpec = None) -> Arc:
    """The complete arc of size q - sqrt(q) + 1 cut out by two Hermitian curves."""
    _odd_square_root(F)
    if spec is None:
        spec = find_kestenband_spec(F)
    return make_arc(F, kestenband_points(F, spec))


# -- auxiliary search used to produce the PG(2,17) fixture -------------------------------


def find_arc_on_conic_plus(F: GF, size, on_conic):
    """First complete arc (in a fixed search order) with ``on_conic`` points on x2^2 = x1 x3.

    PGL(2,q) is 3-transitive on the conic, so the first three conic points can
    be fixed; the remaining conic points are chosen in combination order and
    the off-conic points by depth-first search among common extension points.
    """
    from itertools import combinations
    T = PlaneTables.of(F)
    conic = [T.index[x] for x in sorted([(0, 0, 1)] + [(1, s, F.mul(s, s)) for s in range(F.q)])]
    need = size - on_conic

    def dfs(cur, cand, k):
        if k == 0:
            yield cur
            return
        for i, x in enumerate(cand):
            new = cur + [x]
            ext = set(extension_indices(T, new).tolist())
            yield from dfs(new, [y for y in cand[i + 1:] if y in ext], k - 1)

    for rest in combinations(conic[3:], on_conic - 3):
        base = conic[:3] + list(rest)
        ext = [int(x) for x in extension_indices(T, base) if x not in set(conic)]
        for idx in dfs(base, ext, need):
            if not len(extension_indices(T, idx)):
                return Arc(F, tuple(T.points[i] for i in idx))
    return None
