"""Exact Gaussian elimination over GF(q) on integer numpy arrays."""

import numpy as np

from .gf import GF


def rref(F: GF, M):
    """Reduced row echelon form.

    Pivots are taken column by column from the left, the first row with a
    nonzero entry in the column becoming the pivot row.  Returns ``(R,
    pivots)`` where ``R`` has ``len(pivots)`` nonzero rows on top.
    """
    R = np.array(M, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("rref needs a 2d array")
    rows, cols = R.shape
    prime = F.h == 1
    p = F.p
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if not len(nz):
            continue
        k = r + nz[0]
        if k != r:
            R[[r, k]] = R[[k, r]]
        inv = F.INV[R[r, c]]
        if prime:
            R[r, c:] = (R[r, c:] * inv) % p
        else:
            R[r, c:] = F.MUL[inv, R[r, c:]]
        others = np.nonzero(R[:, c])[0]
        others = others[others != r]
        if len(others):
            factors = R[others, c]
            if prime:
                R[np.ix_(others, range(c, cols))] = (R[others, c:] - factors[:, None] * R[r, c:][None, :]) % p
            else:
                R[np.ix_(others, range(c, cols))] = F.SUB[R[others, c:], F.MUL[factors[:, None], R[r, c:][None, :]]]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(F: GF, M):
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(F, M)[1])


def nullspace(F: GF, M, ncols=None):
    """Basis of ``{v : M v = 0}`` as the rows of a matrix in reduced echelon form."""
    M = np.asarray(M, dtype=np.int64)
    if M.size == 0:
        n = ncols if ncols is not None else M.shape[1]
        return np.eye(n, dtype=np.int64)
    R, piv = rref(F, M)
    n = M.shape[1]
    free = [c for c in range(n) if c not in set(piv)]
    if not free:
        return np.zeros((0, n), dtype=np.int64)
    B = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        B[i, f] = 1
        for j, pc in enumerate(piv):
            B[i, pc] = F.NEG[R[j, f]]
    return rref(F, B)[0]


def reduce_vector(F: GF, basis, v):
    """Remainder of ``v`` after reduction by a reduced-echelon ``basis``.

    Zero iff ``v`` lies in the row span of ``basis``.
    """
    v = np.array(v, dtype=np.int64, copy=True)
    for row in basis:
        nz = np.nonzero(row)[0]
        if not len(nz):
            continue
        c = nz[0]
        if v[c]:
            v = F.SUB[v, F.MUL[v[c], row]]
    return v


def in_span(F: GF, basis, v):
    return not np.any(reduce_vector(F, basis, v))


def matmul(F: GF, A, B):
    """Matrix product over GF(q)."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if F.h == 1:
        return (A @ B) % F.p
    out = np.zeros((A.shape[0],) + B.shape[1:], dtype=np.int64)
    for k in range(A.shape[1]):
        out = F.ADD[out, F.MUL[A[:, k].reshape((-1,) + (1,) * (B.ndim - 1)), B[k]]]
    return out
