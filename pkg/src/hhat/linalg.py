"""Dense linear algebra over GF(5) on numpy integer arrays."""

from __future__ import annotations

import numpy as np

P = 5
INV = np.array([0, 1, 3, 2, 4], dtype=np.int64)


def rref(mat, ncols: int | None = None, keep_rest: bool = False):
    """Reduced row-echelon form over GF(5).

    Pivots are searched only among the first ``ncols`` columns (all by
    default).  Returns ``(R, pivots)``; ``R`` holds the pivot rows only,
    unless ``keep_rest`` is set, in which case the remaining rows follow
    (they vanish on the first ``ncols`` columns).
    """
    A = np.array(mat, dtype=np.int64) % P
    if A.ndim != 2:
        raise ValueError("expected a 2-d array")
    rows, cols = A.shape
    if ncols is None:
        ncols = cols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r] = A[r] * INV[A[r, c]] % P
        others = np.flatnonzero(A[:, c])
        others = others[others != r]
        if others.size:
            A[others] = (A[others] - np.outer(A[others, c], A[r])) % P
        pivots.append(c)
        r += 1
    if keep_rest:
        return A, pivots
    return A[:r], pivots


def rank(mat) -> int:
    if len(mat) == 0:
        return 0
    return len(rref(mat)[1])


def inverse(mat):
    A = np.array(mat, dtype=np.int64) % P
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("matrix must be square")
    R, piv = rref(np.hstack([A, np.eye(n, dtype=np.int64)]), ncols=n)
    if piv != list(range(n)):
        raise ZeroDivisionError("matrix is singular over GF(5)")
    return R[:, n:]


def det(mat) -> int:
    A = np.array(mat, dtype=np.int64) % P
    n = A.shape[0]
    d = 1
    for c in range(n):
        nz = np.flatnonzero(A[c:, c])
        if nz.size == 0:
            return 0
        p = c + nz[0]
        if p != c:
            A[[c, p]] = A[[p, c]]
            d = -d
        d = d * A[c, c] % P
        inv = INV[A[c, c]]
        below = A[c + 1:, c] * inv % P
        A[c + 1:] = (A[c + 1:] - np.outer(below, A[c])) % P
    return int(d % P)


def reduce_vector(vec, R, pivots):
    """Reduce ``vec`` modulo the row space of an RREF matrix."""
    v = np.array(vec, dtype=np.int64) % P
    for row, c in zip(R, pivots):
        if v[c]:
            v = (v - v[c] * row) % P
    return v
