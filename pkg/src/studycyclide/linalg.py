"""Small dense linear algebra over exact rationals or floats.

Exact inputs (int/Fraction entries) go through fraction-free style Gaussian
elimination with deterministic pivoting, so ranks, nullspaces and inertia are
certificates rather than estimates.  Float inputs use numpy with a single
centralized rank policy: relative singular-value gap ``RANK_GAP``.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

RANK_GAP = 1e-8


def is_exact(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def matrix_is_exact(rows) -> bool:
    return all(is_exact(v) for row in rows for v in row)


def _as_fractions(rows):
    return [[Fraction(v) for v in row] for row in rows]


def rref(rows):
    """Reduced row echelon form of an exact matrix.

    Returns (rref_rows, pivot_columns).  Deterministic: the pivot is the
    first nonzero entry scanning down each column.
    """
    mat = _as_fractions(rows)
    if not mat:
        return [], []
    nrows, ncols = len(mat), len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if mat[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pv = mat[r][c]
        mat[r] = [v / pv for v in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return mat, pivots


def rank(rows, tol: float | None = None) -> int:
    """Rank of a matrix; exact when entries are rational and tol is None."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    if tol is None and matrix_is_exact(rows):
        _, pivots = rref(rows)
        return len(pivots)
    arr = np.array(rows, dtype=float)
    svals = np.linalg.svd(arr, compute_uv=False)
    if svals.size == 0 or svals[0] == 0.0:
        return 0
    gap = RANK_GAP if tol is None else tol
    return int(np.sum(svals > svals[0] * gap))


def nullspace(rows, tol: float | None = None):
    """Basis of the right nullspace, canonical and deterministic.

    Exact path: RREF back-substitution (free variables set to 1 in turn).
    Float path: trailing right-singular vectors under the rank policy.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    if tol is None and matrix_is_exact(rows):
        red, pivots = rref(rows)
        free = [c for c in range(ncols) if c not in pivots]
        basis = []
        for fc in free:
            vec = [Fraction(0)] * ncols
            vec[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                vec[pc] = -red[r][fc]
            basis.append(vec)
        return basis
    arr = np.array(rows, dtype=float)
    _, svals, vt = np.linalg.svd(arr)
    gap = RANK_GAP if tol is None else tol
    if svals.size == 0 or svals[0] == 0.0:
        rk = 0
    else:
        rk = int(np.sum(svals > svals[0] * gap))
    return [list(vt[i]) for i in range(rk, ncols)]


def solve_linear(rows, rhs):
    """One exact solution of A x = b, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    ncols = len(rows[0])
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][-1]
    return x


def symmetric_inertia(mat):
    """Inertia (n_plus, n_minus, n_zero) of an exact symmetric matrix.

    Congruence diagonalization over the rationals; the standard row+column
    trick handles zero diagonal blocks.
    """
    m = _as_fractions(mat)
    n = len(m)
    pos = neg = 0
    k = 0
    while k < n:
        if m[k][k] == 0:
            swap = None
            for i in range(k + 1, n):
                if m[i][i] != 0:
                    swap = i
                    break
            if swap is not None:
                for j in range(n):
                    m[k][j], m[swap][j] = m[swap][j], m[k][j]
                for i in range(n):
                    m[i][k], m[i][swap] = m[i][swap], m[i][k]
            else:
                off = None
                for i in range(k + 1, n):
                    if m[k][i] != 0:
                        off = i
                        break
                if off is None:
                    k += 1
                    continue
                for j in range(n):
                    m[k][j] += m[off][j]
                for i in range(n):
                    m[i][k] += m[i][off]
        piv = m[k][k]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if m[i][k] != 0:
                f = m[i][k] / piv
                for j in range(n):
                    m[i][j] -= f * m[k][j]
                for j in range(n):
                    m[j][i] -= f * m[j][k]
        k += 1
    return pos, neg, n - pos - neg


def float_inertia(mat, tol: float | None = None):
    arr = np.array(mat, dtype=float)
    eig = np.linalg.eigvalsh(arr)
    scale = np.max(np.abs(eig)) if eig.size else 0.0
    gap = RANK_GAP if tol is None else tol
    cut = scale * gap
    pos = int(np.sum(eig > cut))
    neg = int(np.sum(eig < -cut))
    return pos, neg, len(eig) - pos - neg


def inertia(mat, tol: float | None = None):
    if tol is None and matrix_is_exact(mat):
        return symmetric_inertia(mat)
    return float_inertia(mat, tol)


def span_equal(rows_a, rows_b, tol: float | None = None) -> bool:
    """Do two row sets span the same subspace?"""
    ra = rank(rows_a, tol)
    rb = rank(rows_b, tol)
    if ra != rb:
        return False
    stacked = [list(r) for r in rows_a] + [list(r) for r in rows_b]
    return rank(stacked, tol) == ra


def principal_angles(rows_a, rows_b):
    """Principal angles (radians) between the row spans, float."""
    qa, _ = np.linalg.qr(np.array(rows_a, dtype=float).T)
    qb, _ = np.linalg.qr(np.array(rows_b, dtype=float).T)
    svals = np.linalg.svd(qa.T @ qb, compute_uv=False)
    svals = np.clip(svals, -1.0, 1.0)
    return np.arccos(svals)


def subspace_distance(rows_a, rows_b) -> float:
    """Largest principal angle between two row spans."""
    angles = principal_angles(rows_a, rows_b)
    return float(np.max(angles)) if angles.size else 0.0
