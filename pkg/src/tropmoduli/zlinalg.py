"""Exact integer linear algebra.

Small dense matrices only.  Everything here works on numpy arrays with an
integer dtype; when entries threaten to overflow int64 the computation is
redone with ``dtype=object`` (Python integers), so results are always exact.
Row vectors are the convention throughout: a lattice is the row span.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

import numpy as np

_LIMIT = 1 << 30


def as_int_matrix(rows, ncols: int | None = None) -> np.ndarray:
    a = np.array(rows, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1) if a.size else np.zeros((0, ncols or 0), dtype=np.int64)
    return a


def _needs_object(a: np.ndarray) -> bool:
    return a.dtype != object and a.size and int(np.abs(a).max()) >= _LIMIT


def primitive_rows(a: np.ndarray) -> np.ndarray:
    """Divide every row by the gcd of its entries (zero rows untouched)."""
    if a.size == 0:
        return a
    g = np.gcd.reduce(a, axis=1) if a.dtype != object else np.array(
        [_gcd_list(r) for r in a], dtype=object)
    g = np.where(g == 0, 1, g)
    return a // g.reshape(-1, 1)


def _gcd_list(vals) -> int:
    g = 0
    for v in vals:
        g = gcd(g, int(v))
    return g


def echelon(a: np.ndarray, ncols_pivot: int | None = None):
    """Fraction-free Gauss-Jordan elimination.

    Pivots are searched only among the first ``ncols_pivot`` columns (all by
    default).  Returns (reduced matrix, pivot column list).  In the result
    every pivot row has its pivot entry equal to the common value ``d`` and
    the pivot columns are ``d`` times unit vectors.
    """
    a = np.array(a, copy=True)
    if a.dtype != object:
        a = a.astype(np.int64)
    nrows, ncols = a.shape if a.ndim == 2 else (0, 0)
    limit = ncols if ncols_pivot is None else ncols_pivot
    pivots: List[int] = []
    r = 0
    prev = 1
    for c in range(limit):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        piv = a[r, c]
        if a.dtype != object and (_needs_object(a) or abs(int(piv)) >= _LIMIT):
            return echelon(a.astype(object), ncols_pivot)
        others = np.arange(nrows) != r
        col = a[others, c].reshape(-1, 1)
        num = piv * a[others] - col * a[r]
        q, rem = np.divmod(num, prev)
        if np.any(rem != 0):  # should never happen for Bareiss-type updates
            raise ArithmeticError("inexact fraction-free step")
        a[others] = q
        prev = piv
        pivots.append(c)
        r += 1
    # all pivot entries now equal the last pivot (a property of Bareiss GJ)
    return a, pivots


def rank(rows) -> int:
    a = as_int_matrix(rows)
    if a.size == 0:
        return 0
    return len(echelon(a)[1])


def nullspace(rows) -> np.ndarray:
    """Integer basis (as rows, primitive) of {x : rows @ x = 0}."""
    a = as_int_matrix(rows)
    n = a.shape[1]
    if a.size == 0 or not np.any(a):
        return np.eye(n, dtype=np.int64)
    red, piv = echelon(a)
    free = [c for c in range(n) if c not in piv]
    out = []
    for f in free:
        v = [0] * n
        # every pivot entry equals the same d, so x_f = d, x_p = -red[i, f]
        v[f] = int(red[0, piv[0]])
        for i, p in enumerate(piv):
            v[p] = -int(red[i, f])
        out.append(v)
    if not out:
        return np.zeros((0, n), dtype=np.int64)
    res = np.array(out, dtype=object)
    res = primitive_rows(res)
    if int(np.abs(res).max()) < _LIMIT:
        res = res.astype(np.int64)
    return res


def solve_support(basis_cols: np.ndarray, targets: np.ndarray) -> np.ndarray:
    """Coefficients of targets in terms of independent columns, up to scale.

    ``basis_cols`` is D x m of full column rank and ``targets`` is D x s with
    every column in the column span.  Returns an m x s integer matrix whose
    zero pattern is that of the exact rational coefficients.
    """
    m = basis_cols.shape[1]
    mat = np.concatenate([basis_cols, targets], axis=1)
    red, piv = echelon(mat, ncols_pivot=m)
    if len(piv) != m:
        raise ValueError("basis columns are dependent")
    return red[:m, m:]


def is_zero_vector(v) -> bool:
    return not np.any(v)


# ---------------------------------------------------------------------------
# Smith normal form with column transforms


def smith(a) -> Tuple[List[int], np.ndarray]:
    """Diagonalize an integer matrix by unimodular row and column moves.

    Returns (d, W) where d lists the nonzero diagonal entries and W is a
    unimodular n x n matrix (Python ints) such that the row lattice of ``a``
    equals the span of d[i] * W[i] for i < len(d).  In particular the first
    len(d) rows of W are a basis of the saturation of the row lattice.
    """
    m = [[int(x) for x in row] for row in np.asarray(a, dtype=object)]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    w = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    diag: List[int] = []
    t = 0
    while t < min(nrows, ncols):
        # pick the nonzero entry of smallest absolute value in the submatrix
        best = None
        for i in range(t, nrows):
            row = m[i]
            for j in range(t, ncols):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        m[t], m[i] = m[i], m[t]
        if j != t:
            for row in m:
                row[t], row[j] = row[j], row[t]
            w[t], w[j] = w[j], w[t]
        while True:
            piv = m[t][t]
            done = True
            # clear column t with row operations
            for i in range(t + 1, nrows):
                v = m[i][t]
                if v:
                    q = v // piv
                    if q:
                        rt = m[t]
                        m[i] = [x - q * y for x, y in zip(m[i], rt)]
                    if m[i][t]:
                        done = False
            # clear row t with column operations (track in w)
            for j in range(t + 1, ncols):
                v = m[t][j]
                if v:
                    q = v // piv
                    if q:
                        for row in m:
                            if row[t]:
                                row[j] -= q * row[t]
                        wt = w[t]
                        w[t] = [x + q * y for x, y in zip(wt, w[j])]
                    if m[t][j]:
                        done = False
            if done:
                break
            # move a smaller remainder into the pivot position
            best = None
            for i in range(t, nrows):
                v = m[i][t]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, "r")
            for j in range(t, ncols):
                v = m[t][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), j, "c")
            _, k, kind = best
            if kind == "r":
                m[t], m[k] = m[k], m[t]
            else:
                for row in m:
                    row[t], row[k] = row[k], row[t]
                w[t], w[k] = w[k], w[t]
        diag.append(m[t][t])
        t += 1
    d = [abs(x) for x in diag]
    _divisibility_chain(d, w)
    return d, np.array(w, dtype=object)


def _divisibility_chain(d: List[int], w: List[List[int]]) -> None:
    """Replace diagonal pairs (a, b) by (gcd, lcm), updating the rows of w.

    With a = g a', b = g b' and x a' + y b' = 1, the lattice spanned by
    a w_i and b w_j is also spanned by g (x a' w_i + y b' w_j) and
    l (w_j - w_i), and that change of rows is unimodular.
    """
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            a, b = d[i], d[j]
            if b % a == 0:
                continue
            g, x, y = _xgcd(a, b)
            a1, b1 = a // g, b // g
            wi, wj = w[i], w[j]
            w[i] = [x * a1 * u + y * b1 * v for u, v in zip(wi, wj)]
            w[j] = [v - u for u, v in zip(wi, wj)]
            d[i], d[j] = g, a1 * b


def _xgcd(a: int, b: int):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _solve_fraction(aug, nvars):
    rows = [r[:] for r in aug]
    piv_cols = []
    ri = 0
    for c in range(nvars):
        p = next((i for i in range(ri, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[ri], rows[p] = rows[p], rows[ri]
        inv = 1 / rows[ri][c]
        rows[ri] = [x * inv for x in rows[ri]]
        for i in range(len(rows)):
            if i != ri and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[ri])]
        piv_cols.append(c)
        ri += 1
    for i in range(ri, len(rows)):
        if rows[i][-1] != 0:
            return None
    sol = [Fraction(0)] * nvars
    for i, c in enumerate(piv_cols):
        sol[c] = rows[i][-1]
    return sol


def lattice_index(gens) -> int:
    """[saturation : lattice] for the row lattice generated by ``gens``."""
    d, _ = smith(gens)
    out = 1
    for x in d:
        out *= x
    return out


def saturation_basis(gens) -> np.ndarray:
    d, w = smith(gens)
    return w[: len(d)]


def rational_solve(basis_rows, target) -> List[Fraction] | None:
    """Coefficients c with c @ basis_rows == target, or None."""
    b = [[Fraction(int(x)) for x in r] for r in basis_rows]
    mat = [list(col) for col in zip(*b)]
    aug = [mat[i] + [Fraction(int(target[i]))] for i in range(len(target))]
    return _solve_fraction(aug, len(b))
