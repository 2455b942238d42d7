"""Dense exact linear algebra over the prime field F_p, on numpy int64 arrays.

Everything here is elementary row reduction; matrices stay small (a few
hundred rows at most), so no attempt is made to be clever.
"""

import numpy as np


def asmod(a, p):
    return np.asarray(a, dtype=np.int64) % p


def inv_mod(a, p):
    return pow(int(a) % p, p - 2, p)


def matmul(a, b, p):
    return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % p


def rref(a, p):
    """Reduced row echelon form.  Returns (R, pivot_columns)."""
    m = asmod(a, p).copy()
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        piv = None
        for rr in range(r, rows):
            if m[rr, c] % p:
                piv = rr
                break
        if piv is None:
            continue
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = (m[r] * inv_mod(m[r, c], p)) % p
        nz = np.nonzero(m[:, c])[0]
        nz = nz[nz != r]
        if nz.size:
            m[nz] = (m[nz] - np.outer(m[nz, c], m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a, p):
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(a, p):
    """Basis of {x : a @ x = 0}, as columns of the returned matrix."""
    a = asmod(a, p)
    rows, cols = a.shape
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    r, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for i, pc in enumerate(pivots):
            basis[pc, k] = (-r[i, fc]) % p
    return basis


def solve(a, b, p):
    """One solution x of a @ x = b (b may be a matrix of stacked columns);
    returns None if inconsistent."""
    a = asmod(a, p)
    b = asmod(b, p)
    single = b.ndim == 1
    if single:
        b = b[:, None]
    aug = np.concatenate([a, b], axis=1)
    r, pivots = rref(aug, p)
    cols = a.shape[1]
    if any(pc >= cols for pc in pivots):
        return None
    x = np.zeros((cols, b.shape[1]), dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = r[i, cols:]
    return x[:, 0] if single else x


def column_space_pivots(a, p):
    """Indices of a maximal independent subset of the columns of a."""
    return rref(a, p)[1]


def in_span(basis_cols, v, p):
    """Is v in the column span of basis_cols?"""
    return solve(basis_cols, v, p) is not None


class Solver:
    """Precomputed least-change solver for a fixed full-column-rank matrix M:
    solves M x = v repeatedly by inverting a pivot-row square submatrix."""

    def __init__(self, m, p):
        self.p = p
        self.m = asmod(m, p)
        rows, cols = self.m.shape
        _, piv_cols = rref(self.m.T, p)  # pivot columns of M^T = pivot rows of M
        if len(piv_cols) != cols:
            raise ValueError("matrix does not have full column rank")
        self.rows = list(piv_cols)
        sq = self.m[self.rows, :]
        self.inv = _inverse(sq, p)

    def __call__(self, v, check=True):
        v = asmod(v, self.p)
        x = (self.inv @ v[self.rows]) % self.p
        if check and not np.array_equal((self.m @ x) % self.p, v):
            raise ValueError("vector not in span")
        return x


def _inverse(a, p):
    n = a.shape[0]
    aug = np.concatenate([asmod(a, p), np.eye(n, dtype=np.int64)], axis=1)
    r, pivots = rref(aug, p)
    if pivots != list(range(n)):
        raise ValueError("matrix not invertible mod %d" % p)
    return r[:, n:]
