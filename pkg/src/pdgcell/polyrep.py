"""The faithful polynomial module for the cyclotomic nilHecke algebra, over
F_p: the quotient k[y_1, ..., y_n] / (h_a(y_1..y_n) : a > l-n), with the
staircase monomials { y^r : 0 <= r_k <= l-k } as normal-form basis.

Dots act by multiplication, crossings by divided differences.  The ideal is
symmetric, so divided differences descend to the quotient.  The rewriting rule
is y_k^(l-k+1) -> y_k^(l-k+1) - h_{l-k+1}(y_1..y_k): in the quotient,
h_a(y_1..y_k) = 0 whenever a > l-k, and the subtraction strictly lowers the
y_k-degree.  Dimension l!/(l-n)! is asserted at build time.
"""

from functools import lru_cache
from itertools import product
import math

import numpy as np


def _monomial_mul(m1, m2):
    return tuple(a + b for a, b in zip(m1, m2))


def _h_complete(a, k):
    """Complete homogeneous symmetric polynomial h_a(y_1..y_k) as a dict
    {exponent tuple of length k : 1}."""
    out = {}
    def rec(prefix, rem, start):
        if len(prefix) == k:
            if rem == 0:
                out[tuple(prefix)] = out.get(tuple(prefix), 0) + 1
            return
        # exponents of a monomial of degree a in y_1..y_k: all compositions
        for e in range(rem, -1, -1):
            rec(prefix + [e], rem - e, start)
    rec([], a, 0)
    return out


class PolyModule:
    """Staircase basis + reduction table + generator actions for fixed
    (n, l, p)."""

    def __init__(self, n, l, p):
        if not 1 <= n <= l:
            raise ValueError("need 1 <= n <= l")
        self.n, self.l, self.p = n, l, p
        self.basis = sorted(product(*[range(l - k + 1) for k in range(1, n + 1)]))
        assert len(self.basis) == math.factorial(l) // math.factorial(l - n)
        self.index = {m: i for i, m in enumerate(self.basis)}
        self.dim = len(self.basis)
        self._nf_cache = {}
        # generator action matrices (columns = images of basis vectors)
        self.dot_mats = [self._dot_matrix(i) for i in range(1, n + 1)]
        self.cross_mats = [self._cross_matrix(i) for i in range(1, n)]

    # -- normal form -------------------------------------------------------

    def _is_staircase(self, mono):
        return all(mono[k] <= self.l - (k + 1) for k in range(self.n))

    def normal_form_monomial(self, mono):
        """Normal form of the monomial y^mono as {staircase monomial: coeff}."""
        mono = tuple(mono)
        if self._is_staircase(mono):
            return {mono: 1}
        cached = self._nf_cache.get(mono)
        if cached is not None:
            return cached
        p = self.p
        # reduce the largest offending variable
        k = max(kk for kk in range(self.n) if mono[kk] > self.l - (kk + 1))
        cap = self.l - (k + 1) + 1  # rewrite y_{k+1}^cap
        rest = list(mono)
        rest[k] -= cap
        rest = tuple(rest)
        # y_{k+1}^cap = y_{k+1}^cap - h_cap(y_1..y_{k+1}); the leading term
        # cancels, leaving minus the other monomials of h_cap
        out = {}
        for hm, c in _h_complete(cap, k + 1).items():
            full = tuple(list(hm) + [0] * (self.n - k - 1))
            if hm[k] == cap:
                continue
            term = _monomial_mul(rest, full)
            for m2, c2 in self.normal_form_monomial(term).items():
                out[m2] = (out.get(m2, 0) - c * c2) % p
        out = {m: c for m, c in out.items() if c}
        self._nf_cache[mono] = out
        return out

    def normal_form(self, poly):
        """poly: {monomial: coeff} -> reduced {staircase monomial: coeff}."""
        out = {}
        for m, c in poly.items():
            for m2, c2 in self.normal_form_monomial(m).items():
                out[m2] = (out.get(m2, 0) + c * c2) % self.p
        return {m: c for m, c in out.items() if c}

    def to_vector(self, poly):
        v = np.zeros(self.dim, dtype=np.int64)
        for m, c in self.normal_form(poly).items():
            v[self.index[m]] = c % self.p
        return v

    # -- generator actions -------------------------------------------------

    def _dot_matrix(self, i):
        mat = np.zeros((self.dim, self.dim), dtype=np.int64)
        for col, mono in enumerate(self.basis):
            m = list(mono)
            m[i - 1] += 1
            for m2, c in self.normal_form_monomial(tuple(m)).items():
                mat[self.index[m2], col] = c
        return mat

    def _cross_matrix(self, i):
        mat = np.zeros((self.dim, self.dim), dtype=np.int64)
        for col, mono in enumerate(self.basis):
            for m2, c in self.normal_form(_divided_difference(mono, i)).items():
                mat[self.index[m2], col] = c % self.p
        return mat

    def act_dot(self, i, v):
        if not 1 <= i <= self.n:
            raise IndexError("dot index out of range")
        return (self.dot_mats[i - 1] @ v) % self.p

    def act_crossing(self, i, v):
        if not 1 <= i <= self.n - 1:
            raise IndexError("crossing index out of range")
        return (self.cross_mats[i - 1] @ v) % self.p


def _divided_difference(mono, i):
    """(f - s_i f)/(y_i - y_{i+1}) for a single monomial f = y^mono, as a
    polynomial dict with integer coefficients.

    For f = y_i^a y_{i+1}^b g (g symmetric-free of i, i+1):
      d(f) = g * y_i^? ...  computed from the two-variable case:
      d(y_i^a y_{i+1}^b) = sign * sum of y_i^c y_{i+1}^d with c+d = a+b-1
      between the exponents.
    """
    a, b = mono[i - 1], mono[i]
    out = {}
    if a == b:
        return out
    sign = 1 if a > b else -1
    lo, hi = min(a, b), max(a, b)
    for c in range(lo, hi):
        m = list(mono)
        m[i - 1], m[i] = c, a + b - 1 - c
        out[tuple(m)] = out.get(tuple(m), 0) + sign
    return out


@lru_cache(maxsize=None)
def build_polymodule(n, l, p):
    return PolyModule(n, l, p)
