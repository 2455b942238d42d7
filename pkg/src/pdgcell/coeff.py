"""Exact scalar arithmetic: Laurent polynomials in q over Z, and the quotient
O_p = Z[q]/(Psi_p(q^2)) where Psi_p is the p-th cyclotomic polynomial.

Graded dimensions and K0 coefficients live here.  Elements of O_p are kept in
a canonical normal form (q-exponents in the window [0, 2p-3]) so that equality
is plain coefficient comparison.
"""

from fractions import Fraction


def is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeConfig:
    """Just a checked odd prime p."""

    def __init__(self, p):
        if not is_prime(p) or p < 3:
            raise ValueError("p must be an odd prime, got %r" % (p,))
        self.p = p

    def __repr__(self):
        return "PrimeConfig(%d)" % self.p


class IntLaurent:
    """An element of Z[q, q^-1], stored as {exponent: nonzero int}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        self.coeffs = {e: c for e, c in coeffs.items() if c != 0}

    @classmethod
    def q(cls, exponent=1, coeff=1):
        return cls({exponent: coeff})

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def zero(cls):
        return cls()

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntLaurent({0: other})
        return isinstance(other, IntLaurent) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = IntLaurent({0: other})
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return IntLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return IntLaurent({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntLaurent({0: other})
        return self + (-other)

    def __rsub__(self, other):
        return IntLaurent({0: other}) - self

    def __mul__(self, other):
        if isinstance(other, int):
            other = IntLaurent({0: other})
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return IntLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = IntLaurent.one()
        for _ in range(k):
            out = out * self
        return out

    def subs_one(self):
        """Evaluate at q = 1."""
        return sum(self.coeffs.values())

    def min_exp(self):
        return min(self.coeffs) if self.coeffs else 0

    def max_exp(self):
        return max(self.coeffs) if self.coeffs else 0

    def bar(self):
        """q -> q^-1."""
        return IntLaurent({-e: c for e, c in self.coeffs.items()})

    def items(self):
        return sorted(self.coeffs.items())

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs.items()):
            if e == 0:
                parts.append(str(c))
            else:
                mono = "q" if e == 1 else "q^%d" % e
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append("-" + mono)
                else:
                    parts.append("%d*%s" % (c, mono))
        return " + ".join(parts).replace("+ -", "- ")


def cyclotomic_psi_q2(p):
    """Psi_p(q^2) = 1 + q^2 + ... + q^(2p-2) as an IntLaurent."""
    return IntLaurent({2 * i: 1 for i in range(p)})


class OpScalar:
    """An element of O_p = Z[q]/(Psi_p(q^2)), canonical representative with
    q-exponents in [0, 2p-3].

    Negative exponents are cleared using the unit q^2: from Psi_p(q^2) = 0 we
    get q^-2 = -(1 + q^2 + ... + q^(2p-4)).
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p, laurent):
        if isinstance(p, PrimeConfig):
            p = p.p
        self.p = p
        if not isinstance(laurent, IntLaurent):
            laurent = IntLaurent({0: int(laurent)})
        self.coeffs = _reduce_window(laurent, p)

    # -- ring structure ----------------------------------------------------

    def _lift(self):
        return IntLaurent(self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        return OpScalar(self.p, self._lift() + other._lift())

    __radd__ = __add__

    def __neg__(self):
        return OpScalar(self.p, -self._lift())

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return OpScalar(self.p, self._lift() * other._lift())

    __rmul__ = __mul__

    def __pow__(self, k):
        out = OpScalar(self.p, 1)
        for _ in range(k):
            out = out * self
        return out

    def _coerce(self, other):
        if isinstance(other, OpScalar):
            assert other.p == self.p
            return other
        return OpScalar(self.p, other)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, IntLaurent)):
            other = OpScalar(self.p, other)
        return (
            isinstance(other, OpScalar)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, frozenset(self.coeffs.items())))

    def items(self):
        return sorted(self.coeffs.items())

    def is_unit(self):
        """True iff self is invertible in O_p.

        O_p is a free Z-module of rank 2p-2; multiplication by self is an
        integer matrix, and self is a unit iff that matrix is in GL over Z,
        i.e. has determinant +-1.
        """
        d = 2 * self.p - 2
        cols = []
        for j in range(d):
            prod = OpScalar(self.p, self._lift() * IntLaurent.q(j))
            cols.append([prod.coeffs.get(i, 0) for i in range(d)])
        det = _int_det([[cols[j][i] for j in range(d)] for i in range(d)])
        return det in (1, -1)

    def __repr__(self):
        return "O_%d(%s)" % (self.p, IntLaurent(self.coeffs))


def _reduce_window(x, p):
    """Canonical representative of x in Z[q]/(Psi_p(q^2)): exponents in
    [0, 2p-3]."""
    coeffs = dict(x.coeffs)
    top = 2 * p - 2  # q^top = -(1 + q^2 + ... + q^(top-2))
    # clear negative exponents: q^-2 = -(sum_{i=0}^{p-2} q^{2i})
    while coeffs and min(coeffs) < 0:
        e = min(coeffs)
        c = coeffs.pop(e)
        if c == 0:
            continue
        for i in range(p - 1):
            e2 = e + 2 + 2 * i
            coeffs[e2] = coeffs.get(e2, 0) - c
    # clear exponents >= 2p-2 by the defining relation
    while coeffs and max(coeffs) >= top:
        e = max(coeffs)
        c = coeffs.pop(e)
        if c == 0:
            continue
        for i in range(p - 1):
            e2 = e - top + 2 * i
            coeffs[e2] = coeffs.get(e2, 0) - c
    return {e: c for e, c in coeffs.items() if c != 0}


def _int_det(rows):
    """Exact determinant of a square integer matrix (fraction-free enough via
    Fractions; sizes here are at most 2p-2 <= 12)."""
    m = [[Fraction(v) for v in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] * inv
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    assert det.denominator == 1
    return det.numerator


def reduce_cyclotomic(x, p):
    """Canonical image of x in O_p."""
    return OpScalar(p, x)


def quantum_integer_laurent(m):
    """[m] = q^(1-m) + q^(3-m) + ... + q^(m-1) in Z[q,q^-1]; [-m] = -[m]."""
    if m < 0:
        return -quantum_integer_laurent(-m)
    return IntLaurent({1 - m + 2 * i: 1 for i in range(m)})


def quantum_integer(m, p):
    return OpScalar(p, quantum_integer_laurent(m))


def quantum_binomial_laurent(a, b):
    """Gaussian binomial [a choose b] in Z[q,q^-1] by the q-Pascal recursion
    [a b] = q^b [a-1 b] + q^(b-a) [a-1 b-1]."""
    if b < 0 or b > a:
        raise ValueError("need 0 <= b <= a, got (%d, %d)" % (a, b))
    row = [IntLaurent.one()]
    for aa in range(1, a + 1):
        new = [IntLaurent.one()]
        for bb in range(1, aa):
            new.append(
                IntLaurent.q(bb) * row[bb] + IntLaurent.q(bb - aa) * row[bb - 1]
            )
        new.append(IntLaurent.one())
        row = new
    return row[b]


def quantum_binomial(a, b, p):
    return OpScalar(p, quantum_binomial_laurent(a, b))
