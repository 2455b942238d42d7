"""Laurent/cyclotomic arithmetic against independent sympy oracles and
ring-axiom property tests."""

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from pdgcell.coeff import (
    IntLaurent,
    OpScalar,
    cyclotomic_psi_q2,
    quantum_binomial_laurent,
    quantum_integer,
    quantum_integer_laurent,
)

q = sympy.Symbol("q")


def to_sympy(x):
    return sum((c * q ** e for e, c in x.items()), sympy.S.Zero)


laurents = st.dictionaries(
    st.integers(-6, 6), st.integers(-9, 9), max_size=5
).map(IntLaurent)


@settings(max_examples=60, deadline=None)
@given(laurents, laurents, laurents)
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a - a == IntLaurent.zero()


@settings(max_examples=40, deadline=None)
@given(laurents)
def test_bar_is_an_involution(a):
    assert a.bar().bar() == a
    assert to_sympy(a.bar()) == to_sympy(a).subs(q, 1 / q).expand()


def test_quantum_integer_oracle():
    # [m] = (q^m - q^-m)/(q - q^-1), balanced
    for m in range(-6, 7):
        want = sympy.cancel((q ** m - q ** -m) / (q - 1 / q))
        assert sympy.expand(to_sympy(quantum_integer_laurent(m)) - want) == 0


def test_quantum_binomial_oracle():
    for a in range(0, 7):
        for b in range(0, a + 1):
            got = to_sympy(quantum_binomial_laurent(a, b))
            want = sympy.S.One
            for i in range(1, b + 1):
                want *= (q ** (a - b + i) - q ** -(a - b + i)) / (q ** i - q ** -i)
            assert sympy.cancel(got - want) == 0


def test_cyclotomic_oracle():
    for p in (3, 5, 7):
        got = to_sympy(cyclotomic_psi_q2(p))
        want = sympy.cyclotomic_poly(p, q ** 2)
        assert sympy.expand(got - want) == 0


def test_quantum_p_vanishes_at_the_root():
    # [p] = q^(1-p) * Psi_p(q^2), so it dies in O_p
    for p in (3, 5, 7):
        assert not quantum_integer(p, p)
        assert quantum_integer(p - 1, p)


def test_unit_detection():
    for p in (3, 5):
        assert OpScalar(p, IntLaurent.q(4)).is_unit()
        assert OpScalar(p, IntLaurent.q(0, -1)).is_unit()
        assert not OpScalar(p, IntLaurent.zero()).is_unit()
        assert not quantum_integer(p, p).is_unit()
