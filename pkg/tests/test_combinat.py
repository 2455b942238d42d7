"""Combinatorial layer: counts against closed formulas, order axioms, and
round trips."""

import math
from itertools import permutations

from hypothesis import given, settings
from hypothesis import strategies as st

from pdgcell import combinat


def test_partition_counts():
    for l in range(1, 7):
        for n in range(0, l + 1):
            parts = combinat.enumerate_partitions(n, l)
            assert len(parts) == math.comb(l, n)
            assert len(set(p.entries for p in parts)) == len(parts)


def test_chain_order_refines_dominance():
    # earlier in the enumeration = more dominant (never dominated by a later one)
    for (n, l) in ((2, 4), (3, 5), (2, 5)):
        parts = combinat.enumerate_partitions(n, l)
        for i, lam in enumerate(parts):
            for mu in parts[i + 1:]:
                assert not (combinat.dominance_geq(mu, lam) and mu != lam)


def test_dominance_partial_order():
    parts = combinat.enumerate_partitions(2, 5)
    for a in parts:
        assert combinat.dominance_geq(a, a)
        for b in parts:
            if combinat.dominance_geq(a, b) and combinat.dominance_geq(b, a):
                assert a == b
            for c in parts:
                if combinat.dominance_geq(a, b) and combinat.dominance_geq(b, c):
                    assert combinat.dominance_geq(a, c)


@settings(max_examples=50, deadline=None)
@given(st.permutations(list(range(1, 5))))
def test_reduced_word_rebuilds_the_permutation(wl):
    w = tuple(wl)
    rw = combinat.reduced_word(w)
    assert len(rw) == combinat.perm_length(w)
    out = combinat.perm_identity(4)
    for i in rw:
        si = tuple(
            i + 1 if x == i else (i if x == i + 1 else x)
            for x in combinat.perm_identity(4)
        )
        out = combinat.perm_compose(out, si)
    assert out == w


def test_tableau_counts():
    # tableaux of a fixed one-box-per-slot shape = orderings of the boxes
    for (n, l) in ((2, 3), (2, 4), (3, 4)):
        for lam in combinat.enumerate_partitions(n, l):
            assert len(combinat.all_tableaux(lam)) == math.factorial(n)
        # T_lam is the disjoint union of the per-weight lower sets
        for lam in combinat.enumerate_partitions(n, l):
            assert len(combinat.big_tab_lower(lam)) == sum(
                len(combinat.tab_lower(lam, mu))
                for mu in combinat.enumerate_partitions(n, l)
            )


def test_big_tab_lower_shapes_below():
    for lam in combinat.enumerate_partitions(2, 4):
        for t in combinat.big_tab_lower(lam):
            assert combinat.dominance_geq(lam, t.shape)


def test_decomposition_census():
    # surviving idempotents: prefix sums b_1+...+b_k <= k*? criterion check
    for (n, l, want) in ((2, 3, 5), (2, 4, 9), (3, 3, 5)):
        assert len(combinat.nonzero_decompositions(n, l)) == want
        for b in combinat.nonzero_decompositions(n, l):
            assert combinat.idempotent_nonzero(b)


def test_restricted_round_trip():
    for lam in combinat.enumerate_partitions(2, 4):
        for t in combinat.big_tab_lower(lam):
            mt = combinat.tableau_to_restricted(lam, t)
            assert mt.is_restricted()
            back = combinat.restricted_to_tableau(mt)
            assert back == t


def test_multistandard_contains_restricted():
    for (n, l) in ((2, 3), (2, 4)):
        for lam in combinat.enumerate_partitions(n, l):
            full = combinat.multistandard(lam)
            restricted = combinat.multistandard(lam, restricted=True)
            assert set(restricted) <= set(full)
            assert len(restricted) == len(combinat.big_tab_lower(lam))


def test_degree_statistic():
    # the distinguished tableau has the extreme degree among its shape class
    for lam in combinat.enumerate_partitions(2, 4):
        tlam = combinat.Tableau.standard(lam)
        degs = [t.degree() for t in combinat.all_tableaux(lam)]
        assert tlam.degree() == max(degs)
