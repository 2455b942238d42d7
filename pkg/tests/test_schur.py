"""Quiver Schur layer: hom-space basis counts, chain structure, star,
differential axioms, cell modules, decomposition data, and the one-strand
quiver family."""

import math
from collections import Counter

import numpy as np
import pytest

from pdgcell import combinat
from pdgcell.coeff import IntLaurent
from pdgcell.schur import basic_quiver_report, build_schur


@pytest.fixture(scope="module", params=[(2, 3), (2, 4)], ids=str)
def S(request):
    n, l = request.param
    # construction runs the annihilator-oracle span checks internally
    return build_schur(n, l, 5)


def test_dimension_census(S):
    want = sum(
        len(combinat.big_tab_lower(lam)) ** 2 for lam in S.partitions
    )
    assert S.dim == want
    assert want == {(2, 3): 21, (2, 4): 147}[(S.n, S.l)]


def test_chain(S):
    assert S.chain_report()["ok"]


def test_star_involution(S):
    perm = S.star_perm
    assert sorted(perm) == list(range(S.dim))
    for k in range(S.dim):
        assert perm[perm[k]] == k
        assert S.degrees[perm[k]] == S.degrees[k]


def test_star_antiautomorphism(S):
    # (fg)* = g* f* on a sample of composable basis pairs
    sc = S.structure_constants
    pairs = list(sc.items())[:: max(1, len(sc) // 200)]
    perm = S.star_perm
    for (i, j), prod in pairs:
        lhs = np.zeros(S.dim, dtype=np.int64)
        for k in np.nonzero(prod % S.p)[0]:
            lhs[perm[int(k)]] = prod[k]
        rhs = sc[(perm[j], perm[i])]
        assert np.array_equal(lhs % S.p, rhs % S.p)


def test_differential_axioms(S):
    p = S.p
    dp = np.eye(S.dim, dtype=np.int64)
    for _ in range(p):
        dp = S.dmat @ dp % p
    assert not dp.any()
    # exhaustive Leibniz through the structure-constant table
    sc = S.structure_constants
    for (i, j), prod in sc.items():
        lhs = S.dmat @ prod % p
        rhs = np.zeros(S.dim, dtype=np.int64)
        for m in np.nonzero(S.dmat[:, i] % p)[0]:
            rhs = rhs + S.dmat[m, i] * sc[(int(m), j)]
        for m in np.nonzero(S.dmat[:, j] % p)[0]:
            rhs = rhs + S.dmat[m, j] * sc[(i, int(m))]
        assert np.array_equal(lhs, rhs % p)


def test_identity_element(S):
    one = np.zeros(S.dim, dtype=np.int64)
    for lam in S.partitions:
        one = one + S.expand(S.ctx.identity(lam))
    for k in range(0, S.dim, max(1, S.dim // 40)):
        vec = np.zeros(S.dim, dtype=np.int64)
        vec[k] = 1
        assert np.array_equal(S.multiply(one, vec), vec)
        assert np.array_equal(S.multiply(vec, one), vec)


def test_cell_modules(S):
    for lam in S.partitions:
        cd = S.cell_data[lam]
        assert sum(cd["gdim_delta"].values()) == len(combinat.big_tab_lower(lam))
        # radical + simple head tile the cell module
        assert sum(cd["gdim_L"].values()) == sum(cd["gdim_delta"].values()) - cd["rad_dim"]
        assert sum(cd["gdim_L"].values()) > 0
        # differential closes to zero after p steps
        dp = np.eye(cd["dmat"].shape[0], dtype=np.int64)
        for _ in range(S.p):
            dp = cd["dmat"] @ dp % S.p
        assert not dp.any()


def test_decomposition_matrix_shape(S):
    d = S.decomposition_matrix()
    for lam in S.partitions:
        assert d[lam][lam] == IntLaurent.one()
        for mu, pol in d[lam].items():
            assert combinat.dominance_geq(lam, mu)
            assert all(c > 0 for _e, c in pol.items())


def test_corner_gdim_is_the_z_gram(S):
    # gdim of the (mu, nu) corner = sum_lam z_{mu lam} z_{nu lam}
    zrows = {lam: dict(S.z_multiplicities(lam)) for lam in S.partitions}
    for mu in S.partitions:
        for nu in S.partitions:
            acc = IntLaurent.zero()
            for lam in S.partitions:
                if lam in zrows[mu] and lam in zrows[nu]:
                    acc = acc + zrows[mu][lam] * zrows[nu][lam]
            cnt = Counter()
            for k, (_lam, t, s, _f) in enumerate(S.basis):
                if t.shape == mu and s.shape == nu:
                    cnt[S.degrees[k]] += 1
            assert acc == IntLaurent(dict(cnt))


def test_cartan_from_decomposition(S):
    d = S.decomposition_matrix()
    c = S.cartan_matrix()
    for mu in S.partitions:
        for nu in S.partitions:
            acc = IntLaurent.zero()
            for lam in S.partitions:
                a = d[lam].get(mu)
                b = d[lam].get(nu)
                if a and b:
                    acc = acc + a * b
            assert c.get((mu, nu), IntLaurent.zero()) == acc


@pytest.mark.parametrize("p", [3, 5])
def test_one_strand_quiver(p):
    for l in range(1, 6):
        rep = basic_quiver_report(l, p)
        assert rep["ok"], (l, p, rep)
        assert rep["dim"] == l * (l + 1) * (2 * l + 1) // 6
