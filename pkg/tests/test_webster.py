"""Red-strand diagram algebra model: census, chain, corner comparison with
the Schur layer, and differential axioms via the module-matrix oracle."""

import math

import numpy as np
import pytest

from pdgcell import combinat
from pdgcell.schur import build_schur
from pdgcell.webster import build_webster, dot_reduction_report


@pytest.fixture(scope="module", params=[(2, 3), (2, 4)], ids=str)
def W(request):
    n, l = request.param
    return build_webster(n, l, 5)


def test_census(W):
    want = sum(
        len(combinat.multistandard(lam)) ** 2 for lam in W.partitions
    )
    assert W.dim == want == {(2, 3): 89, (2, 4): 439}[(W.n, W.l)]
    assert len(W.summands) == {(2, 3): 5, (2, 4): 9}[(W.n, W.l)]


def test_big_block_corner_is_nilhecke(W):
    assert W.corner_dimension() == math.comb(W.l, W.n) * math.factorial(W.n) ** 2


def test_chain(W):
    assert W.chain_report()["ok"]


def test_corner_equals_schur(W):
    S = build_schur(W.n, W.l, W.p)
    rep = W.corner_report(S)
    assert rep["ok"], rep
    assert rep["corner_dim"] == S.dim
    assert dot_reduction_report(S)["ok"]


def test_differential_matrix_oracle(W):
    # z_{df} realizes the commutator [D, M_f] in the module realization,
    # for every basis element: this is the derivation property in matrix form
    ctx = W.ctx
    dmods = {b: ctx.modules[b].dmat for b in W.summands}
    for (_lam, _t, _s, f) in W.basis:
        mf = ctx.hom_matrix(f)
        mdf = ctx.hom_matrix(f.d())
        comm = (dmods[f.tgt] @ mf - mf @ dmods[f.src]) % W.p
        assert np.array_equal(mdf % W.p, comm)


def test_d_power_p_vanishes(W):
    D = np.zeros((W.dim, W.dim), dtype=np.int64)
    for k, (_lam, _t, _s, f) in enumerate(W.basis):
        D[:, k] = W.expand(f.d())
    dp = np.eye(W.dim, dtype=np.int64)
    for _ in range(W.p):
        dp = D @ dp % W.p
    assert not dp.any()
