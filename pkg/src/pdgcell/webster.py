"""The red-strand (tensor-product) diagram algebra, modeled as the
endomorphism algebra of the direct sum of the cyclic modules G[b] over all
decompositions b with surviving idempotent.  Provides the multi-tableau basis
with its cellular chain, the comparison of the partition-indexed corner with
the quiver Schur algebra, and the dot-reduction membership check.
"""

import numpy as np
from collections import Counter

from . import combinat
from .modlinalg import Solver, rank
from .nilhecke import build_algebra
from .schur import Hom, HomContext


class WebsterModel:
    """END(+_b G[b]) over the nonzero decompositions of (n, l)."""

    def __init__(self, n, l, p):
        self.n, self.l, self.p = n, l, p
        self.nh = build_algebra(n, l, p)
        self.summands = combinat.nonzero_decompositions(n, l)
        self.ctx = HomContext(self.nh, self.summands)
        self.partitions = combinat.enumerate_partitions(n, l)
        self._build_basis()
        self._index_pairs()
        self._check_spans()

    def _decomposition_of(self, mt):
        return mt.entry_decomposition()

    def _element(self, lam, t, s):
        """B^lam_{ts}: the hom G[b_s] -> G[b_t] with image
        psi_{w_t}^* y^lam psi_{w_s}."""
        nh = self.nh
        wt = combinat.reduced_word(t.matching_permutation())
        ws = combinat.reduced_word(s.matching_permutation())
        toks = [("psi", i) for i in reversed(wt)]
        toks += nh.y_power_tokens([self.l - j for j in lam.boxes])
        toks += [("psi", i) for i in ws]
        z = nh.element_from_word(toks)
        return Hom(
            self.ctx, self._decomposition_of(s), self._decomposition_of(t), z
        )

    def _build_basis(self):
        self.basis = []  # (lam, t, s, hom)
        self.layer_of = []
        self.multitableaux = {}
        for li, lam in enumerate(self.partitions):
            mts = combinat.multistandard(lam)
            self.multitableaux[lam] = mts
            for t in mts:
                for s in mts:
                    f = self._element(lam, t, s)
                    assert self.ctx.is_hom(f.z, f.src, f.tgt), (
                        "multi-tableau element fails the hom membership test"
                    )
                    self.basis.append((lam, t, s, f))
                    self.layer_of.append(li)
        self.dim = len(self.basis)
        self.index = {(lam, t, s): k for k, (lam, t, s, _f) in enumerate(self.basis)}
        self.degrees = [f.degree() for (_l, _t, _s, f) in self.basis]

    def _index_pairs(self):
        self.pair_indices = {}
        for k, (_lam, _t, _s, f) in enumerate(self.basis):
            self.pair_indices.setdefault((f.src, f.tgt), []).append(k)
        self.pair_solvers = {}
        for pair, ks in self.pair_indices.items():
            mat = np.stack([self.basis[k][3].z.vec for k in ks], axis=1)
            self.pair_solvers[pair] = Solver(mat, self.p)

    def _check_spans(self):
        """Census: per-pair counts equal the hom-space dimensions, so the
        multi-tableau elements are a basis and dim = sum of |T'_lam|^2."""
        counts = {}
        for b in self.summands:
            for c in self.summands:
                counts[(b, c)] = self.ctx.hom_space_dim(b, c)
        for pair, ks in self.pair_indices.items():
            assert counts[pair] == len(ks), ("pair dim mismatch", pair)
        total = sum(counts.values())
        census = sum(len(self.multitableaux[lam]) ** 2 for lam in self.partitions)
        assert total == self.dim == census, (total, self.dim, census)

    def expand(self, f):
        out = np.zeros(self.dim, dtype=np.int64)
        ks = self.pair_indices.get((f.src, f.tgt), [])
        if ks:
            out[ks] = self.pair_solvers[(f.src, f.tgt)](f.z.vec)
        return out

    # -- structural checks --------------------------------------------------

    def corner_dimension(self):
        """The block of the heaviest summand b0 = (0,..,0,n) is the whole
        nilHecke algebra."""
        b0 = combinat.Decomposition((0,) * (self.l - 1) + (self.n,))
        return self.ctx.hom_space_dim(b0, b0)

    def chain_report(self):
        """The multi-tableau chain ideals (layers in partition order) are
        ideals, d-stable, and star-stable."""
        layers = np.array(self.layer_of)
        report = {"ideal": True, "d_stable": True, "star_stable": True}
        for i, (_li, _ti, si, fi) in enumerate(self.basis):
            for j, (_lj, tj, _sj, fj) in enumerate(self.basis):
                if fi.src != fj.tgt:
                    continue
                prod = self.expand(self.ctx.compose(fi, fj))
                cutoff = min(self.layer_of[i], self.layer_of[j])
                if np.any(prod[layers > cutoff] % self.p):
                    report["ideal"] = False
        for k, (lam, t, s, f) in enumerate(self.basis):
            dvec = self.expand(f.d())
            if np.any(dvec[layers > self.layer_of[k]] % self.p):
                report["d_stable"] = False
            k2 = self.index[(lam, s, t)]
            if not np.array_equal(
                f.z.star().vec % self.p, self.basis[k2][3].z.vec % self.p
            ):
                report["star_stable"] = False
        report["ok"] = all(report[k] for k in ("ideal", "d_stable", "star_stable"))
        return report

    def graded_dimension_table(self):
        table = {}
        for k, (lam, _t, _s, _f) in enumerate(self.basis):
            table.setdefault(lam.serialize(), Counter())[self.degrees[k]] += 1
        return table

    # -- comparison with the Schur algebra ----------------------------------

    def corner_report(self, schur_alg):
        """The partition-indexed corner reproduces the Schur algebra: same
        basis images, structure constants, and differential under
        lam <-> (0/1 decomposition of lam)."""
        assert (schur_alg.n, schur_alg.l, schur_alg.p) == (self.n, self.l, self.p)
        to_dec = {
            lam: combinat.Decomposition(lam.entries) for lam in self.partitions
        }
        report = {"d_basis_equals_phi_basis": True, "structure": True,
                  "differential": True, "corner_dim": None, "mismatch": None}

        # D-basis = Phi-basis: each Schur basis element, transported through
        # the restricted-multi-tableau bijection, is the matching element here
        key_of = {}
        for k, (lam, t, s, f) in enumerate(schur_alg.basis):
            mt = combinat.tableau_to_restricted(lam, t)
            ms = combinat.tableau_to_restricted(lam, s)
            g = self.basis[self.index[(lam, mt, ms)]][3]
            key_of[k] = self.index[(lam, mt, ms)]
            if not np.array_equal(f.z.vec % self.p, g.z.vec % self.p):
                report["d_basis_equals_phi_basis"] = False
                report["mismatch"] = report["mismatch"] or ("basis", lam, t, s)
            assert g.src == to_dec[s.shape] and g.tgt == to_dec[t.shape]

        corner_ks = sorted(set(key_of.values()))
        report["corner_dim"] = len(corner_ks)

        # structure constants agree (compositions produce the same hom image)
        sc = schur_alg.structure_constants
        for (i, j), prod in sc.items():
            fi = self.basis[key_of[i]][3]
            fj = self.basis[key_of[j]][3]
            here = self.expand(self.ctx.compose(fi, fj))
            want = np.zeros(self.dim, dtype=np.int64)
            for k in np.nonzero(prod % self.p)[0]:
                want[key_of[int(k)]] = prod[k]
            if not np.array_equal(here % self.p, want % self.p):
                report["structure"] = False
                report["mismatch"] = report["mismatch"] or ("product", i, j)

        for k in range(schur_alg.dim):
            dvec = schur_alg.dmat[:, k]
            here = self.expand(self.basis[key_of[k]][3].d())
            want = np.zeros(self.dim, dtype=np.int64)
            for m in np.nonzero(dvec % self.p)[0]:
                want[key_of[int(m)]] = dvec[m]
            if not np.array_equal(here % self.p, want % self.p):
                report["differential"] = False
                report["mismatch"] = report["mismatch"] or ("differential", k)

        report["ok"] = (
            report["d_basis_equals_phi_basis"]
            and report["structure"]
            and report["differential"]
        )
        return report


def dot_reduction_report(schur_alg):
    """Post-composing the identity of G(lam) with a dot on any black strand
    lands in the ideal above lam (strictly more dominant layers)."""
    S = schur_alg
    layers = np.array(S.layer_of)
    report = {"ok": True, "failures": []}
    for li, lam in enumerate(S.partitions):
        for k in range(1, S.n + 1):
            z = S.nh.element_from_word(
                [("y", k)] + S.nh.y_power_tokens([S.l - j for j in lam.boxes])
            )
            f = Hom(S.ctx, lam, lam, z)
            assert S.ctx.is_hom(z, lam, lam)
            vec = S.expand(f)
            if np.any(vec[layers >= li] % S.p):
                report["ok"] = False
                report["failures"].append((lam.serialize(), k))
    return report


def build_webster(n, l, p):
    return WebsterModel(n, l, p)
