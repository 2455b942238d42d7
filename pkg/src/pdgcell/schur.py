"""Endomorphism algebras of the cyclic dot modules.

A hom G(nu) -> G(mu) of right NH-modules is determined by the image z of the
generator y^nu; well-definedness is one annihilator condition on z.  On top of
the raw hom spaces we build the Phi cellular basis psi_t^* y^lam psi_s, the
induced differential, the cellular chain, cell modules with Gram forms,
graded decomposition data, and the Z(lam)-multiplicity polynomials.
"""

import numpy as np
from collections import Counter
from functools import cached_property

from . import combinat
from .coeff import IntLaurent
from .modlinalg import Solver, nullspace, rank
from .nilhecke import NHElement, build_algebra, cyclic_module


def _laurent(counter):
    return IntLaurent(dict(counter))


class Hom:
    """A module map G(src) -> G(tgt), stored as the image z of y^src."""

    __slots__ = ("ctx", "src", "tgt", "z")

    def __init__(self, ctx, src, tgt, z):
        self.ctx = ctx
        self.src = src
        self.tgt = tgt
        self.z = z

    def degree(self):
        c = self.ctx
        return (
            self.z.degree()
            - c.gens[self.src].degree()
            + c.shift[self.tgt]
            - c.shift[self.src]
        )

    def is_zero(self):
        return self.z.is_zero()

    def __add__(self, other):
        assert (self.src, self.tgt) == (other.src, other.tgt)
        return Hom(self.ctx, self.src, self.tgt, self.z + other.z)

    def __sub__(self, other):
        assert (self.src, self.tgt) == (other.src, other.tgt)
        return Hom(self.ctx, self.src, self.tgt, self.z - other.z)

    def __neg__(self):
        return Hom(self.ctx, self.src, self.tgt, -self.z)

    def __rmul__(self, c):
        return Hom(self.ctx, self.src, self.tgt, c * self.z)

    def __mul__(self, other):
        """Composition self o other (apply other first)."""
        return self.ctx.compose(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, Hom)
            and (self.src, self.tgt) == (other.src, other.tgt)
            and self.z == other.z
        )

    def d(self):
        return self.ctx.differential(self)

    def matrix(self):
        return self.ctx.hom_matrix(self)

    def __repr__(self):
        return "Hom(%s -> %s, z=%r)" % (self.src, self.tgt, self.z)


class HomContext:
    """Hom spaces between the cyclic modules attached to a list of labels
    (multipartitions or decompositions), over a shared nilHecke algebra."""

    def __init__(self, nh, labels):
        self.nh = nh
        self.labels = list(labels)
        self.modules = {}
        self.gens = {}
        self.shift = {}
        for lab in self.labels:
            mod = cyclic_module(nh, lab)
            self.modules[lab] = mod
            self.shift[lab] = mod.shift
            if isinstance(lab, combinat.Multipartition):
                self.gens[lab] = nh.y_lambda(lab)
            else:
                self.gens[lab] = nh.y_decomposition(lab)
        self._ann = {}
        self._ucols = {}
        self._uops = {}

    def annihilator_constraints(self, lab):
        """Stacked matrix R with R @ z.vec = 0 iff z * Ann_r(y^lab) = 0."""
        if lab not in self._ann:
            nh = self.nh
            ann = nh.left_annihilator(self.gens[lab])
            blocks = [
                nh.right_mult_matrix(NHElement(nh, ann[:, j]))
                for j in range(ann.shape[1])
            ]
            self._ann[lab] = (
                np.vstack(blocks) if blocks else np.zeros((0, nh.dim), dtype=np.int64)
            )
        return self._ann[lab]

    def is_hom(self, z, src, tgt):
        return self.modules[tgt].contains(z) and not np.any(
            self.annihilator_constraints(src) @ z.vec % self.nh.p
        )

    def hom_space_dim(self, src, tgt):
        """dim Hom(G(src), G(tgt)) by plain linear algebra (the oracle the
        Phi basis is checked against)."""
        cols = self.modules[tgt].cols
        if cols.shape[1] == 0:
            return 0
        cons = self.annihilator_constraints(src) @ cols % self.nh.p
        return cols.shape[1] - rank(cons, self.nh.p)

    def _solved_generators(self, lab):
        """U with y^lab * u_j = (j-th basis column), one u per basis column."""
        if lab not in self._ucols:
            nh = self.nh
            lmat = nh.left_mult_matrix(self.gens[lab])
            from .modlinalg import solve

            self._ucols[lab] = solve(lmat, self.modules[lab].cols, nh.p)
        return self._ucols[lab]

    def _generator_ops(self, lab):
        if lab not in self._uops:
            u = self._solved_generators(lab)
            self._uops[lab] = np.tensordot(u.T, self.nh.ops, axes=(1, 0)) % self.nh.p
        return self._uops[lab]

    def hom_matrix(self, f):
        """Matrix of f in the module bases: columns = f(basis of G(src))."""
        uops = self._generator_ops(f.src)
        if uops.shape[0] == 0:
            return np.zeros((self.modules[f.tgt].m, 0), dtype=np.int64)
        imgs = self.nh.batch_coords(np.matmul(f.z.op, uops) % self.nh.p)
        return self.modules[f.tgt].express(imgs)

    def compose(self, f, g):
        assert g.tgt == f.src, "mismatched shapes"
        u = self._solved_generators(f.src) @ self.modules[f.src].express(g.z.vec)
        uop = np.tensordot(u % self.nh.p, self.nh.ops, axes=(0, 0)) % self.nh.p
        return Hom(self, g.src, f.tgt, self.nh.from_op(f.z.op @ uop))

    def differential(self, f):
        """(df)(y^src x) = d(z x) - z d(x) collapses to d(z) - z*d-part of
        the generator: d(y^src) = y^src * sum_k e_k y_k with e_k the
        exponent of y_k in y^src."""
        nh = self.nh
        if isinstance(f.src, combinat.Multipartition):
            expo = [nh.l - j for j in f.src.boxes]
        else:
            expo = []
            for i, part in enumerate(f.src.parts, start=1):
                expo.extend([nh.l - i] * part)
        corr = nh.zero()
        for k, e in enumerate(expo, start=1):
            if e % nh.p:
                corr = corr + e * nh.element_from_word([("y", k)])
        return Hom(self, f.src, f.tgt, f.z.d() - f.z * corr)

    def identity(self, lab):
        return Hom(self, lab, lab, self.gens[lab])

    def star(self, f):
        """The anti-involution: transpose a hom along the nilHecke star."""
        return Hom(self, f.tgt, f.src, f.z.star())


class SchurAlgebra:
    """END(+_lam G(lam)) over the partitions of (n, l), in the Phi basis."""

    def __init__(self, n, l, p):
        self.n, self.l, self.p = n, l, p
        self.nh = build_algebra(n, l, p)
        self.partitions = combinat.enumerate_partitions(n, l)
        self.ctx = HomContext(self.nh, self.partitions)
        self._build_basis()
        self._index_pairs()
        self._check_phi_spans()

    # -- basis -------------------------------------------------------------

    def _build_basis(self):
        self.basis = []  # records (lam, t, s)
        self.layer_of = []
        for li, lam in enumerate(self.partitions):
            tabs = combinat.big_tab_lower(lam)
            for t in tabs:
                for s in tabs:
                    z = self.nh.element_from_word(
                        self.nh.psi_tableau_tokens(t, star=True)
                        + self.nh.y_power_tokens([self.l - j for j in lam.boxes])
                        + self.nh.psi_tableau_tokens(s)
                    )
                    f = Hom(self.ctx, s.shape, t.shape, z)
                    assert self.ctx.is_hom(z, s.shape, t.shape), (
                        "cellular element fails the hom membership test"
                    )
                    self.basis.append((lam, t, s, f))
                    self.layer_of.append(li)
        self.dim = len(self.basis)
        self.index = {
            (lam, t, s): k for k, (lam, t, s, _f) in enumerate(self.basis)
        }
        self.degrees = [f.degree() for (_l, _t, _s, f) in self.basis]

    def _index_pairs(self):
        """Group basis indices by (src, tgt) and build coordinate solvers on
        the z-vectors."""
        self.pair_indices = {}
        for k, (_lam, t, s, _f) in enumerate(self.basis):
            self.pair_indices.setdefault((s.shape, t.shape), []).append(k)
        self.pair_solvers = {}
        for pair, ks in self.pair_indices.items():
            mat = np.stack([self.basis[k][3].z.vec for k in ks], axis=1)
            self.pair_solvers[pair] = Solver(mat, self.p)

    def _check_phi_spans(self):
        """The Phi elements with a given (src, tgt) are independent (the
        solver build asserts it) and as many as the hom-space dimension."""
        for src in self.partitions:
            for tgt in self.partitions:
                want = self.ctx.hom_space_dim(src, tgt)
                got = len(self.pair_indices.get((src, tgt), []))
                assert want == got, (
                    "Phi count %d != hom dim %d for %s -> %s"
                    % (got, want, src, tgt)
                )

    def hom_coords(self, f):
        """Coordinates of a hom in the Phi basis (indices per pair_indices)."""
        key = (f.src, f.tgt)
        if key not in self.pair_solvers:
            assert f.is_zero()
            return np.zeros(0, dtype=np.int64)
        return self.pair_solvers[key](f.z.vec)

    def expand(self, f):
        """Global coordinate vector of a hom in the full Phi basis."""
        out = np.zeros(self.dim, dtype=np.int64)
        ks = self.pair_indices.get((f.src, f.tgt), [])
        if ks:
            out[ks] = self.hom_coords(f)
        return out

    def phi(self, lam, t, s):
        return self.basis[self.index[(lam, t, s)]][3]

    def idempotent(self, lam):
        t = combinat.Tableau.standard(lam)
        return self.phi(lam, t, t)

    # -- multiplication table ----------------------------------------------

    @cached_property
    def structure_constants(self):
        """c[i][j] = expand(basis_i o basis_j) for composable pairs, else
        None; products are computed through the module-matrix realization and
        re-expanded, which doubles as an associativity-safe oracle."""
        table = {}
        for i, (_li, ti, si, fi) in enumerate(self.basis):
            for j, (_lj, tj, sj, fj) in enumerate(self.basis):
                if si.shape != tj.shape:
                    continue
                table[(i, j)] = self.expand(self.ctx.compose(fi, fj))
        return table

    def multiply(self, avec, bvec):
        out = np.zeros(self.dim, dtype=np.int64)
        sc = self.structure_constants
        for i in np.nonzero(avec % self.p)[0]:
            for j in np.nonzero(bvec % self.p)[0]:
                prod = sc.get((int(i), int(j)))
                if prod is not None:
                    out = (out + avec[i] * bvec[j] * prod) % self.p
        return out

    # -- differential and star ---------------------------------------------

    @cached_property
    def dmat(self):
        cols = np.zeros((self.dim, self.dim), dtype=np.int64)
        for k, (_lam, _t, _s, f) in enumerate(self.basis):
            df = f.d()
            # oracle: the hom differential is the commutator with the module
            # differentials in the matrix realization
            mod_s, mod_t = self.ctx.modules[f.src], self.ctx.modules[f.tgt]
            lhs = self.ctx.hom_matrix(df)
            rhs = (mod_t.dmat @ self.ctx.hom_matrix(f) - self.ctx.hom_matrix(f) @ mod_s.dmat) % self.p
            assert np.array_equal(lhs % self.p, rhs)
            cols[:, k] = self.expand(df)
        return cols

    @cached_property
    def star_perm(self):
        """Phi_{ts} -> Phi_{st}, verified against the nilHecke star on z."""
        perm = np.zeros(self.dim, dtype=np.int64)
        for k, (lam, t, s, f) in enumerate(self.basis):
            k2 = self.index[(lam, s, t)]
            assert np.array_equal(
                f.z.star().vec % self.p, self.basis[k2][3].z.vec % self.p
            )
            perm[k] = k2
        return perm

    # -- cellular chain ----------------------------------------------------

    def chain_report(self):
        """The ideals (S)^{>= lam_k} = span of layers 0..k: closed under
        multiplication on both sides, d-stable, star-stable; layer sizes
        |T_lam|^2."""
        layers = np.array(self.layer_of)
        report = {"layer_sizes": [], "ideal": True, "d_stable": True,
                  "star_stable": True}
        for li, lam in enumerate(self.partitions):
            size = int(np.sum(layers == li))
            assert size == len(combinat.big_tab_lower(lam)) ** 2
            report["layer_sizes"].append(size)
        sc = self.structure_constants
        for (i, j), prod in sc.items():
            cutoff = min(self.layer_of[i], self.layer_of[j])
            if np.any(prod[layers > cutoff] % self.p):
                report["ideal"] = False
        for k in range(self.dim):
            if np.any(self.dmat[:, k][layers > self.layer_of[k]] % self.p):
                report["d_stable"] = False
            if self.layer_of[int(self.star_perm[k])] != self.layer_of[k]:
                report["star_stable"] = False
        report["ok"] = report["ideal"] and report["d_stable"] and report["star_stable"]
        return report

    # -- cell modules ------------------------------------------------------

    def cell_module(self, lam):
        """Delta(lam): basis Phi^lam_{t, t^lam} for t in T_lam, with the
        differential and Gram form computed modulo the higher ideal."""
        li = self.partitions.index(lam)
        tlam = combinat.Tableau.standard(lam)
        tabs = combinat.big_tab_lower(lam)
        ks = [self.index[(lam, t, tlam)] for t in tabs]
        degs = [self.degrees[k] for k in ks]
        layers = np.array(self.layer_of)

        def project(vec):
            """Coefficients on the lam-layer span {Phi^lam_{t, tlam}}; the
            part in strictly lower layers must vanish (cellularity)."""
            assert not np.any(vec[layers > li] % self.p), "leaks below the cell"
            return vec[ks] % self.p

        dmat = np.zeros((len(ks), len(ks)), dtype=np.int64)
        for a, k in enumerate(ks):
            col = self.dmat[:, k].copy()
            col[layers < li] = 0  # higher ideal discarded in the quotient
            dmat[:, a] = project(col)
        gram = np.zeros((len(ks), len(ks)), dtype=np.int64)
        e_k = self.index[(lam, tlam, tlam)]
        for a, t in enumerate(tabs):
            fa = self.phi(lam, tlam, t)
            for b, s in enumerate(tabs):
                if s.shape != t.shape:
                    continue  # non-composable: the pairing vanishes
                prod = self.expand(self.ctx.compose(fa, self.phi(lam, s, tlam)))
                prod[layers < li] = 0
                rest = prod.copy()
                rest[e_k] = 0
                assert not np.any(rest[layers == li] % self.p), (
                    "pairing output is not a multiple of the idempotent"
                )
                gram[a, b] = prod[e_k] % self.p
        assert np.array_equal(gram, gram.T % self.p)
        rad = nullspace(gram, self.p)
        # radical is d-stable: d maps radical vectors back into the radical
        for j in range(rad.shape[1]):
            img = dmat @ rad[:, j] % self.p
            assert not np.any(gram @ img % self.p), "radical not d-stable"
        rad_degs = self._homogeneous_degrees(rad, degs)
        gdim_delta = Counter(degs)
        gdim_L = gdim_delta - Counter(rad_degs)
        return {
            "lam": lam,
            "tableaux": tabs,
            "degrees": degs,
            "dmat": dmat,
            "gram": gram,
            "rad_dim": rad.shape[1],
            "gdim_delta": gdim_delta,
            "gdim_L": gdim_L,
            "char_delta": self._character(lam, tabs, degs, None),
            "char_L": self._character(lam, tabs, degs, rad),
        }

    def _homogeneous_degrees(self, cols, degs):
        """Degrees of a homogeneous-spanned subspace: split by degree and
        count ranks."""
        out = []
        degs = np.array(degs)
        for d in sorted(set(map(int, degs))):
            sel = cols[np.nonzero(degs == d)[0], :]
            out.extend([d] * rank(sel, self.p))
        return out

    def _character(self, lam, tabs, degs, rad):
        """Weight-space graded character: for each mu the gdim of the
        Phi^mu_ee slice, minus the radical slice when given."""
        char = {}
        for mi, mu in enumerate(self.partitions):
            sel = [a for a, t in enumerate(tabs) if t.shape == mu]
            cnt = Counter(degs[a] for a in sel)
            if rad is not None and sel:
                sub = rad[sel, :]
                subdegs = self._homogeneous_degrees(
                    sub, [degs[a] for a in sel]
                )
                cnt = cnt - Counter(subdegs)
            if +cnt:
                char[mu] = _laurent(cnt)
        return char

    # -- decomposition data ------------------------------------------------

    @cached_property
    def cell_data(self):
        return {lam: self.cell_module(lam) for lam in self.partitions}

    def decomposition_matrix(self):
        """d_{lam mu}(q) solving ch Delta(lam) = sum_mu d ch L(mu), by a
        greedy unitriangular peel-off; validated entries in N[q, q^-1]."""
        parts = self.partitions
        chars_L = {lam: self.cell_data[lam]["char_L"] for lam in parts}
        d = {}
        for lam in parts:
            residue = dict(self.cell_data[lam]["char_delta"])
            row = {}
            # peel in chain order: the leading weight of ch L(mu) is mu
            for mu in parts:
                if mu not in residue or not residue[mu]:
                    continue
                coeff = self._divide(residue[mu], chars_L[mu][mu])
                row[mu] = coeff
                for nu, pol in chars_L[mu].items():
                    new = residue.get(nu, IntLaurent.zero()) - coeff * pol
                    if new:
                        residue[nu] = new
                    elif nu in residue:
                        del residue[nu]
            assert not residue, "character expansion did not terminate"
            d[lam] = row
        # sanity: unitriangular in the dominance order
        for lam in parts:
            assert d[lam].get(lam) == IntLaurent.one()
            for mu, pol in d[lam].items():
                if mu != lam:
                    assert combinat.dominance_geq(lam, mu) and lam != mu, (
                        "decomposition entry outside the dominance cone"
                    )
                for _e, c in pol.items():
                    assert c > 0
        return d

    def _divide(self, num, den):
        """Exact division of Laurent polynomials with integer coefficients."""
        if not num:
            return IntLaurent.zero()
        out = {}
        num = dict(num.items())
        den_items = sorted(den.items())
        lead_e, lead_c = den_items[0]
        while num:
            e = min(num)
            c = num[e]
            assert c % lead_c == 0
            q_e, q_c = e - lead_e, c // lead_c
            out[q_e] = q_c
            for de, dc in den_items:
                ne = q_e + de
                num[ne] = num.get(ne, 0) - q_c * dc
                if num[ne] == 0:
                    del num[ne]
        return IntLaurent(out)

    def cartan_matrix(self):
        """C = D^T D over the Laurent ring."""
        d = self.decomposition_matrix()
        parts = self.partitions
        cart = {}
        for mu in parts:
            for nu in parts:
                tot = IntLaurent.zero()
                for lam in parts:
                    a = d[lam].get(mu)
                    b = d[lam].get(nu)
                    if a and b:
                        tot = tot + a * b
                if tot:
                    cart[(mu, nu)] = tot
        return cart

    def z_multiplicities(self, lam):
        """[Z(lam) : Delta(mu)]_q = gdim Delta°(mu) e(lam), i.e. the degrees
        of Phi^mu_{t^mu, s} over s in Tab_mu(lam)."""
        out = []
        for mu in self.partitions:
            tmu = combinat.Tableau.standard(mu)
            cnt = Counter()
            for s in combinat.tab_lower(mu, lam):
                cnt[self.degrees[self.index[(mu, tmu, s)]]] += 1
            if +cnt:
                out.append((mu, _laurent(cnt)))
        return out

    def z_character(self, lam):
        """Graded character of Z(lam) = S e(lam): all basis homs with
        source lam."""
        char = {}
        for k, (_l, t, s, _f) in enumerate(self.basis):
            if s.shape == lam:
                char.setdefault(t.shape, Counter())[self.degrees[k]] += 1
        return {mu: _laurent(c) for mu, c in char.items()}

    # -- projective splitting ----------------------------------------------

    def corner_degree_zero(self, lam):
        """Basis indices of the degree-0 part of e(lam) S e(lam)."""
        return [
            k
            for k, (_l, t, s, _f) in enumerate(self.basis)
            if s.shape == lam and t.shape == lam and self.degrees[k] == 0
        ]

    def fitting_idempotents(self, lam):
        """All idempotents of the degree-0 corner algebra at lam, found by
        exhaustive search (the corners here have dimension <= 3)."""
        ks = self.corner_degree_zero(lam)
        m = len(ks)
        assert m <= 3, "corner too large for exhaustive idempotent search"
        idems = []
        from itertools import product as _product

        for coeffs in _product(range(self.p), repeat=m):
            vec = np.zeros(self.dim, dtype=np.int64)
            for c, k in zip(coeffs, ks):
                vec[k] = c
            if np.array_equal(self.multiply(vec, vec), vec % self.p):
                idems.append(vec)
        return ks, idems

    def projective_split(self, lam):
        """Split Z(lam) by a nontrivial degree-0 idempotent when one exists:
        returns the graded characters of the two summands (e Z and (1-e) Z),
        or None when the corner has only 0 and 1."""
        ks, idems = self.fitting_idempotents(lam)
        ident = self.expand(self.ctx.identity(lam))
        nontrivial = [
            e for e in idems if np.any(e % self.p) and not np.array_equal(e, ident)
        ]
        if not nontrivial:
            return None
        e = nontrivial[0]
        comp = (ident - e) % self.p
        out = []
        for idem in (comp, e):
            # graded dims by rank: column space of right multiplication
            zk = [k for k, (_l, _t, s, _f) in enumerate(self.basis) if s.shape == lam]
            cols = []
            degs = []
            for k in zk:
                vec = np.zeros(self.dim, dtype=np.int64)
                vec[k] = 1
                cols.append(self.multiply(vec, idem))
                degs.append(self.degrees[k])
            mat = np.stack(cols, axis=1) if cols else np.zeros((self.dim, 0), np.int64)
            cnt = Counter()
            degs_arr = np.array(degs)
            for dd in sorted(set(degs)):
                sel = mat[:, np.nonzero(degs_arr == dd)[0]]
                cnt[dd] += rank(sel, self.p)
            out.append({k: v for k, v in cnt.items() if v})
        return {"complement": out[0], "summand": out[1]}


def build_schur(n, l, p):
    return SchurAlgebra(n, l, p)


def basic_quiver_report(l, p):
    """n = 1: the algebra matches the path algebra of the linear quiver on l
    vertices modulo (i|i-1|i) = (i|i+1|i) and (1|2|1) = 0, under the
    dictionary (i|..|k|..|j) <-> Phi^{lam_k}_{ij} (k = lowest vertex on the
    path, i, j >= k), with differential d Phi^{lam_k}_{ij} =
    (j-k) Phi^{lam_{k-1}}_{ij} (zero for k = 1)."""
    S = SchurAlgebra(1, l, p)
    parts = S.partitions  # parts[k-1] = single box in slot k
    tabs = {
        (k, i): combinat.Tableau(parts[i - 1], (1,))
        for k in range(1, l + 1)
        for i in range(k, l + 1)
    }

    def phi(k, i, j):
        """Phi^{lam_k}_{ij}: the hom lam_j -> lam_i through layer k."""
        return S.phi(parts[k - 1], tabs[(k, i)], tabs[(k, j)])

    report = {"l": l, "p": p, "dim": S.dim, "relations": True,
              "differential": True, "failures": []}
    assert S.dim == l * (l + 1) * (2 * l + 1) // 6  # sum over k of (l-k+1)^2

    def arrow(i, j):
        assert abs(i - j) == 1
        return phi(min(i, j), i, j)

    for i in range(2, l):
        lhs = S.ctx.compose(arrow(i, i - 1), arrow(i - 1, i))
        rhs = S.ctx.compose(arrow(i, i + 1), arrow(i + 1, i))
        if lhs != rhs:
            report["relations"] = False
            report["failures"].append(
                "(%d|%d|%d) != (%d|%d|%d)" % (i, i - 1, i, i, i + 1, i)
            )
    if l >= 2:
        if not S.ctx.compose(arrow(1, 2), arrow(2, 1)).is_zero():
            report["relations"] = False
            report["failures"].append("(1|2|1) != 0")
    # path concatenation realizes the whole Phi basis:
    # (i|i-1|..|k) (k|k+1|..|j) = Phi^{lam_k}_{ij} on the nose
    for k in range(1, l + 1):
        for i in range(k, l + 1):
            for j in range(k, l + 1):
                down = S.ctx.identity(parts[i - 1])
                for a in range(i, k, -1):
                    down = S.ctx.compose(down, arrow(a, a - 1))
                up = S.ctx.identity(parts[k - 1])
                for a in range(k, j):
                    up = S.ctx.compose(up, arrow(a, a + 1))
                # compose applies the right factor first; the hom for the
                # path i -> k -> j has source lam_j and target lam_i
                if S.ctx.compose(down, up) != phi(k, i, j):
                    report["relations"] = False
                    report["failures"].append("path (%d|%d|%d) mismatch" % (i, k, j))
    for k in range(1, l + 1):
        for i in range(k, l + 1):
            for j in range(k, l + 1):
                df = phi(k, i, j).d()
                if k == 1:
                    want = Hom(S.ctx, parts[j - 1], parts[i - 1], S.nh.zero())
                else:
                    want = (j - k) * phi(k - 1, i, j)
                if df != want:
                    report["differential"] = False
                    report["failures"].append("d Phi^%d_{%d%d}" % (k, i, j))
    report["ok"] = report["relations"] and report["differential"]
    return report
