"""Command-line front end: runs the verification suites and emits
deterministic machine-readable reports."""

import argparse
import csv
import io
import json
import math
import random
import sys
import time
from collections import Counter

import numpy as np

from . import combinat
from .coeff import IntLaurent, OpScalar
from .golden import block24_report, one_strand_report
from .nilhecke import (
    build_algebra,
    cellular_chain_report,
    cyclic_module,
    splitter_complex_check,
)
from .quantum import (
    TensorRep,
    k0_comparison,
    schur_k0_transition,
    serre_like_check,
    verify_quantum_relations,
)
from .schur import build_schur
from .webster import build_webster, dot_reduction_report


# -- serialization -----------------------------------------------------------


def _ser(x):
    """Deterministic JSON-ready form: Laurent/O_p scalars as sorted
    (exponent, coefficient) pairs, counters as sorted pairs, matrices
    row-major."""
    if isinstance(x, (IntLaurent,)) or isinstance(x, OpScalar):
        return sorted((int(e), int(c)) for e, c in x.items())
    if isinstance(x, Counter):
        return sorted((int(k), int(v)) for k, v in x.items())
    if isinstance(x, np.ndarray):
        return [[int(v) for v in row] for row in np.atleast_2d(x)]
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, combinat.Multipartition):
        return list(x.entries)
    if isinstance(x, combinat.Decomposition):
        return list(x.parts)
    if isinstance(x, combinat.Tableau):
        return {"shape": _ser(x.shape), "word": list(x.word)}
    if isinstance(x, dict):
        return {_key(k): _ser(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_ser(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def _key(k):
    if isinstance(k, (combinat.Multipartition,)):
        return "".join(str(e) for e in k.entries)
    if isinstance(k, combinat.Decomposition):
        return ",".join(str(e) for e in k.parts)
    if isinstance(k, tuple):
        return "|".join(str(_key(v)) for v in k)
    return str(k)


class Report:
    def __init__(self, suite):
        self.suite = suite
        self.checks = []
        self.tables = {}
        self.t0 = time.time()

    def add(self, cid, ok, expected=None, actual=None):
        self.checks.append({
            "id": cid,
            "status": "pass" if ok else "fail",
            "expected": _ser(expected),
            "actual": _ser(actual),
        })

    def skip(self, cid, why):
        self.checks.append({
            "id": cid, "status": "skipped", "expected": why, "actual": None,
        })

    def passed(self):
        return all(c["status"] != "fail" for c in self.checks)

    def payload(self):
        return {
            "suite": self.suite,
            "checks": self.checks,
            "tables": _ser(self.tables),
            "ok": self.passed(),
        }

    def emit(self, args):
        # timing goes to stderr so report files are byte-identical across runs
        sys.stderr.write(
            "%s: %.3fs\n" % (self.suite, time.time() - self.t0)
        )
        if args.format == "json":
            text = json.dumps(self.payload(), sort_keys=True, indent=1)
        else:
            buf = io.StringIO()
            w = csv.writer(buf)
            w.writerow(["suite", "check", "status"])
            for c in self.checks:
                w.writerow([self.suite, c["id"], c["status"]])
            text = buf.getvalue()
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text + ("\n" if not text.endswith("\n") else ""))
        else:
            sys.stdout.write(text + "\n")


# -- suites ------------------------------------------------------------------


def suite_nilhecke(args):
    rep = Report("nilhecke")
    n, l, p = args.n, args.l, args.p
    if n == 0:
        # zero strands: the ground field, dimension 1
        rep.add("dimension", True, 1, 1)
        rep.tables["graded_dimension"] = Counter({0: 1})
        return rep
    alg = build_algebra(n, l, p)
    want = math.comb(l, n) * math.factorial(n) ** 2
    rep.add("dimension", alg.dim == want, want, alg.dim)
    from .modlinalg import rank

    frank = rank(alg.ops.reshape(alg.dim, -1).T, p)
    rep.add("faithful", frank == alg.dim, alg.dim, frank)
    dp = np.eye(alg.dim, dtype=np.int64)
    for _ in range(p):
        dp = alg.dmat @ dp % p
    rep.add("d^p = 0", not dp.any())
    rng = random.Random(args.rng_seed)
    ok = True
    for _ in range(args.samples):
        a = alg.basis_element(rng.randrange(alg.dim))
        b = alg.basis_element(rng.randrange(alg.dim))
        if ((a * b).d() - (a.d() * b + a * b.d())).vec.any():
            ok = False
    rep.add("Leibniz (sampled)", ok)
    rep.tables["graded_dimension"] = alg.graded_dimension()
    rep.tables["cyclic_modules"] = {
        lam: cyclic_module(alg, lam).graded_dimension()
        for lam in combinat.enumerate_partitions(n, l)
    }
    return rep


def suite_schur(args):
    rep = Report("schur")
    S = build_schur(args.n, args.l, args.p)
    rep.add("built", True, None, S.dim)
    rep.tables["dim"] = S.dim
    rep.tables["layer_sizes"] = [
        len(combinat.big_tab_lower(lam)) ** 2 for lam in S.partitions
    ]
    chain = S.chain_report()
    rep.add("cellular chain", chain["ok"], None, chain)
    rep.tables["cell_modules"] = {
        lam: {
            "gdim_delta": cd["gdim_delta"],
            "gdim_L": cd["gdim_L"],
            "rad_dim": cd["rad_dim"],
        }
        for lam, cd in S.cell_data.items()
    }
    rep.tables["z_multiplicities"] = {
        lam: {mu: pol for mu, pol in S.z_multiplicities(lam)}
        for lam in S.partitions
    }
    d = S.decomposition_matrix()
    rep.tables["decomposition_matrix"] = d
    rep.tables["cartan_matrix"] = S.cartan_matrix()
    rep.add("decomposition matrix unitriangular", True)
    return rep


def suite_webster(args):
    rep = Report("webster")
    W = build_webster(args.n, args.l, args.p)
    rep.tables["summands"] = list(W.summands)
    rep.tables["dim"] = W.dim
    census = sum(
        len(combinat.multistandard(lam)) ** 2
        for lam in combinat.enumerate_partitions(args.n, args.l)
    )
    rep.add("cellular census", W.dim == census, census, W.dim)
    rep.tables["graded_dimension"] = W.graded_dimension_table()
    S = build_schur(args.n, args.l, args.p)
    corner = W.corner_report(S)
    rep.add("corner = schur", corner["ok"], None, corner)
    rep.add(
        "big-block corner dim",
        W.corner_dimension()
        == math.comb(args.l, args.n) * math.factorial(args.n) ** 2,
    )
    return rep


def suite_k0(args):
    rep = Report("k0")
    n, l, p = args.n, args.l, args.p
    rel = verify_quantum_relations(TensorRep(l, p))
    rep.add("quantum relations", rel["ok"], [], rel["failures"])
    if l >= 2:
        small, big = TensorRep(l - 1, p), TensorRep(l, p)
        ok = all(
            serre_like_check(small, big, a, w)
            for a in (2, 3)
            for w in small.words
        )
        rep.add("serre-like sums vanish", ok)
    cmp = k0_comparison(n, l, p)
    rep.add("class map transition unit determinant", cmp["det_unit"])
    rep.add("F action matches class map", cmp["f_action"])
    if n >= 1:
        tr = schur_k0_transition(n, l, p)
        rep.add("cell-class transition unitriangular", tr["ok"])
    rep.tables["k0"] = cmp
    return rep


def suite_verify_cellular(args):
    rep = Report("verify-cellular")
    for (n, l) in ((2, 3), (2, 4)) if args.n is None else ((args.n, args.l),):
        nhchain = cellular_chain_report(build_algebra(n, l, args.p))
        rep.add("nilhecke chain (%d,%d)" % (n, l), nhchain["ok"], None, nhchain)
        S = build_schur(n, l, args.p)
        chain = S.chain_report()
        rep.add("schur chain (%d,%d)" % (n, l), chain["ok"], None, chain)
        W = build_webster(n, l, args.p)
        wchain = W.chain_report()
        rep.add("webster chain (%d,%d)" % (n, l), wchain["ok"], None, wchain)
        dots = dot_reduction_report(S)
        rep.add("dot reduction (%d,%d)" % (n, l), dots["ok"])
    return rep


def suite_verify_stosic(args):
    rep = Report("verify-stosic")
    cases = ((2, 3), (2, 4), (3, 3)) if args.n is None else ((args.n, args.l),)
    for (n, l) in cases:
        alg = build_algebra(n, l, args.p)
        count = 0
        ok = True
        for b in combinat.enumerate_decompositions(n, l):
            for i in range(1, l):
                if b.parts[i] < 2:
                    continue  # peeled part must have size >= 2
                res = splitter_complex_check(alg, b, i)
                count += 1
                if not res["ok"]:
                    ok = False
        rep.add("splitter complexes (%d,%d)" % (n, l), ok, None, count)
    return rep


def suite_verify_s24(args):
    rep = Report("verify-appendix-s24")
    res = block24_report(args.p)
    rep.add("block replay", res["ok"], [], res["failures"])
    rep.tables["decomposition_matrix"] = res["decomposition_matrix"]
    rep.tables["cartan_matrix"] = res["cartan_matrix"]
    return rep


def suite_verify_s1l(args):
    rep = Report("verify-appendix-s1l")
    lmax = args.l if args.l is not None else 5
    res = one_strand_report(lmax, args.p)
    for l, case in res["cases"].items():
        rep.add("one-strand quiver l=%d" % l, case["ok"], None, case)
    return rep


# -- entry point -------------------------------------------------------------


def make_parser():
    ap = argparse.ArgumentParser(
        prog="pdgcell",
        description="exact verification suites for p-DG nilHecke, quiver "
        "Schur, and Webster-block data",
    )
    sub = ap.add_subparsers(dest="cmd")

    def common(sp, need_nl=True):
        sp.add_argument("--n", type=int, default=None)
        sp.add_argument("--l", type=int, default=None)
        sp.add_argument("--p", type=int, default=5)
        sp.add_argument("--out", default=None)
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--samples", type=int, default=100)
        sp.add_argument("--rng-seed", type=int, default=0)

    for name in ("nilhecke", "schur", "webster", "k0"):
        common(sub.add_parser(name))
    vp = sub.add_parser("verify")
    vp.add_argument(
        "what",
        choices=("cellular", "stosic", "appendix-s24", "appendix-s1l"),
    )
    common(vp)
    return ap


def validate(args, need_nl):
    if args.p not in (3, 5, 7):
        return "p must be one of 3, 5, 7"
    if need_nl:
        if args.n is None or args.l is None:
            return "--n and --l are required"
    if args.n is not None or args.l is not None:
        n = args.n if args.n is not None else 0
        l = args.l if args.l is not None else 6
        if not (0 <= n <= l <= 6):
            return "need 0 <= n <= l <= 6"
    return None


def main(argv=None):
    ap = make_parser()
    args = ap.parse_args(argv)
    if args.cmd is None:
        ap.print_help()
        return 2
    need_nl = args.cmd in ("nilhecke", "schur", "webster", "k0")
    err = validate(args, need_nl)
    if err:
        sys.stderr.write("error: %s\n" % err)
        return 2
    suites = {
        "nilhecke": suite_nilhecke,
        "schur": suite_schur,
        "webster": suite_webster,
        "k0": suite_k0,
    }
    if args.cmd == "verify":
        suites = {
            "cellular": suite_verify_cellular,
            "stosic": suite_verify_stosic,
            "appendix-s24": suite_verify_s24,
            "appendix-s1l": suite_verify_s1l,
        }
        fn = suites[args.what]
    else:
        fn = suites[args.cmd]
    rep = fn(args)
    rep.emit(args)
    return 0 if rep.passed() else 1


if __name__ == "__main__":
    sys.exit(main())
