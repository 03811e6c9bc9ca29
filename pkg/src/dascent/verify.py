"""Invariant suites behind ``dascent verify``.

Every suite returns a list of check records ``{"check", "status", ...}``;
a record's status is "pass" or "fail".
"""

import random

from . import duptrees, identities, matchings, matrices, permpat, posets, rgf
from .seqcore import enumerate_dI, enumerate_I, iter_dA
from .tables import PUBLISHED_DA, PUBLISHED_DI, dA_table, dI_table

SUITES = ("roundtrips", "tables", "injections", "involution", "genfunc")


def _check(name, ok, **detail):
    rec = {"check": name, "status": "pass" if ok else "fail"}
    rec.update(detail)
    return rec


def roundtrips(max_n=6, seed=0):
    out = []
    for d in (1, 2, 3):
        for n in range(max_n + 1):
            seqs = list(iter_dA(n, d))
            ok = all(matrices.matrix_to_seq(matrices.seq_to_matrix(a, d), d) == a
                     for a in seqs)
            out.append(_check(f"mx/mx^-1 d={d} n={n}", ok, size=len(seqs)))
    for n in range(max_n + 1):
        seqs = list(iter_dA(n, 0))
        ok = all(matrices.matrix_to_seq_d0(matrices.seq_to_matrix_d0(a)) == a
                 for a in seqs)
        out.append(_check(f"mx (d=0) round trip n={n}", ok, size=len(seqs)))
    for n in range(min(max_n, 6) + 1):
        ok = True
        for a in enumerate_I(n):
            m = matchings.inv_to_matching(a)
            ok &= matchings.matching_to_inv(m) == a and not matchings.has_left_nesting(m)
        out.append(_check(f"mh/lef I_n n={n}", ok))
    for n in range(max_n + 1):
        seqs = rgf.enumerate_RGF(n)
        ok = all(rgf.rp_inverse(rgf.rp(r)) == r for r in seqs)
        ok &= all(rgf.rp(rgf.rp_inverse(P)) == P for P in posets.iter_Av_P(n, 3))
        out.append(_check(f"rp/rp^-1 n={n}", ok, size=len(seqs)))
    for d in (1, 2):
        for n in range(max_n + 1):
            ok = all(posets.po_inverse(posets.po(a, d), d) == a for a in iter_dA(n, d))
            out.append(_check(f"po/po^-1 d={d} n={n}", ok))
    for n in range(2, max_n + 3):
        trees = duptrees.enumerate_RDT(n)
        seqs = {duptrees.reduction_sequence(t) for t in trees}
        ok = (seqs == set(enumerate_dI(n - 1, 2)) and len(seqs) == len(trees)
              and all(duptrees.tree_from_sequence(s) == t
                      for t in trees for s in [duptrees.reduction_sequence(t)]))
        out.append(_check(f"RDT/tI n={n}", ok, size=len(trees)))
    rng = random.Random(seed)
    ok = True
    for _ in range(200):
        t = duptrees.T2
        for _ in range(rng.randint(0, 5)):
            k = duptrees.size(t)
            r = rng.randint(1, k)
            a = rng.randint(0, k - r)
            t = duptrees.duplicate(t, a, r)
            ok &= (a, r) in duptrees.visible_events(t)
    out.append(_check("random phi_{a,r} leaves (a,r) visible", ok, seed=seed))
    return out


def tables(max_n=10, max_d=6):
    out = []
    for name, computed, published in (("dA", dA_table(max_d, max_n), PUBLISHED_DA),
                                      ("dI", dI_table(max_d, max_n), PUBLISHED_DI)):
        diffs = [{"d": d, "n": n, "computed": computed[d][n], "published": published[d][n]}
                 for d in range(min(max_d, 6) + 1) for n in range(min(max_n, 10) + 1)
                 if computed[d][n] != published[d][n]]
        out.append(_check(f"table {name}", not diffs, mismatches=diffs))
    return out


def injections(max_n=7):
    out = []
    for d in (1, 2):
        pattern = permpat.sigma(d + 3)
        for n in range(min(max_n, 7) + 1):
            seqs = list(iter_dA(n, d))
            perms = [permpat.pe(a, d) for a in seqs]
            ok = len(set(perms)) == len(seqs) and all(permpat.avoids(p, pattern) for p in perms)
            out.append(_check(f"pe injective into Av(sigma_{d + 3}) n={n}", ok))
            ps = [posets.po(a, d) for a in seqs]
            ok = (len(set(ps)) == len(seqs)
                  and not any(posets.contains_special_P(P, d + 3) for P in ps))
            out.append(_check(f"po injective into Av(P_{d + 3}) n={n}", ok))
    return out


def involution(max_n=7):
    out = []
    for d in (1, 2, 3):
        for n in range(1, max_n + 1):
            rep = identities.involution_check(d, n)
            out.append(_check(rep["identity"], rep["status"] == "pass",
                              mismatches=rep["mismatches"][:5]))
    for d in range(7):
        rep = identities.dinc_recursion_check(d, max(max_n, 10))
        out.append(_check(rep["identity"], rep["status"] == "pass",
                          mismatches=rep["mismatches"], notes=rep["notes"]))
    return out


def genfunc(order=10):
    out = []
    for rep in (identities.ascent_gf_check(order), identities.weak_gf_check(order)):
        out.append(_check(rep["identity"], rep["status"] == "pass",
                          order=order, mismatches=rep["mismatches"]))
    return out


def run(suite, max_n=None, order=None, seed=0):
    if suite == "all":
        return {s: run(s, max_n, order, seed)[s] for s in SUITES}
    if suite == "roundtrips":
        res = roundtrips(6 if max_n is None else max_n, seed)
    elif suite == "tables":
        res = tables(10 if max_n is None else max_n)
    elif suite == "injections":
        res = injections(7 if max_n is None else max_n)
    elif suite == "involution":
        res = involution(7 if max_n is None else max_n)
    elif suite == "genfunc":
        res = genfunc(10 if order is None else order)
    else:
        raise KeyError(suite)
    return {suite: res}


def all_passed(report):
    return all(rec["status"] == "pass" for recs in report.values() for rec in recs)

