"""Numerical checks of the counting identities: the alternating recursion for
d-increasing sequences, its sign-reversing involution, and two generating
function identities for (weak) ascent sequences.

Each check returns a report dict ``{identity, order, status, mismatches}``
that serializes directly to JSON.
"""

from itertools import combinations

from .seqcore import (count_dA, count_dI, d_ascent_number, enumerate_dI,
                      is_dI_member, iter_dA)
from .series import TruncatedSeries


def binomial(n, k):
    """Binomial coefficient, zero when k < 0, n < 0 or n < k."""
    if k < 0 or n < 0 or n < k:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def _report(identity, order, mismatches, **extra):
    rep = {
        "identity": identity,
        "order": order,
        "status": "pass" if not mismatches else "fail",
        "mismatches": mismatches,
    }
    rep.update(extra)
    return rep


def dinc_rhs(d, n, di, top=None):
    """Right side of the recursion, given di[0..n-1].

    ``top(n, k, d)`` gives the upper entry of the binomial; the default is
    n - kd + d.
    """
    if top is None:
        top = _top_stated
    return sum((-1) ** (k - 1) * binomial(top(n, k, d), k) * di[n - k]
               for k in range(1, n + 1))


def _top_stated(n, k, d):
    return n - k * d + d


def _top_alternate(n, k, d):
    return n - k * d + k


def dinc_recursion_check(d, N):
    """Verify di_n = sum_k (-1)^(k-1) C(n-kd+d, k) di_{n-k} for n in [1, N]
    against enumerated di_n.  Also records where the variant C(n-kd+k, k)
    breaks down."""
    di = [len(enumerate_dI(n, d)) for n in range(N + 1)]
    mismatches = []
    alternate_failures = []
    for n in range(1, N + 1):
        rhs = dinc_rhs(d, n, di)
        if rhs != di[n]:
            mismatches.append({"n": n, "enumerated": di[n], "recursion": rhs})
        alt = dinc_rhs(d, n, di, _top_alternate)
        if alt != di[n]:
            alternate_failures.append({"n": n, "enumerated": di[n], "variant": alt})
    notes = []
    if alternate_failures:
        notes.append(
            "binomial C(n-kd+k, k) does not satisfy the recursion "
            f"(first failure at n={alternate_failures[0]['n']}); "
            "C(n-kd+d, k) is the form that counts gap-constrained subsets")
    return _report(f"dinc_recursion(d={d})", N, mismatches,
                   values=di, alternate_failures=alternate_failures, notes=notes)


# --- sign-reversing involution --------------------------------------------

def gap_subsets(top, k, d):
    """k-subsets of {0..top} with consecutive gaps >= d, by brute force."""
    return [S for S in combinations(range(top + 1), k)
            if all(b - a >= d for a, b in zip(S, S[1:]))]


def signed_pairs(d, n):
    """The set of pairs (alpha, S): alpha in dI_{n-k}, S a gap-d subset of
    {0, ..., n-k} of size k, for k = 0..n."""
    pairs = []
    for k in range(n + 1):
        subsets = gap_subsets(n - k, k, d)
        for alpha in enumerate_dI(n - k, d):
            for S in subsets:
                pairs.append((alpha, S))
    return pairs


def sign(pair):
    return (-1) ** len(pair[1])


def iota(pair, d):
    """Append max(S) to alpha if that stays in dI; else move alpha's last
    entry into S."""
    alpha, S = pair
    if S:
        m = S[-1]
        ext = alpha + (m,)
        if is_dI_member(ext, d):
            return ext, S[:-1]
    if not alpha:
        raise ValueError("iota undefined on (empty, empty)")
    return alpha[:-1], tuple(sorted(S + (alpha[-1],)))


def involution_check(d, n):
    if d < 1:
        raise ValueError("the involution is used for d >= 1")
    pairs = signed_pairs(d, n)
    universe = set(pairs)
    mismatches = []
    for p in pairs:
        q = iota(p, d)
        if q not in universe:
            mismatches.append({"pair": _show(p), "problem": "image outside set",
                               "image": _show(q)})
            continue
        if q == p:
            mismatches.append({"pair": _show(p), "problem": "fixed point"})
        if sign(q) != -sign(p):
            mismatches.append({"pair": _show(p), "problem": "sign not reversed"})
        if iota(q, d) != p:
            mismatches.append({"pair": _show(p), "problem": "iota^2 != id"})
    signed_sum = sum(sign(p) for p in pairs)
    if signed_sum != 0:
        mismatches.append({"problem": "signed sum nonzero", "value": signed_sum})
    per_k = []
    for k in range(n + 1):
        actual = sum(1 for p in pairs if len(p[1]) == k)
        expected = binomial(n - k * d + d, k) * count_dI(n - k, d)
        per_k.append({"k": k, "pairs": actual, "formula": expected})
        if actual != expected:
            mismatches.append({"k": k, "problem": "pair count", "pairs": actual,
                               "formula": expected})
    return _report(f"involution(d={d}, n={n})", n, mismatches,
                   size=len(pairs), signed_sum=signed_sum, per_k=per_k)


def _show(pair):
    return {"alpha": list(pair[0]), "S": list(pair[1])}


# --- generating functions -------------------------------------------------

def ascent_product_series(N):
    """sum_{n=0}^{N} prod_{i=1}^{n} (1 - (1-t)^i), truncated at t^N.

    The n-th product is divisible by t^n, so later terms cannot matter.
    """
    t = TruncatedSeries.monomial(N, t=1)
    one_minus_t = 1 - t
    total = TruncatedSeries.constant(N, 0)
    prod = TruncatedSeries.constant(N, 1)
    for n in range(N + 1):
        if n:
            prod = prod * (1 - one_minus_t ** n)
        total = total + prod
    return total


def ascent_gf_check(N):
    series = ascent_product_series(N)
    mismatches = []
    coefficients = []
    for n in range(N + 1):
        c = series.coeff(t=n)
        coefficients.append(c)
        expected = count_dA(n, 0)
        if c != expected:
            mismatches.append({"n": n, "series": c, "count": expected})
    return _report("ascent_product_gf", N, mismatches, coefficients=coefficients)


def weak_series(N):
    """W(t; u, v) = sum over weak ascent sequences of t^n u^wasc v^last,
    with the empty sequence contributing 1."""
    coeffs = {(0, 0, 0): 1}
    if N >= 1:
        states = {(0, 0): 1}          # (wasc, last) -> count, at length 1
        for n in range(1, N + 1):
            for (w, last), c in states.items():
                coeffs[(n, w, last)] = coeffs.get((n, w, last), 0) + c
            if n == N:
                break
            nxt = {}
            for (w, last), c in states.items():
                for x in range(w + 2):
                    key = (w + (x >= last), x)
                    nxt[key] = nxt.get(key, 0) + c
            states = nxt
    return TruncatedSeries(N, coeffs)


def weak_equation_sides(N):
    W = weak_series(N)
    t = TruncatedSeries.monomial(N, t=1)
    u = TruncatedSeries.monomial(N, u=1)
    v = TruncatedSeries.monomial(N, v=1)
    W_u1 = W.at_v1()
    W_uv1 = W_u1.u_to_uv()
    lhs = (v - 1 + t * (u - 1)) * W
    rhs = ((1 + t) * (v - 1) + t * u * (1 - v * v)
           - t * W_u1 + t * u * v * v * W_uv1)
    return lhs, rhs


def weak_gf_check(N):
    lhs, rhs = weak_equation_sides(N)
    mismatches = [
        {"monomial": {"t": k[0], "u": k[1], "v": k[2]}, "lhs": a, "rhs": b}
        for k, a, b in lhs.difference(rhs)
    ]
    # W(u, 1) must refine the weak ascent counts by wasc
    W1 = weak_series(N).at_v1()
    for n in range(N + 1):
        total = W1.t_coeff(n)
        if total != count_dA(n, 1):
            mismatches.append({"n": n, "problem": "W(u,1) total",
                               "series": total, "count": count_dA(n, 1)})
    return _report("weak_functional_equation", N, mismatches)


def wasc_distribution(n):
    """Brute-force {wasc: count} over wA_n, for cross-checking W(u, 1)."""
    out = {}
    for alpha in iter_dA(n, 1):
        w = d_ascent_number(alpha, 1)
        out[w] = out.get(w, 0) + 1
    return out
