"""Slow, definition-level reference implementations used only by the tests.

They deliberately share no code with the package: every predicate is
re-derived from the defining inequalities and every count is obtained by
filtering a product space.
"""

from itertools import combinations, permutations, product
from math import factorial


def dasc(seq, d):
    return sum(1 for x, y in zip(seq, seq[1:]) if y > x - d)


def is_dA(seq, d):
    if not seq:
        return True
    if seq[0] != 0:
        return False
    return all(0 <= seq[k] <= 1 + dasc(seq[:k], d) for k in range(1, len(seq)))


def brute_dA(n, d):
    # entries never exceed n - 1 since dasc of a prefix of length k is < k
    return [s for s in product(range(max(n, 1)), repeat=n) if is_dA(s, d)]


def brute_dI(n, d):
    out = []
    for s in product(range(max(n, 1)), repeat=n):
        if n and s[0] != 0:
            continue
        if all(s[k] <= k for k in range(n)) and all(
                s[k + 1] > s[k] - d for k in range(n - 1)):
            out.append(s)
    return out


def bell(n):
    # Bell triangle
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def catalan(n):
    return factorial(2 * n) // (factorial(n + 1) * factorial(n))


def classical_copies(pi, patt):
    k = len(patt)
    out = []
    for idx in combinations(range(len(pi)), k):
        vals = [pi[i] for i in idx]
        if all((vals[a] < vals[b]) == (patt[a] < patt[b])
               for a in range(k) for b in range(k)):
            out.append(tuple(vals))
    return out


def perms(n):
    return list(permutations(range(1, n + 1)))
