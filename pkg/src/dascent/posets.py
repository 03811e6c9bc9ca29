"""Factorial posets, special P_d avoidance, and the injection po.

A factorial poset on [n] is stored as its down-set maxima ``downmax``:
``downmax[k-1] = m_k`` where the strict down-set of k is ``{1, ..., m_k}``.
So ``i <_P j`` iff ``i <= m_j``.
"""

from itertools import combinations, product

from .errors import PreconditionError
from .seqcore import is_d_ascent_sequence, prefix_d_ascents


def is_downmax(vec):
    return all(0 <= m <= k - 1 for k, m in enumerate(vec, start=1))


def less(P, i, j):
    """``i <_P j`` for 1-based elements."""
    return i <= P[j - 1]


def relation(P):
    """Strict order relation as a set of pairs (i, j) meaning i <_P j."""
    return {(i, j) for j in range(1, len(P) + 1) for i in range(1, P[j - 1] + 1)}


def is_partial_order(n, rel):
    """Check a strict relation on [n] is irreflexive, antisymmetric, transitive."""
    if any(i == j or not (1 <= i <= n and 1 <= j <= n) for i, j in rel):
        return False
    if any((j, i) in rel for i, j in rel):
        return False
    return all((i, l) in rel for i, j in rel for k, l in rel if j == k)


def is_factorial(n, rel):
    """Factorial test ``i < j and j <_P k  =>  i <_P k`` on a strict order."""
    if not is_partial_order(n, rel):
        raise ValueError("relation is not a partial order")
    return all((i, k) in rel for j, k in rel for i in range(1, j))


def to_downmax(n, rel):
    if not is_factorial(n, rel):
        raise ValueError("poset is not factorial")
    return tuple(max((i for i in range(1, n + 1) if (i, k) in rel), default=0)
                 for k in range(1, n + 1))


def covers(P):
    """Cover relations of P, for human-readable output."""
    rel = relation(P)
    return sorted((i, j) for i, j in rel
                  if not any((i, k) in rel and (k, j) in rel
                             for k in range(i + 1, j)))


def iter_factorial(n):
    """All n! factorial posets on [n] as downmax vectors."""
    for vec in product(*(range(k) for k in range(1, n + 1))):
        yield vec


def contains_special_P(P, size_d):
    """Does P contain the special poset P_d (chain of d-1 plus i_{d-2}+1)?

    The isolated element e = j+1 sits below the chain top k as an integer,
    and j <_P k while e is not below k; since down-sets are initial
    intervals that means ``m_k == j`` exactly.  What remains is a chain of
    d-3 elements below j that all avoid the down-set of e.
    """
    if size_d < 3:
        raise ValueError("special P_d needs d >= 3")
    n = len(P)
    need = size_d - 3
    for k in range(1, n + 1):
        j = P[k - 1]
        e = j + 1
        if j == 0 or e >= k:
            continue
        floor = P[e - 1]       # elements <= floor lie below e
        if floor >= j:
            continue           # j <_P e
        if need == 0 or _longest_chain_to(P, j, floor) > need:
            return True
    return False


def _longest_chain_to(P, top, floor):
    """Length of the longest chain ending at ``top`` using elements > floor."""
    best = {}
    for x in range(floor + 1, top + 1):
        below = [best[y] for y in range(floor + 1, P[x - 1] + 1)]
        best[x] = 1 + max(below, default=0)
    return best[top]


def contains_special_P_brute(P, size_d):
    """Reference check straight from the definition, over all subsets."""
    n = len(P)
    for chain in combinations(range(1, n + 1), size_d - 1):
        if not all(less(P, a, b) for a, b in zip(chain, chain[1:])):
            continue
        e = chain[-2] + 1
        if e >= chain[-1]:
            continue
        if any(less(P, c, e) or less(P, e, c) for c in chain):
            continue
        return True
    return False


def iter_Av_P(n, size_d):
    for P in iter_factorial(n):
        if not contains_special_P(P, size_d):
            yield P


def count_Av_P(n, size_d):
    return sum(1 for _ in iter_Av_P(n, size_d))


def po(alpha, d):
    """The injection po: dA_n -> Av_n(P_{d+3}), ``i <_P j iff dasc(alpha_i) < a_j``."""
    if d < 1:
        raise PreconditionError("po requires d >= 1", condition="d >= 1")
    if not is_d_ascent_sequence(alpha, d):
        raise PreconditionError(f"{alpha!r} is not a {d}-ascent sequence",
                                condition=f"not a {d}-ascent sequence")
    n = len(alpha)
    dasc = prefix_d_ascents(alpha, d)
    rel = {(i, j) for i in range(1, n + 1) for j in range(1, n + 1)
           if i != j and dasc[i - 1] < alpha[j - 1]}
    return to_downmax(n, rel)


def po_inverse(P, d):
    """Rebuild alpha from po(alpha): a_k = 0 for minimal k, otherwise
    ``dasc(alpha_{m_k}) + 1``."""
    alpha = []
    dasc = []
    for k, m in enumerate(P, start=1):
        a = 0 if m == 0 else dasc[m - 1] + 1
        if k > 1:
            step = dasc[-1] + (a > alpha[-1] - d)
        else:
            step = 0
        alpha.append(a)
        dasc.append(step)
    alpha = tuple(alpha)
    if not is_d_ascent_sequence(alpha, d) or po(alpha, d) != tuple(P):
        raise PreconditionError("poset is not in the image of po",
                                condition="not in image of po")
    return alpha
