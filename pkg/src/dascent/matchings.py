"""Perfect matchings on [2n] and the Claesson-Linusson map on inversion
sequences.

A matching is a tuple of edges ``(i, j)`` with ``i < j``, sorted by right
endpoint, so ``edges[k-1]`` is the edge e_k.
"""

from .errors import PreconditionError
from .seqcore import is_d_ascent_sequence, is_inversion_sequence


def normalize(edges):
    """Sort endpoints within each edge and order edges by right endpoint."""
    m = tuple(sorted((tuple(sorted(e)) for e in edges), key=lambda e: e[1]))
    verts = sorted(v for e in m for v in e)
    if verts != list(range(1, 2 * len(m) + 1)):
        raise ValueError("edges do not form a perfect matching on [2n]")
    return m


def inv_to_matching(alpha):
    """The map mh: I_n -> matchings without left nestings."""
    if not is_inversion_sequence(alpha):
        raise PreconditionError(f"{alpha!r} is not an inversion sequence",
                                condition="not an inversion sequence")
    # line[p] is the edge index (0-based) owning the vertex at position p
    line = []
    for k, a in enumerate(alpha):
        # right endpoints, in left-to-right order, are the edges 0..k-1
        right_pos = []
        seen = set()
        for p, e in enumerate(line):
            if e in seen:
                right_pos.append(p)
            seen.add(e)
        where = right_pos[a] if a < k else len(line)
        line.insert(where, k)
        line.append(k)
    ends = {}
    for p, e in enumerate(line, start=1):
        ends.setdefault(e, []).append(p)
    return tuple(tuple(ends[e]) for e in range(len(alpha)))


def lef(m, k):
    """Number of edges lying wholly to the left of e_k (k is 1-based)."""
    i = m[k - 1][0]
    return sum(1 for _, l in m if l < i)


def matching_to_inv(m):
    return tuple(lef(m, k) for k in range(1, len(m) + 1))


def nestings(m):
    """All pairs (outer, inner) of 1-based edge indices with i < k < l < j."""
    out = []
    for p, (i, j) in enumerate(m, start=1):
        for q, (k, l) in enumerate(m, start=1):
            if i < k < l < j:
                out.append((p, q))
    return out


def left_nestings(m):
    return [(p, q) for p, q in nestings(m) if m[q - 1][0] == m[p - 1][0] + 1]


def right_nestings(m):
    return [(p, q) for p, q in nestings(m) if m[p - 1][1] == m[q - 1][1] + 1]


def has_left_nesting(m):
    partner = {}
    for i, j in m:
        partner[i] = j
        partner[j] = i
    # a left nesting is an edge ij with i+1 opening an edge that closes before j
    for i, j in m:
        k = i + 1
        if k < j and partner[k] > k and partner[k] < j:
            return True
    return False


def restrict(m, k):
    """The matching formed by e_1..e_k, relabeled onto [2k]."""
    edges = m[:k]
    verts = sorted(v for e in edges for v in e)
    rank = {v: r for r, v in enumerate(verts, start=1)}
    return tuple((rank[i], rank[j]) for i, j in edges)


def ddis(m, d):
    """Number of d-displacements: k with ``lef(e_{k+1}) > lef(e_k) - d``."""
    lefs = matching_to_inv(m)
    return sum(1 for k in range(len(m) - 1) if lefs[k + 1] > lefs[k] - d)


def is_d_matching(m, d):
    if has_left_nesting(m):
        return False
    for k in range(1, len(m)):
        if lef(m, k + 1) > 1 + ddis(restrict(m, k), d):
            return False
    return True


def iter_matchings(n):
    """All (2n-1)!! perfect matchings on [2n], normalized."""
    def rec(free):
        if not free:
            yield []
            return
        first = free[0]
        for idx in range(1, len(free)):
            rest = free[1:idx] + free[idx + 1:]
            for tail in rec(rest):
                yield [(first, free[idx])] + tail
    for edges in rec(list(range(1, 2 * n + 1))):
        yield tuple(sorted(edges, key=lambda e: e[1]))


def count_dMch(n, d):
    return sum(1 for m in iter_matchings(n) if is_d_matching(m, d))


def mh_on_dA(alpha, d):
    """mh restricted to dA_n (rejects sequences outside dA_n)."""
    if not is_d_ascent_sequence(alpha, d):
        raise PreconditionError(f"{alpha!r} is not a {d}-ascent sequence",
                                condition=f"not a {d}-ascent sequence")
    return inv_to_matching(alpha)
