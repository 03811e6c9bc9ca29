"""Rooted duplication trees and their bijection with 2-increasing 2-ascent
sequences.

A tree is either a leaf label (int) or a pair of subtrees.  The outermost
pair stands for the root edge, so the two-leaf tree is ``(1, 2)``.  Trees are
unordered; :func:`canonical` sorts every pair by minimum leaf label and all
functions here return canonical trees.
"""

from .errors import PreconditionError
from .seqcore import count_dI, is_dI_member

T2 = (1, 2)


def is_leaf(t):
    return isinstance(t, int)


def min_leaf(t):
    return t if is_leaf(t) else min(min_leaf(t[0]), min_leaf(t[1]))


def canonical(t):
    if is_leaf(t):
        return t
    a, b = canonical(t[0]), canonical(t[1])
    return (a, b) if min_leaf(a) < min_leaf(b) else (b, a)


def leaves(t):
    if is_leaf(t):
        return [t]
    return leaves(t[0]) + leaves(t[1])


def size(t):
    return len(leaves(t))


def is_duptree_shape(t):
    """Binary, n >= 2, leaves labeled exactly 1..n."""
    if is_leaf(t):
        return False

    def binary(x):
        return is_leaf(x) or (isinstance(x, tuple) and len(x) == 2
                              and binary(x[0]) and binary(x[1]))
    return binary(t) and sorted(leaves(t)) == list(range(1, size(t) + 1))


def siblings(t):
    """Map each leaf whose sibling is also a leaf to that sibling."""
    out = {}

    def walk(x):
        if is_leaf(x):
            return
        a, b = x
        if is_leaf(a) and is_leaf(b):
            out[a] = b
            out[b] = a
        walk(a)
        walk(b)

    walk(t)
    return out


def _map_leaves(t, f):
    """Replace each leaf l by f(l), which may be a leaf or a subtree."""
    if is_leaf(t):
        return f(t)
    return (_map_leaves(t[0], f), _map_leaves(t[1], f))


def duplicate(t, a, r):
    """phi_{a,r}: duplicate the block of r leaves that has a leaves after it."""
    n = size(t)
    if a < 0 or r < 1 or r > n - a:
        raise PreconditionError(f"need a >= 0 and 1 <= r <= n - a (n={n})",
                                condition="duplication parameters out of range")

    def f(l):
        if l > n - a:
            return l + r
        if l > n - a - r:
            return (l, l + r)
        return l

    return canonical(_map_leaves(t, f))


def _event_for(sib, n, a):
    """The r of a visible (a, r) event, or None."""
    top = n - a
    m = sib.get(top)
    if m is None or m >= top:
        return None
    r = top - m
    if top - 2 * r + 1 < 1:
        return None
    for l in range(top - r + 1, top + 1):
        if sib.get(l) != l - r:
            return None
    return r


def visible_events(t):
    """Visible (a, r) duplication events, by decreasing a.

    (a, r) is visible when {l, l-r} is a leaf pair for every l in
    [n-a-r+1, n-a]; those pairs cover the leaves n-a-2r+1 .. n-a.
    """
    n = size(t)
    sib = siblings(t)
    events = []
    for a in range(n - 2, -1, -1):
        r = _event_for(sib, n, a)
        if r is not None:
            events.append((a, r))
    return events


def leftmost_event(t):
    events = visible_events(t)
    if not events:
        raise PreconditionError("tree has no visible duplication event",
                                condition="no visible event")
    return events[0]


def reduce(t):
    """Canonical reduction at the leftmost event; returns (tree, (a, r))."""
    k = size(t)
    if k < 3:
        raise PreconditionError("cannot reduce a tree with fewer than 3 leaves",
                                condition="too few leaves")
    a, r = leftmost_event(t)
    gone, keep = k - a - r, k - a

    def collapse(x):
        if is_leaf(x):
            return x
        if all(is_leaf(y) for y in x) and sorted(x) == [gone, keep]:
            return keep
        return (collapse(x[0]), collapse(x[1]))

    t = collapse(t)
    t = _map_leaves(t, lambda l: l - 1 if l > gone else l)
    return canonical(t), (a, r)


def reduction_history(t):
    """Pairs (T_k, (a_k, r_k)) for k = n down to 3, ending just before T_2."""
    t = canonical(t)
    history = []
    while size(t) > 2:
        smaller, event = reduce(t)
        history.append((t, event))
        t = smaller
    if t != T2:
        raise PreconditionError("reduction did not end at T_2",
                                condition="not a rooted duplication tree")
    return history


def reduction_sequence(t):
    """alpha(T) = (a_2, a_3, ..., a_n) with a_2 = 0."""
    events = [a for _, (a, _) in reduction_history(t)]
    return (0,) + tuple(reversed(events))


def tree_from_sequence(alpha):
    """Inverse of :func:`reduction_sequence` on 2-increasing 2-ascent sequences."""
    alpha = tuple(alpha)
    if not alpha or not is_dI_member(alpha, 2):
        raise PreconditionError(f"{alpha!r} is not a 2-increasing 2-ascent sequence",
                                condition="not in tI")
    t = T2
    r_prev = 1
    # alpha[i] is a_{i+2}; step from T_k to T_{k+1}
    for k in range(2, len(alpha) + 1):
        a, a_prev = alpha[k - 1], alpha[k - 2]
        r = r_prev + 1 if a == a_prev - 1 else 1
        low = k - a - r
        if low < 0:
            raise PreconditionError("sequence leads to an invalid duplication",
                                    condition="not in tI")
        t = _map_leaves(t, lambda l: l + 1 if l > low else l)
        target = k - a + 1
        t = _map_leaves(t, lambda l: (low + 1, target) if l == target else l)
        t = canonical(t)
        r_prev = r
    return t


def enumerate_RDT(n):
    """RDT_n built by closing T_2 under every admissible phi_{a,r}."""
    if n < 2:
        return []
    by_size = {2: {T2}}
    for m in range(3, n + 1):
        found = set()
        for src in range(2, m):
            r = m - src
            for t in by_size[src]:
                for a in range(0, src - r + 1):
                    found.add(duplicate(t, a, r))
        by_size[m] = found
    return sorted(by_size[n], key=str)


def count_RDT(n):
    if n < 2:
        raise ValueError("RDT_n needs n >= 2")
    return count_dI(n - 1, 2)
