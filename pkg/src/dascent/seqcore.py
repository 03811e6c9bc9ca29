"""Integer sequences, difference-d ascents and the basic enumerators.

Sequences are plain tuples of nonnegative ints.  Positions reported to the
caller (ascent sets, factor boundaries) are 1-based, matching the usual
combinatorial convention ``a_1 a_2 ... a_n``.
"""

from functools import lru_cache

from .errors import PreconditionError


def d_ascent_set(alpha, d):
    """Return the 1-based positions k with ``a_{k+1} > a_k - d``."""
    return {k + 1 for k in range(len(alpha) - 1) if alpha[k + 1] > alpha[k] - d}


def d_ascent_number(alpha, d):
    return sum(1 for k in range(len(alpha) - 1) if alpha[k + 1] > alpha[k] - d)


def prefix_d_ascents(alpha, d):
    """List ``dasc(alpha_k)`` for k = 1..n (index k-1 holds prefix length k)."""
    out = []
    count = 0
    for k, a in enumerate(alpha):
        if k and a > alpha[k - 1] - d:
            count += 1
        out.append(count)
    return out


def is_d_ascent_sequence(alpha, d):
    if not alpha:
        return True
    if alpha[0] != 0 or any(a < 0 for a in alpha):
        return False
    dasc = 0
    for k in range(1, len(alpha)):
        if alpha[k] > 1 + dasc:
            return False
        if alpha[k] > alpha[k - 1] - d:
            dasc += 1
    return True


def require_d_ascent(alpha, d):
    """Raise :class:`PreconditionError` unless alpha is a d-ascent sequence."""
    if not is_d_ascent_sequence(alpha, d):
        raise PreconditionError(
            f"{alpha!r} is not a {d}-ascent sequence",
            condition=f"not a {d}-ascent sequence",
        )


def _extend_dA(prefix, n, d, dasc):
    if len(prefix) == n:
        yield tuple(prefix)
        return
    last = prefix[-1]
    for v in range(dasc + 2):
        prefix.append(v)
        yield from _extend_dA(prefix, n, d, dasc + (v > last - d))
        prefix.pop()


def iter_dA(n, d):
    """Yield the d-ascent sequences of length n in lexicographic order."""
    if n == 0:
        yield ()
        return
    yield from _extend_dA([0], n, d, 0)


def enumerate_dA(n, d):
    return list(iter_dA(n, d))


@lru_cache(maxsize=None)
def _count_dA_from(remaining, d, last, dasc):
    if remaining == 0:
        return 1
    return sum(
        _count_dA_from(remaining - 1, d, v, dasc + (v > last - d))
        for v in range(dasc + 2)
    )


def count_dA(n, d):
    """Number of d-ascent sequences of length n.

    Memoised over (remaining length, last entry, dasc so far), which is all
    the prefix information the extension rule looks at.
    """
    if n == 0:
        return 1
    return _count_dA_from(n - 1, d, 0, 0)


def is_inversion_sequence(alpha):
    return all(0 <= a < k for k, a in enumerate(alpha, start=1))


def iter_I(n):
    """Inversion sequences of length n, lexicographic."""
    def rec(prefix):
        k = len(prefix)
        if k == n:
            yield tuple(prefix)
            return
        for v in range(k + 1):
            prefix.append(v)
            yield from rec(prefix)
            prefix.pop()
    yield from rec([])


def enumerate_I(n):
    return list(iter_I(n))


def is_d_increasing(alpha, d):
    return all(alpha[k + 1] > alpha[k] - d for k in range(len(alpha) - 1))


def is_dI_member(alpha, d):
    """Membership in dI_n: a_1 = 0 and ``a_k - d < a_{k+1} <= k``."""
    if not alpha:
        return True
    if alpha[0] != 0:
        return False
    return all(
        alpha[k - 1] - d < alpha[k] <= k for k in range(1, len(alpha))
    )


def iter_dI(n, d):
    if n == 0:
        yield ()
        return

    def rec(prefix):
        k = len(prefix)
        if k == n:
            yield tuple(prefix)
            return
        for v in range(max(0, prefix[-1] - d + 1), k + 1):
            prefix.append(v)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([0])


def enumerate_dI(n, d):
    return list(iter_dI(n, d))


def count_dI(n, d):
    if n == 0:
        return 1
    # ways[v] = number of valid prefixes of the current length ending in v
    ways = {0: 1}
    for k in range(1, n):
        nxt = {}
        for last, c in ways.items():
            for v in range(max(0, last - d + 1), k + 1):
                nxt[v] = nxt.get(v, 0) + c
        ways = nxt
    return sum(ways.values())


def d_ascent_factorization(alpha, d):
    """Split alpha after every d-ascent; factors are returned as tuples."""
    if not alpha:
        return []
    factors = []
    start = 0
    for k in range(len(alpha) - 1):
        if alpha[k + 1] > alpha[k] - d:
            factors.append(tuple(alpha[start:k + 1]))
            start = k + 1
    factors.append(tuple(alpha[start:]))
    return factors
