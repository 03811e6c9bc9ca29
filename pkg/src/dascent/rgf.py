"""Restricted growth functions and their maps to posets, permutations and
0-1 matrices."""

from .errors import PreconditionError
from .permpat import BivincularPattern
from .posets import to_downmax


# 23|1 in dash notation: a copy bca whose b and c are adjacent in the host;
# the a may sit anywhere to the right
PATTERN_23_1 = BivincularPattern((2, 3, 1), frozenset({1}))


def is_rgf(rho):
    if not rho:
        return True
    if rho[0] != 0:
        return False
    top = 0
    for r in rho[1:]:
        if r < 0 or r > top + 1:
            return False
        top = max(top, r)
    return True


def _require(rho):
    if not is_rgf(rho):
        raise PreconditionError(f"{rho!r} is not a restricted growth function",
                                condition="not an RGF")


def iter_RGF(n):
    if n == 0:
        yield ()
        return

    def rec(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(top + 2):
            prefix.append(v)
            yield from rec(prefix, max(top, v))
            prefix.pop()

    yield from rec([0], 0)


def enumerate_RGF(n):
    return list(iter_RGF(n))


def prefix_maxima(rho):
    out = []
    top = -1
    for r in rho:
        top = max(top, r)
        out.append(top)
    return out


def rp(rho):
    """``i <_P j iff max(rho_i) < r_j``; returns the downmax vector."""
    _require(rho)
    n = len(rho)
    mx = prefix_maxima(rho)
    rel = {(i, j) for i in range(1, n + 1) for j in range(1, n + 1)
           if i != j and mx[i - 1] < rho[j - 1]}
    return to_downmax(n, rel)


def rp_inverse(P):
    rho = []
    mx = []
    for m in P:
        r = 0 if m == 0 else mx[m - 1] + 1
        rho.append(r)
        mx.append(max(mx[-1], r) if mx else r)
    rho = tuple(rho)
    if not is_rgf(rho) or rp(rho) != tuple(P):
        raise PreconditionError("poset contains a special P_3",
                                condition="contains special P_3")
    return rho


def _blocks(rho):
    blocks = {}
    for i, r in enumerate(rho, start=1):
        blocks.setdefault(r, []).append(i)
    return [blocks[v] for v in sorted(blocks)]


def claesson_perm(rho):
    """Concatenate the blocks in order of value, each written decreasingly."""
    _require(rho)
    return tuple(i for block in _blocks(rho) for i in reversed(block))


def rgf_to_binmatrix(rho):
    """n x n strictly upper-triangular 0-1 matrix, rows/columns labeled 1..n
    (stored 0-based): a one at (i, j) for consecutive members i < j of a block.
    """
    _require(rho)
    n = len(rho)
    M = [[0] * n for _ in range(n)]
    for block in _blocks(rho):
        for i, j in zip(block, block[1:]):
            M[i - 1][j - 1] = 1
    return tuple(tuple(r) for r in M)


def is_rook_placement(M):
    """Strictly upper triangular 0-1 with at most one 1 per row and column."""
    n = len(M)
    if any(M[i][j] for i in range(n) for j in range(i + 1)):
        return False
    if any(x not in (0, 1) for row in M for x in row):
        return False
    return (all(sum(row) <= 1 for row in M)
            and all(sum(M[i][j] for i in range(n)) <= 1 for j in range(n)))
