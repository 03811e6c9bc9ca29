"""Upper-triangular matrices attached to d-ascent sequences.

A matrix is a tuple of row tuples, rows and columns indexed 0..m.  The empty
matrix (m = -1) is ``()``.
"""

from itertools import combinations

from .errors import PreconditionError
from .seqcore import d_ascent_factorization, is_d_ascent_sequence, iter_dA


def zero_matrix(size):
    return tuple((0,) * size for _ in range(size))


def _freeze(rows):
    return tuple(tuple(r) for r in rows)


def column(M, j):
    return [row[j] for row in M]


def rmin_rmax(M, j):
    """Smallest and largest row index of a nonzero entry in column j, or None."""
    rows = [i for i, row in enumerate(M) if row[j]]
    if not rows:
        return None
    return rows[0], rows[-1]


def is_upper_triangular(M):
    return all(M[i][j] == 0 for i in range(len(M)) for j in range(i))


def is_d_matrix(M, d):
    """Conditions (M1)-(M3) for d >= 1."""
    if d < 1:
        raise ValueError("d-matrices are defined for d >= 1")
    size = len(M)
    if any(len(row) != size for row in M):
        return False
    if any(x not in (0, 1) for row in M for x in row):
        return False
    if not is_upper_triangular(M):
        return False
    bounds = []
    for j in range(size):
        rows = [i for i in range(size) if M[i][j]]
        if not rows:
            return False
        # (M2): at least d-1 zeros between consecutive ones
        if any(b - a < d for a, b in zip(rows, rows[1:])):
            return False
        bounds.append((rows[0], rows[-1]))
    for j in range(1, size):
        if not bounds[j][1] > bounds[j - 1][0] - d:
            return False
    return True


def _accumulate(alpha, d):
    factors = d_ascent_factorization(alpha, d)
    size = len(factors)
    M = [[0] * size for _ in range(size)]
    for j, factor in enumerate(factors):
        for a in factor:
            M[a][j] += 1
    return _freeze(M)


def seq_to_matrix(alpha, d):
    """The map mx: dA_n -> dMtx_n (d >= 1)."""
    if d < 1:
        raise ValueError("use seq_to_matrix_d0 for d = 0")
    if not is_d_ascent_sequence(alpha, d):
        raise PreconditionError(f"{alpha!r} is not a {d}-ascent sequence",
                                condition=f"not a {d}-ascent sequence")
    return _accumulate(alpha, d)


def _read_columns(M):
    # each column is one factor; its entries are written largest row first
    alpha = []
    for j in range(len(M)):
        for i in range(j, -1, -1):
            alpha.extend([i] * M[i][j])
    return tuple(alpha)


def matrix_to_seq(M, d):
    """Inverse of :func:`seq_to_matrix`."""
    if not is_d_matrix(M, d):
        raise PreconditionError("matrix is not a d-matrix",
                                condition=f"not a {d}-matrix")
    return _read_columns(M)


def iter_dMtx(n, d):
    for alpha in iter_dA(n, d):
        yield seq_to_matrix(alpha, d)


def enumerate_dMtx(n, d):
    return list(iter_dMtx(n, d))


def iter_upper_01(n, size):
    """Upper-triangular 0-1 matrices of the given size with exactly n ones."""
    cells = [(i, j) for j in range(size) for i in range(j + 1)]
    for chosen in combinations(cells, n):
        M = [[0] * size for _ in range(size)]
        for i, j in chosen:
            M[i][j] = 1
        yield _freeze(M)


def enumerate_dMtx_direct(n, d):
    """Generate-and-filter over all upper-triangular 0-1 matrices."""
    if n == 0:
        return [()]
    return [M for size in range(1, n + 1) for M in iter_upper_01(n, size)
            if is_d_matrix(M, d)]


# --- d = 0: nonnegative integer matrices -----------------------------------

def is_asc_matrix_Mb(M):
    """(Ma) upper triangular, nonnegative; (Mb) no zero column and
    ``rmax c_j > rmin c_{j-1}``."""
    size = len(M)
    if any(len(row) != size for row in M):
        return False
    if any(x < 0 for row in M for x in row) or not is_upper_triangular(M):
        return False
    bounds = [rmin_rmax(M, j) for j in range(size)]
    if any(b is None for b in bounds):
        return False
    return all(bounds[j][1] > bounds[j - 1][0] for j in range(1, size))


def is_dp_matrix(M):
    """(Ma) plus (Mc): no zero rows and no zero columns."""
    size = len(M)
    if any(len(row) != size for row in M):
        return False
    if any(x < 0 for row in M for x in row) or not is_upper_triangular(M):
        return False
    if any(not any(row) for row in M):
        return False
    return all(any(M[i][j] for i in range(size)) for j in range(size))


def seq_to_matrix_d0(alpha):
    """mx for ascent sequences; repeated entries in a factor stack up."""
    if not is_d_ascent_sequence(alpha, 0):
        raise PreconditionError(f"{alpha!r} is not an ascent sequence",
                                condition="not an ascent sequence")
    return _accumulate(alpha, 0)


def matrix_to_seq_d0(M):
    if not is_asc_matrix_Mb(M):
        raise PreconditionError("matrix violates (Ma)/(Mb)",
                                condition="not in Mtx_n")
    return _read_columns(M)


def _column_vectors(height, total):
    """Nonzero vectors of length ``height`` with entries summing to <= total."""
    def rec(i, left):
        if i == height:
            yield ()
            return
        for x in range(left + 1):
            for rest in rec(i + 1, left - x):
                yield (x,) + rest
    for vec in rec(0, total):
        if any(vec):
            yield vec


def iter_upper_nonneg(n):
    """Upper-triangular nonnegative integer matrices with entry sum n and no
    zero column, over every size 1..n (plus the empty matrix when n = 0)."""
    if n == 0:
        yield ()
        return
    for size in range(1, n + 1):
        def rec(j, left, cols):
            if j == size:
                if left == 0:
                    M = [[0] * size for _ in range(size)]
                    for jj, vec in enumerate(cols):
                        for i, x in enumerate(vec):
                            M[i][jj] = x
                    yield _freeze(M)
                return
            # every remaining column needs at least one unit
            for vec in _column_vectors(j + 1, left - (size - j - 1)):
                yield from rec(j + 1, left - sum(vec), cols + [vec])
        yield from rec(0, n, [])


def count_Mtx(n):
    return sum(1 for M in iter_upper_nonneg(n) if is_asc_matrix_Mb(M))


def count_dp(n):
    return sum(1 for M in iter_upper_nonneg(n) if is_dp_matrix(M))
