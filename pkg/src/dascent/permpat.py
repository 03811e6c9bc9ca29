"""Bivincular patterns, active sites, and the insertion map pe."""

from dataclasses import dataclass
from itertools import permutations

from .errors import PreconditionError
from .seqcore import is_d_ascent_sequence


@dataclass(frozen=True)
class BivincularPattern:
    """A pattern ``perm`` (one-line, values 1..k) with extra constraints.

    ``pos_adjacent`` holds positions p (1-based): the copy's p-th and
    (p+1)-st entries must be neighbours in the host.  ``val_adjacent`` holds
    values v: the host entries playing v and v+1 must differ by exactly one.
    """
    perm: tuple
    pos_adjacent: frozenset = frozenset()
    val_adjacent: frozenset = frozenset()

    def __post_init__(self):
        k = len(self.perm)
        if sorted(self.perm) != list(range(1, k + 1)):
            raise ValueError(f"{self.perm!r} is not a permutation")
        object.__setattr__(self, "perm", tuple(self.perm))
        object.__setattr__(self, "pos_adjacent", frozenset(self.pos_adjacent))
        object.__setattr__(self, "val_adjacent", frozenset(self.val_adjacent))
        if not all(1 <= p < k for p in self.pos_adjacent | self.val_adjacent):
            raise ValueError("adjacency constraints out of range")

    def __len__(self):
        return len(self.perm)

    def __str__(self):
        body = ""
        for p, s in enumerate(self.perm, start=1):
            body += str(s)
            if p in self.pos_adjacent:
                body += "|"
        if self.val_adjacent:
            body += " bar=" + ",".join(str(v) for v in sorted(self.val_adjacent))
        return body

    def _plan(self):
        # For each pattern position t: the earlier positions it must be
        # compared with, and value-adjacency checks that complete at t.
        try:
            return self.__dict__["_cached_plan"]
        except KeyError:
            pass
        where = {s: p for p, s in enumerate(self.perm)}
        steps = []
        for t, s in enumerate(self.perm):
            order = [(u, self.perm[u] < s) for u in range(t)]
            vadj = []
            for v in self.val_adjacent:
                lo, hi = where[v], where[v + 1]
                if max(lo, hi) == t:
                    vadj.append((lo, hi))
            # third field: must the next copy entry sit right after this one?
            steps.append((order, vadj, t + 1 in self.pos_adjacent))
        object.__setattr__(self, "_cached_plan", steps)
        return steps


def sigma(d):
    """The pattern ``(d-1) | d 1 2 ... (d-2)`` with a bar over d-2."""
    if d < 3:
        raise ValueError("sigma_d is defined for d >= 3")
    perm = (d - 1, d) + tuple(range(1, d - 1))
    return BivincularPattern(perm, frozenset({1}), frozenset({d - 2}))


def _search(pi, pattern, first_only):
    plan = pattern._plan()
    k = len(plan)
    n = len(pi)
    idx = [0] * k
    found = []

    def rec(t, start):
        order, vadj, _ = plan[t]
        stop = n - (k - t) + 1
        if t and plan[t - 1][2]:
            cands = (start,) if start < stop else ()
        else:
            cands = range(start, stop)
        for p in cands:
            x = pi[p]
            ok = True
            for u, less in order:
                if (pi[idx[u]] < x) != less:
                    ok = False
                    break
            if not ok:
                continue
            idx[t] = p
            if any(pi[idx[hi]] != pi[idx[lo]] + 1 for lo, hi in vadj):
                continue
            if t + 1 == k:
                found.append(tuple(pi[i] for i in idx))
                if first_only:
                    return True
            elif rec(t + 1, p + 1):
                return True
        return False

    if k <= n:
        rec(0, 0)
    return found


def contains(pi, pattern):
    return bool(_search(tuple(pi), pattern, True))


def copies(pi, pattern):
    """Every copy of the pattern in pi, as tuples of host values."""
    return _search(tuple(pi), pattern, False)


def avoids(pi, pattern):
    return not contains(pi, pattern)


def insert_max(pi, site):
    """Insert n+1 into space ``site`` (0 = before the first entry)."""
    n = len(pi)
    return tuple(pi[:site]) + (n + 1,) + tuple(pi[site:])


def site_flags(pi, pattern):
    """Active (True) / inactive (False) flag for each of the n+1 spaces."""
    if contains(pi, pattern):
        raise PreconditionError("permutation already contains the pattern",
                                condition="contains pattern")
    return [avoids(insert_max(pi, s), pattern) for s in range(len(pi) + 1)]


def active_sites(pi, pattern):
    """Space indices (0..n) of the active sites, listed left to right.

    The i-th entry of the result is the space carrying label i.
    """
    return [s for s, on in enumerate(site_flags(pi, pattern)) if on]


def act(pi, pattern):
    return len(active_sites(pi, pattern))


def pe_steps(alpha, d):
    """The permutations pi_0, ..., pi_n built while computing pe(alpha)."""
    if not is_d_ascent_sequence(alpha, d):
        raise PreconditionError(f"{alpha!r} is not a {d}-ascent sequence",
                                condition=f"not a {d}-ascent sequence")
    pattern = sigma(d + 3)
    pi = ()
    steps = [pi]
    for k, a in enumerate(alpha, start=1):
        sites = active_sites(pi, pattern)
        if a >= len(sites):
            raise PreconditionError(
                f"no active site labeled {a} in {pi!r}",
                condition="missing active site")
        pi = insert_max(pi, sites[a])
        steps.append(pi)
    return steps


def pe(alpha, d):
    """The injection pe: dA_n -> Av_n(sigma_{d+3})."""
    return pe_steps(alpha, d)[-1]


def iter_Av_brute(n, pattern):
    for pi in permutations(range(1, n + 1)):
        if not contains(pi, pattern):
            yield pi


def enumerate_Av(n, pattern):
    return list(iter_Av_brute(n, pattern))


def count_Av(n, pattern):
    return sum(1 for _ in iter_Av_brute(n, pattern))


def enumerate_Av_tree(n, pattern):
    """Av_n via the generating tree: children are insertions of n+1 at
    active sites.  Valid because deleting the maximum of an avoider leaves an
    avoider for every pattern of the sigma_d family used here."""
    level = [()]
    for _ in range(n):
        level = [insert_max(pi, s) for pi in level
                 for s in active_sites(pi, pattern)]
    return level
