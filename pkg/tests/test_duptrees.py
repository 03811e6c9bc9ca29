import pytest
from hypothesis import given, settings, strategies as st

from dascent.duptrees import (T2, canonical, count_RDT, duplicate, enumerate_RDT,
                              is_duptree_shape, leftmost_event, leaves, reduce,
                              reduction_history, reduction_sequence, siblings, size,
                              tree_from_sequence, visible_events)
from dascent.errors import PreconditionError
from dascent.seqcore import count_dI, enumerate_dI

T8 = canonical(((8, 4), ((1, 5), ((2, 3), (6, 7)))))
T7 = canonical((((1, 4), (2, (5, 6))), (3, 7)))
T6 = canonical((((1, 4), (2, 5)), (3, 6)))
T5 = canonical((((1, 3), (2, 4)), 5))
T12 = canonical(((12, (5, 8)), ((1, (2, 3)), (((4, 7), (10, 11)), (6, 9)))))
PHI_T = canonical(((6, 3), ((1, 4), (2, 5))))
PHI_T_PRIME = canonical((((3, 6), 9), ((1, (4, 7)), ((2, 5), 8))))


def test_canonical_form():
    assert canonical((2, 1)) == T2 == (1, 2)
    assert is_duptree_shape(T8) and size(T8) == 8
    assert sorted(leaves(T12)) == list(range(1, 13))


def test_duplication_examples():
    assert duplicate(PHI_T, 2, 3) == PHI_T_PRIME
    t = duplicate(T2, 0, 1)
    assert siblings(t)[2] == 3
    with pytest.raises(PreconditionError):
        duplicate(T2, 2, 1)


def test_visible_events_examples():
    assert set(visible_events(T12)) == {(9, 1), (3, 3), (1, 1)}
    assert visible_events(T2) == [(0, 1)]
    assert leftmost_event(T12) == (9, 1)
    assert leftmost_event(T2) == (0, 1)
    assert leftmost_event(T8) == (5, 1)


def test_reduction_examples():
    assert reduce(T8) == (T7, (5, 1))
    assert reduce(T6) == (T5, (0, 3))
    events = [e for _, e in reduction_history(T8)]
    assert events == [(5, 1), (1, 1), (0, 3), (1, 2), (2, 1), (1, 1)]


def test_alpha_examples():
    assert reduction_sequence(T8) == (0, 1, 2, 1, 0, 1, 5)
    assert reduction_sequence(T2) == (0,)
    assert tree_from_sequence((0, 1, 2, 1, 0, 1, 5)) == T8
    assert tree_from_sequence((0,)) == T2


def test_tree_from_sequence_rejects_bad_input():
    with pytest.raises(PreconditionError):
        tree_from_sequence((0, 2))
    with pytest.raises(PreconditionError):
        tree_from_sequence((0, 1, 2, 0))


def brute_visible(t):
    """(a, r) is visible iff some tree maps onto t under phi_{a,r}."""
    n = size(t)
    out = set()
    for r in range(1, n // 2 + 1):
        for a in range(n - 2 * r + 1):
            # candidate preimage exists iff t equals duplicate of something;
            # search all smaller trees of the right size
            for s in RDT_BY_SIZE.get(n - r, ()):
                if duplicate(s, a, r) == t:
                    out.add((a, r))
                    break
    return out


RDT_BY_SIZE = {k: enumerate_RDT(k) for k in range(2, 8)}


@pytest.mark.parametrize("n", range(3, 8))
def test_visible_events_against_preimage_search(n):
    for t in RDT_BY_SIZE[n]:
        assert set(visible_events(t)) == brute_visible(t)


@pytest.mark.parametrize("n", range(2, 9))
def test_rdt_bijection(n):
    trees = enumerate_RDT(n)
    assert len(trees) == count_dI(n - 1, 2)
    alphas = [reduction_sequence(t) for t in trees]
    assert set(alphas) == set(enumerate_dI(n - 1, 2))
    assert len(set(alphas)) == len(trees)
    assert all(tree_from_sequence(a) == t for a, t in zip(alphas, trees))


def test_rdt_counts():
    assert count_RDT(2) == 1
    assert count_RDT(6) == 92
    assert count_RDT(9) == 10404


@settings(max_examples=200)
@given(st.lists(st.tuples(st.integers(0, 10), st.integers(1, 4)), max_size=6))
def test_random_histories_stay_in_bijection(moves):
    t = T2
    for a, r in moves:
        k = size(t)
        r = min(r, k)
        a = min(a, k - r)
        t = duplicate(t, a, r)
        assert (a, r) in visible_events(t)
    assert tree_from_sequence(reduction_sequence(t)) == t
