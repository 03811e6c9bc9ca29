import pytest

from dascent.matchings import (count_dMch, ddis, has_left_nesting, inv_to_matching,
                               is_d_matching, iter_matchings, lef, left_nestings,
                               matching_to_inv, mh_on_dA, nestings, normalize,
                               restrict, right_nestings)
from dascent.seqcore import count_dA, enumerate_dA, enumerate_I

MH_0102 = ((1, 3), (4, 5), (2, 7), (6, 8))


def test_mh_example():
    assert inv_to_matching((0, 1, 0, 2)) == MH_0102
    assert inv_to_matching((0,)) == ((1, 2),)


def test_lef_examples():
    assert lef(MH_0102, 4) == 2
    assert lef(MH_0102, 2) == 1
    assert lef(MH_0102, 1) == 0


def test_inverse_examples():
    assert matching_to_inv(normalize([(1, 3), (4, 5), (2, 7), (6, 8)])) == (0, 1, 0, 2)
    assert matching_to_inv(((1, 2),)) == (0,)


def test_nesting_examples():
    m3 = normalize([(1, 3), (4, 5), (2, 6)])
    pairs = [(m3[p - 1], m3[q - 1]) for p, q in nestings(m3)]
    assert pairs == [((2, 6), (4, 5))]
    assert right_nestings(m3) and not left_nestings(m3)
    assert not nestings(((1, 2), (3, 4)))


def test_restrict_examples():
    assert restrict(MH_0102, 3) == normalize([(1, 3), (4, 5), (2, 6)])
    assert restrict(MH_0102, 4) == MH_0102
    assert restrict(MH_0102, 0) == ()


def test_single_edge():
    assert ddis(((1, 2),), 2) == 0
    assert is_d_matching(((1, 2),), 2)


def brute_nestings(m):
    return [(e, f) for e in m for f in m if e[0] < f[0] < f[1] < e[1]]


@pytest.mark.parametrize("n", range(1, 7))
def test_mh_on_inversion_sequences(n):
    seen = set()
    for a in enumerate_I(n):
        m = inv_to_matching(a)
        assert sorted(x for e in m for x in e) == list(range(1, 2 * n + 1))
        assert not any(f[0] == e[0] + 1 for e, f in brute_nestings(m))
        assert not has_left_nesting(m)
        assert matching_to_inv(m) == a
        assert all(lef(m, k) == a[k - 1] for k in range(1, n + 1))
        seen.add(m)
    assert len(seen) == len(enumerate_I(n))


@pytest.mark.parametrize("n", range(1, 6))
def test_left_nesting_free_matchings_are_exactly_the_image(n):
    free = {m for m in iter_matchings(n) if not has_left_nesting(m)}
    assert free == {inv_to_matching(a) for a in enumerate_I(n)}


def test_matching_total():
    assert [sum(1 for _ in iter_matchings(n)) for n in range(1, 6)] == [1, 3, 15, 105, 945]


@pytest.mark.parametrize("d", (0, 1, 2))
@pytest.mark.parametrize("n", range(7))
def test_mh_restricts_to_dA(n, d):
    for a in enumerate_dA(n, d):
        assert is_d_matching(mh_on_dA(a, d), d)


@pytest.mark.parametrize("d", (0, 1, 2))
@pytest.mark.parametrize("n", range(6))
def test_dMch_count(n, d):
    assert count_dMch(n, d) == count_dA(n, d)


def test_normalize_rejects_non_matchings():
    with pytest.raises(ValueError):
        normalize([(1, 2), (2, 3)])
    with pytest.raises(ValueError):
        normalize([(1, 3)])
