import pytest
from hypothesis import given, strategies as st

from dascent.duptrees import canonical
from dascent.errors import ParseError
from dascent.permpat import sigma
from dascent.textio import (format_matching, format_matrix, format_pattern, format_perm,
                            format_poset, format_seq, format_tree, matrix_json,
                            parse_matching, parse_matrix, parse_pattern, parse_perm,
                            parse_poset, parse_seq, parse_tree, poset_json, tree_json)


@given(st.lists(st.integers(0, 50)).map(tuple))
def test_seq_round_trip(s):
    assert parse_seq(format_seq(s)) == s


def test_seq_forms():
    assert format_seq((0, 1, 0, 2)) == "0,1,0,2"
    assert parse_seq("") == ()
    for bad in ("0,,1", "a", "0,-1"):
        with pytest.raises(ParseError):
            parse_seq(bad)


def test_matrix_forms():
    M = ((1, 0), (0, 1))
    assert format_matrix(M) == "1,0;0,1"
    assert parse_matrix("1,0;0,1") == M
    assert matrix_json(M) == {"dim": 2, "rows": [[1, 0], [0, 1]]}
    with pytest.raises(ParseError):
        parse_matrix("1,0;1")


def test_matching_forms():
    m = parse_matching("1-3,4-5,2-7,6-8")
    assert format_matching(m) == "1-3,4-5,2-7,6-8"
    with pytest.raises(ParseError):
        parse_matching("1-2,2-3")


def test_perm_forms():
    assert format_perm((6, 3, 1, 2, 5, 4)) == "631254"
    assert parse_perm("631254") == (6, 3, 1, 2, 5, 4)
    long = tuple(range(10, 0, -1))
    assert parse_perm(format_perm(long)) == long
    with pytest.raises(ParseError):
        parse_perm("113")


def test_pattern_forms():
    assert format_pattern(sigma(4)) == "3|412 bar=2"
    assert parse_pattern("3|412 bar=2") == sigma(4)
    assert parse_pattern(format_pattern(sigma(6))) == sigma(6)
    with pytest.raises(ParseError):
        parse_pattern("3|4x2")


def test_poset_forms():
    P = (0, 1, 2, 0, 4, 2)
    assert parse_poset(format_poset(P)) == P
    assert poset_json(P)["downmax"] == list(P)
    with pytest.raises(ParseError):
        parse_poset("0,2")


def test_tree_forms():
    t = canonical(((8, 4), ((1, 5), ((2, 3), (6, 7)))))
    text = format_tree(t)
    assert text == "(((1,5),((2,3),(6,7))),(4,8))"
    assert parse_tree("((8,4),((1,5),((2,3),(6,7))))") == t
    assert tree_json((1, 2)) == {"children": [{"leaf": 1}, {"leaf": 2}]}
    for bad in ("(1,3)", "(1,2", "(1,(2))", "1"):
        with pytest.raises(ParseError):
            parse_tree(bad)
