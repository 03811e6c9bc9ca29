"""Text and JSON forms of every object the CLI reads or writes."""

import re

from .errors import ParseError
from .matchings import normalize
from .permpat import BivincularPattern
from .posets import covers, is_downmax
from .duptrees import canonical, is_duptree_shape, is_leaf


def format_seq(alpha):
    return ",".join(str(a) for a in alpha)


def parse_seq(text):
    text = text.strip()
    if not text:
        return ()
    try:
        out = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(f"bad integer sequence: {text!r}") from None
    if any(x < 0 for x in out):
        raise ParseError("sequence entries must be nonnegative")
    return out


def format_matrix(M):
    return ";".join(",".join(str(x) for x in row) for row in M)


def parse_matrix(text):
    text = text.strip()
    if not text:
        return ()
    try:
        rows = tuple(tuple(int(x) for x in r.split(",")) for r in text.split(";"))
    except ValueError:
        raise ParseError(f"bad matrix: {text!r}") from None
    if any(len(r) != len(rows) for r in rows):
        raise ParseError("matrix must be square")
    return rows


def matrix_json(M):
    return {"dim": len(M), "rows": [list(r) for r in M]}


def format_matching(m):
    return ",".join(f"{i}-{j}" for i, j in m)


def parse_matching(text):
    text = text.strip()
    if not text:
        return ()
    try:
        edges = [tuple(int(x) for x in e.split("-")) for e in text.split(",")]
        if any(len(e) != 2 for e in edges):
            raise ValueError
        return normalize(edges)
    except ValueError as exc:
        raise ParseError(f"bad matching: {text!r} ({exc})") from None


def format_perm(pi):
    if len(pi) <= 9:
        return "".join(str(p) for p in pi)
    return " ".join(str(p) for p in pi)


def parse_perm(text):
    text = text.strip()
    try:
        if " " in text or "," in text:
            pi = tuple(int(x) for x in re.split(r"[ ,]+", text))
        else:
            pi = tuple(int(c) for c in text)
    except ValueError:
        raise ParseError(f"bad permutation: {text!r}") from None
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise ParseError(f"{text!r} is not a permutation of [n]")
    return pi


def format_pattern(p):
    return str(p)


def parse_pattern(text):
    """Parse e.g. ``3|412 bar=2``."""
    text = text.strip()
    body, _, rest = text.partition(" ")
    bars = set()
    if rest:
        rest = rest.strip()
        if not rest.startswith("bar="):
            raise ParseError(f"bad pattern: {text!r}")
        bars = {int(x) for x in rest[4:].split(",") if x}
    perm = []
    pos = set()
    for ch in body:
        if ch == "|":
            pos.add(len(perm))
        elif ch.isdigit():
            perm.append(int(ch))
        else:
            raise ParseError(f"bad pattern: {text!r}")
    try:
        return BivincularPattern(tuple(perm), frozenset(pos), frozenset(bars))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_poset(P):
    return format_seq(P)


def parse_poset(text):
    P = parse_seq(text)
    if not is_downmax(P):
        raise ParseError("downmax vector needs 0 <= m_k <= k-1")
    return P


def poset_json(P):
    return {"downmax": list(P), "covers": [list(c) for c in covers(P)]}


def format_tree(t):
    if is_leaf(t):
        return str(t)
    return f"({format_tree(t[0])},{format_tree(t[1])})"


_TOKEN = re.compile(r"\s*(\(|\)|,|\d+)")


def parse_tree(text):
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"bad tree near position {pos}: {text!r}")
        tokens.append(m.group(1))
        pos = m.end()

    def node(i):
        if i >= len(tokens):
            raise ParseError("unexpected end of tree")
        tok = tokens[i]
        if tok.isdigit():
            return int(tok), i + 1
        if tok != "(":
            raise ParseError(f"unexpected {tok!r} in tree")
        left, i = node(i + 1)
        if i >= len(tokens) or tokens[i] != ",":
            raise ParseError("expected ',' in tree")
        right, i = node(i + 1)
        if i >= len(tokens) or tokens[i] != ")":
            raise ParseError("expected ')' in tree")
        return (left, right), i + 1

    t, end = node(0)
    if end != len(tokens):
        raise ParseError("trailing input after tree")
    if not is_duptree_shape(t):
        raise ParseError("tree must be binary with leaves labeled 1..n, n >= 2")
    return canonical(t)


def tree_json(t):
    if is_leaf(t):
        return {"leaf": t}
    return {"children": [tree_json(t[0]), tree_json(t[1])]}
