"""Count tables and their CSV / JSON rendering.

``PUBLISHED`` holds the reference values the computed tables are checked
against (rows indexed by d, columns by n).
"""

import csv
import io
import json

from .permpat import count_Av, sigma
from .posets import count_Av_P
from .seqcore import count_dA, count_dI

MAX_D = 6
MAX_N = 10

PUBLISHED_DA = [
    [1, 1, 2, 5, 15, 53, 217, 1014, 5335, 31240, 201608],
    [1, 1, 2, 6, 23, 106, 567, 3440, 23286, 173704, 1414102],
    [1, 1, 2, 6, 24, 118, 682, 4506, 33376, 273200, 2444274],
    [1, 1, 2, 6, 24, 120, 714, 4896, 37854, 324792, 3055320],
    [1, 1, 2, 6, 24, 120, 720, 5016, 39624, 348840, 3378192],
    [1, 1, 2, 6, 24, 120, 720, 5040, 40200, 358800, 3534120],
    [1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362160, 3600720],
]

PUBLISHED_DI = [
    [1] * 11,
    [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796],
    [1, 1, 2, 6, 22, 92, 420, 2042, 10404, 54954, 298648],
    [1, 1, 2, 6, 24, 114, 612, 3600, 22680, 150732, 1045440],
    [1, 1, 2, 6, 24, 120, 696, 4512, 31920, 242160, 1942800],
    [1, 1, 2, 6, 24, 120, 720, 4920, 37200, 305280, 2680800],
    [1, 1, 2, 6, 24, 120, 720, 5040, 39600, 341280, 3175200],
]

# n = 1..8
PUBLISHED_AV_SIGMA5 = [1, 2, 6, 24, 119, 699, 4721, 35904]
PUBLISHED_AV_P5 = [1, 2, 6, 24, 119, 700, 4747, 36370]

TABLES = ("dA", "dI", "av_sigma5_vs_tA", "av_P5_vs_tA")


def grid(count, max_d=MAX_D, max_n=MAX_N):
    return [[count(n, d) for n in range(max_n + 1)] for d in range(max_d + 1)]


def dA_table(max_d=MAX_D, max_n=MAX_N):
    return grid(count_dA, max_d, max_n)


def dI_table(max_d=MAX_D, max_n=MAX_N):
    return grid(count_dI, max_d, max_n)


def comparison_table(which, max_n=8):
    """Two rows over n = 1..max_n: #tA_n and the matching avoidance count."""
    ns = range(1, max_n + 1)
    top = [count_dA(n, 2) for n in ns]
    if which == "av_sigma5_vs_tA":
        label = "#Av(sigma_5)"
        bottom = [count_Av(n, sigma(5)) for n in ns]
    elif which == "av_P5_vs_tA":
        label = "#Av(P_5)"
        bottom = [count_Av_P(n, 5) for n in ns]
    else:
        raise KeyError(which)
    return list(ns), [("#dA_n (d=2)", top), (label, bottom)]


def build(which, max_d=MAX_D, max_n=None):
    """Return (header cells, rows); each row is [label, values...].

    ``max_n`` defaults to 10 for the d-tables and 8 for the comparisons.
    """
    if which in ("dA", "dI"):
        max_n = MAX_N if max_n is None else max_n
        rows = dA_table(max_d, max_n) if which == "dA" else dI_table(max_d, max_n)
        header = ["d\\n"] + [str(n) for n in range(max_n + 1)]
        return header, [[str(d)] + row for d, row in enumerate(rows)]
    if which in ("av_sigma5_vs_tA", "av_P5_vs_tA"):
        ns, rows = comparison_table(which, 8 if max_n is None else max_n)
        header = ["n"] + [str(n) for n in ns]
        return header, [[label] + vals for label, vals in rows]
    raise KeyError(which)


def render(header, rows, fmt="csv"):
    if fmt == "json":
        return json.dumps({"header": header, "rows": rows}) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()
