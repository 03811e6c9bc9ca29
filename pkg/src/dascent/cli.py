"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 input outside a map's domain.
"""

import argparse
import json
import sys
import warnings

from . import duptrees, matchings, matrices, permpat, posets, rgf, seqcore, textio
from . import tables as tables_mod
from . import verify as verify_mod
from .errors import ParseError, PreconditionError

COUNT_KINDS = ("dA", "dI", "I", "RGF", "Av_sigma", "Av_P", "dMtx", "Mtx",
               "MtxPrime", "RDT", "dMch")

ENUM_KINDS = COUNT_KINDS


class UsageError(Exception):
    pass


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required")


def _iter_kind(kind, n, d, size):
    """Yield (object, text) pairs for ``enumerate``; also backs ``count``."""
    if kind == "dA":
        for a in seqcore.iter_dA(n, d):
            yield a, textio.format_seq(a)
    elif kind == "dI":
        for a in seqcore.iter_dI(n, d):
            yield a, textio.format_seq(a)
    elif kind == "I":
        for a in seqcore.iter_I(n):
            yield a, textio.format_seq(a)
    elif kind == "RGF":
        for a in rgf.iter_RGF(n):
            yield a, textio.format_seq(a)
    elif kind == "Av_sigma":
        for pi in permpat.iter_Av_brute(n, permpat.sigma(size)):
            yield pi, textio.format_perm(pi)
    elif kind == "Av_P":
        for P in posets.iter_Av_P(n, size):
            yield P, textio.format_poset(P)
    elif kind == "dMtx":
        if d < 1:
            raise UsageError("dMtx needs --d >= 1")
        for M in matrices.iter_dMtx(n, d):
            yield M, textio.format_matrix(M)
    elif kind == "Mtx":
        for M in matrices.iter_upper_nonneg(n):
            if matrices.is_asc_matrix_Mb(M):
                yield M, textio.format_matrix(M)
    elif kind == "MtxPrime":
        for M in matrices.iter_upper_nonneg(n):
            if matrices.is_dp_matrix(M):
                yield M, textio.format_matrix(M)
    elif kind == "RDT":
        for t in duptrees.enumerate_RDT(n):
            yield t, textio.format_tree(t)
    elif kind == "dMch":
        for m in matchings.iter_matchings(n):
            if matchings.is_d_matching(m, d):
                yield m, textio.format_matching(m)
    else:
        raise UsageError(f"unknown kind {kind!r}")


def _kind_params(args):
    _need(args, "n")
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    d = args.d if args.d is not None else 0
    if d < 0:
        raise UsageError("--d must be nonnegative")
    if args.kind in ("Av_sigma", "Av_P"):
        _need(args, "size")
        if args.size < 3:
            raise UsageError("--size must be at least 3")
    if args.kind in ("dA", "dI", "dMtx", "dMch"):
        _need(args, "d")
    if args.kind == "RDT" and args.n < 2:
        raise UsageError("RDT needs --n >= 2")
    return args.n, d, args.size


def cmd_count(args, out):
    n, d, size = _kind_params(args)
    if args.kind == "dA":
        value = seqcore.count_dA(n, d)
    elif args.kind == "dI":
        value = seqcore.count_dI(n, d)
    elif args.kind == "RDT":
        value = len(duptrees.enumerate_RDT(n)) if n <= 9 else duptrees.count_RDT(n)
    elif args.kind == "Av_sigma":
        value = permpat.count_Av(n, permpat.sigma(size))
    elif args.kind == "Av_P":
        value = posets.count_Av_P(n, size)
    else:
        value = sum(1 for _ in _iter_kind(args.kind, n, d, size))
    out.write(f"{value}\n")
    return 0


def cmd_enumerate(args, out):
    n, d, size = _kind_params(args)
    for obj, text in _iter_kind(args.kind, n, d, size):
        if args.format == "json":
            out.write(json.dumps(_json_of(obj, args.kind)) + "\n")
        else:
            out.write(text + "\n")
    return 0


def _json_of(obj, kind):
    if kind in ("dMtx", "Mtx", "MtxPrime"):
        return textio.matrix_json(obj)
    if kind == "Av_P":
        return textio.poset_json(obj)
    if kind == "RDT":
        return textio.tree_json(obj)
    if kind == "dMch":
        return [list(e) for e in obj]
    return list(obj)


def _d(args, default=None, minimum=0):
    d = args.d if args.d is not None else default
    if d is None:
        raise UsageError("--d is required")
    if d < minimum:
        raise UsageError(f"--d must be at least {minimum}")
    return d


# name -> (parser, function(obj, args), output kind)
def _maps():
    def mx(a, args):
        d = _d(args)
        return matrices.seq_to_matrix(a, d) if d >= 1 else matrices.seq_to_matrix_d0(a)

    def mx_inverse(M, args):
        d = _d(args)
        return matrices.matrix_to_seq(M, d) if d >= 1 else matrices.matrix_to_seq_d0(M)

    def mh(a, args):
        if args.d is not None:
            return matchings.mh_on_dA(a, args.d)
        return matchings.inv_to_matching(a)

    def mh_inverse(m, args):
        if matchings.has_left_nesting(m):
            raise PreconditionError("matching has a left nesting",
                                    condition="left nesting present")
        if args.d is not None and not matchings.is_d_matching(m, args.d):
            raise PreconditionError("matching is not a difference-d matching",
                                    condition=f"not in dMch_n for d={args.d}")
        return matchings.matching_to_inv(m)

    return {
        "mx": (textio.parse_seq, mx, "matrix"),
        "mx_inverse": (textio.parse_matrix, mx_inverse, "seq"),
        "mh": (textio.parse_seq, mh, "matching"),
        "mh_inverse": (textio.parse_matching, mh_inverse, "seq"),
        "pe": (textio.parse_seq, lambda a, args: permpat.pe(a, _d(args)), "perm"),
        "po": (textio.parse_seq, lambda a, args: posets.po(a, _d(args, minimum=1)), "poset"),
        "po_inverse": (textio.parse_poset,
                       lambda P, args: posets.po_inverse(P, _d(args, minimum=1)), "seq"),
        "rp": (textio.parse_seq, lambda r, args: rgf.rp(r), "poset"),
        "rp_inverse": (textio.parse_poset, lambda P, args: rgf.rp_inverse(P), "seq"),
        "claesson": (textio.parse_seq, lambda r, args: rgf.claesson_perm(r), "perm"),
        "rgf_matrix": (textio.parse_seq, lambda r, args: rgf.rgf_to_binmatrix(r), "matrix"),
        "alpha_of_tree": (textio.parse_tree,
                          lambda t, args: duptrees.reduction_sequence(t), "seq"),
        "tree_of_alpha": (textio.parse_seq,
                          lambda a, args: duptrees.tree_from_sequence(a), "tree"),
    }


MAP_NAMES = tuple(_maps())


def _render(obj, kind, fmt):
    if fmt == "json":
        if kind == "matrix":
            data = textio.matrix_json(obj)
        elif kind == "poset":
            data = textio.poset_json(obj)
        elif kind == "tree":
            data = textio.tree_json(obj)
        elif kind == "matching":
            data = [list(e) for e in obj]
        else:
            data = list(obj)
        return json.dumps(data)
    return {
        "matrix": textio.format_matrix,
        "seq": textio.format_seq,
        "matching": textio.format_matching,
        "perm": textio.format_perm,
        "poset": textio.format_poset,
        "tree": textio.format_tree,
    }[kind](obj)


def cmd_map(args, out):
    _need(args, "input")
    parse, fn, kind = _maps()[args.name]
    obj = parse(args.input)
    out.write(_render(fn(obj, args), kind, args.format) + "\n")
    return 0


def cmd_verify(args, out):
    report = verify_mod.run(args.suite, args.max_n, args.order, args.seed)
    passed = verify_mod.all_passed(report)
    out.write(json.dumps({"suite": args.suite, "passed": passed, "results": report},
                         indent=1) + "\n")
    return 0 if passed else 1


def cmd_table(args, out):
    max_d = tables_mod.MAX_D if args.d is None else args.d
    if args.which in ("dA", "dI"):
        too_big = (args.max_n or 0) > tables_mod.MAX_N or max_d > tables_mod.MAX_D
    else:
        too_big = (args.max_n or 0) > 8
    if too_big:
        warnings.warn("table bounds exceed the published range; this may be slow",
                      RuntimeWarning, stacklevel=1)
    header, rows = tables_mod.build(args.which, max_d, args.max_n)
    fmt = "csv" if args.format == "text" else args.format
    out.write(tables_mod.render(header, rows, fmt))
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--d", type=int)
    common.add_argument("--size", type=int, help="pattern / poset size d in sigma_d, P_d")
    common.add_argument("--format", choices=("csv", "json", "text"), default="text")
    common.add_argument("--max-n", type=int, dest="max_n")
    common.add_argument("--order", type=int)
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="dascent",
                                     description="difference ascent sequences toolkit")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("count", parents=[common])
    p.add_argument("kind", choices=COUNT_KINDS)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", parents=[common])
    p.add_argument("kind", choices=ENUM_KINDS)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", parents=[common])
    p.add_argument("name", choices=MAP_NAMES)
    p.add_argument("--in", dest="input")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("suite", choices=verify_mod.SUITES + ("all",))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[common])
    p.add_argument("which", choices=tables_mod.TABLES)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, ParseError) as exc:
        print(f"dascent: error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"dascent: precondition violated: {exc.condition} ({exc})",
              file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
