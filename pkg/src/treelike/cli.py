"""Command-line front end, installed as ``tlt``.

Exit status: 0 on success, 1 when a verification check fails, 2 on bad usage
or out-of-domain arguments.
"""
from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from fractions import Fraction

from . import pasep, paths, permutations as perm, statistics as st, symmetric as sym
from .insertion import code_from_full, generate_all
from .tableau import TableauError, corners
from .verify import SUITES, InfeasibleN, run_suite


class UsageError(Exception):
    pass


@contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _need_n(args, lo=1):
    if args.n is None:
        raise UsageError("--n is required")
    if args.n < lo:
        raise UsageError(f"--n must be at least {lo}")
    return args.n


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if "," in text:
        return tuple(int(v) for v in text.split(","))
    return tuple(int(v) for v in text)  # single-digit form such as 6275314


def _table(rows, header):
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    fmt = "  ".join(f"{{:>{w}}}" for w in widths)
    return "\n".join(fmt.format(*map(str, r)) for r in [header, *rows])


def cmd_generate(args, out):
    n = _need_n(args)
    for T, code, _ in generate_all(n):
        if args.format == "table":
            out.write(f"code {','.join(map(str, code)) or '-'}\n{T}\n\n")
        else:
            d = T.to_json()
            d["code"] = list(code)
            out.write(json.dumps(d, separators=(",", ":")) + "\n")


def cmd_stats(args, out):
    rep = st.stat_report(_need_n(args), args.threads)
    if args.format == "table":
        rows = [(k, v) for k, v in rep.oc_histogram.items()]
        out.write(_table(rows, ("oc", "tableaux")) + "\n")
        out.write(f"total {rep.total_tableaux}, occupied {rep.total_oc}, "
                  f"corners {rep.total_corners}, variance {rep.variance}\n")
    else:
        out.write(rep.dumps() + "\n")


def cmd_poly(args, out):
    n = _need_n(args, lo=0)
    P = st.P_recurrence(n) if args.family == "P" else sym.Q_recurrence(n)
    if args.format == "table":
        out.write(f"{args.family}_{n} = {P}\n")
    else:
        out.write(json.dumps({"family": args.family, "n": n, "coeffs": list(P.coeffs)}) + "\n")


def cmd_phi(args, out):
    if args.code and args.perm:
        raise UsageError("give either --code or --perm")
    if args.code:
        full = _ints(args.code)
        try:
            sigma = perm.phi(code_from_full(full))
        except ValueError as e:
            raise UsageError(str(e))
        text = "".join(map(str, sigma)) if len(sigma) < 10 else ",".join(map(str, sigma))
        out.write((text if args.format == "table" else json.dumps({"perm": list(sigma)})) + "\n")
    elif args.perm:
        try:
            code = perm.phi_inverse(_ints(args.perm))
        except ValueError as e:
            raise UsageError(str(e))
        full = (1,) + code
        out.write((",".join(map(str, full)) if args.format == "table"
                   else json.dumps({"code": list(code)})) + "\n")
    else:
        raise UsageError("one of --code or --perm is required")


def cmd_pk_corners(args, out):
    n = _need_n(args, lo=2)
    counts = st.survey(n, args.threads).pk_in_corner if args.enumerate else None
    rows = []
    for k in range(2, n + 1):
        rows.append((k, perm.count_pk_in_corner(n, k), counts[k] if counts is not None else "-"))
    if args.format == "table":
        out.write(_table(rows, ("k", "formula", "enumerated")) + "\n")
    else:
        for k, f, e in rows:
            out.write(json.dumps({"k": k, "formula": f, "enumerated": None if e == "-" else e}) + "\n")


def cmd_classes(args, out):
    n = _need_n(args)
    records = []
    for key, members in sorted(paths.partition_classes(n).items()):
        canon = paths.canonical_representative(members)
        P = paths.border_subpath(canon)
        records.append({
            "points": [list(p) for p in key], "size": len(members),
            "oc": sorted((sum(c.occupied for c in corners(T)) for T in members), reverse=True),
            "canonical": canon.to_json(), "path": P, "paths_below": len(paths.paths_below(P)),
        })
    if args.format == "table":
        rows = [(r["size"], r["path"], r["paths_below"], ",".join(map(str, r["oc"]))) for r in records]
        out.write(_table(rows, ("size", "path", "below", "oc")) + "\n")
    else:
        for r in records:
            out.write(json.dumps(r, separators=(",", ":")) + "\n")


def cmd_paths(args, out):
    if not args.p:
        raise UsageError("--p is required")
    try:
        P = paths.check_path(args.p.upper())
    except ValueError as e:
        raise UsageError(str(e))
    below = paths.paths_below(P)
    rows = [(Q, paths.cc(P, Q)) for Q in below]
    if args.format == "table":
        out.write(_table(rows, ("path", "cc")) + "\n")
        out.write(f"{len(below)} paths, cc total {sum(c for _, c in rows)}\n")
    else:
        out.write(json.dumps({"path": P, "below": [{"path": q, "cc": c} for q, c in rows]}) + "\n")


def cmd_sym(args, out):
    size = args.size
    if size is None:
        raise UsageError("--size is required")
    if size < 1 or size % 2 == 0:
        raise UsageError("--size must be odd and positive")
    h = (size - 1) // 2
    rec = {"size": size, "count": sym._histograms(size)[2],
           "oc_total": sym.oc_total_symmetric(size),
           "Q_recurrence": list(sym.Q_recurrence(h).coeffs)}
    if args.check in ("all", "poly"):
        rec["Q_enum"] = list(sym.Q_enum(h).coeffs)
    if args.check in ("all", "generators"):
        rec["generators_agree"] = set(sym.generate_symmetric(size)) == set(sym.generate_symmetric_direct(size))
    if args.check in ("all", "conjecture") and h >= 1:
        rec["corners_literal"] = sym.corners_total_symmetric(size).to_json()
        rec["corners_average"] = sym.corners_total_symmetric(size, average=True).to_json()
    if args.format == "table":
        for k, v in rec.items():
            out.write(f"{k:<18}{v}\n")
    else:
        out.write(json.dumps(rec) + "\n")


def cmd_pasep(args, out):
    n = _need_n(args)
    try:
        params = pasep.PasepParams(Fraction(args.alpha), Fraction(args.beta), Fraction(args.q))
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(str(e))
    if args.mc:
        dist = pasep.mc_sample(n, params, steps=args.mc, seed=args.seed)
    else:
        labels, M = pasep.transition_matrix(n, params)
        dist = pasep.stationary(M, labels)
    if args.format == "table":
        rows = [(s, p, pasep.X_of_state(s)) for s, p in dist.to_json().items()]
        out.write(_table(rows, ("state", "prob", "X")) + "\n")
    else:
        out.write(dist.dumps() + "\n")


def cmd_verify(args, out):
    n_max = args.n if args.n is not None else 8
    report = run_suite(args.suite, n_max, args.threads, args.seed)
    if args.format == "json" or not args.quiet:
        out.write(report.jsonl(args.timings) + "\n")
    if not args.quiet:
        sys.stderr.write(report.table(args.timings) + "\n")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="size parameter")
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("--threads", type=int, default=1, help="worker processes for enumeration")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--quiet", action="store_true", help="suppress summary tables")

    parser = argparse.ArgumentParser(prog="tlt", description="Tree-like tableaux toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="list all tableaux of size n")
    p.add_argument("--emit", choices=("jsonl",), default="jsonl")
    p.set_defaults(func=cmd_generate)

    sub.add_parser("stats", parents=[common], help="corner statistics").set_defaults(func=cmd_stats)

    p = sub.add_parser("poly", parents=[common], help="polynomials from the recurrences")
    p.add_argument("--family", choices=("P", "Q"), default="P")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("phi", parents=[common], help="code to permutation and back")
    p.add_argument("--code", help="full code m1,...,mn")
    p.add_argument("--perm", help="permutation in one-line notation")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("pk-corners", parents=[common], help="k-th point in a corner")
    p.add_argument("--no-enumerate", dest="enumerate", action="store_false")
    p.set_defaults(func=cmd_pk_corners)

    sub.add_parser("classes", parents=[common], help="non-ambiguous classes").set_defaults(func=cmd_classes)

    p = sub.add_parser("paths", parents=[common], help="paths weakly below P")
    p.add_argument("--p", help="path over E and N")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("sym", parents=[common], help="symmetric tableaux")
    p.add_argument("--size", type=int)
    p.add_argument("--check", choices=("all", "poly", "generators", "conjecture", "none"), default="none")
    p.set_defaults(func=cmd_sym)

    p = sub.add_parser("pasep", parents=[common], help="stationary distribution")
    p.add_argument("--alpha", default="1")
    p.add_argument("--beta", default="1")
    p.add_argument("--q", default="1")
    p.add_argument("--mc", type=int, help="Monte-Carlo samples instead of the exact solve")
    p.set_defaults(func=cmd_pasep)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--timings", action="store_true", help="include wall-clock seconds")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with _output(args.out) as out:
            return args.func(args, out) or 0
    except (UsageError, InfeasibleN, TableauError, pasep.InvalidParams) as e:
        sys.stderr.write(f"tlt {args.command}: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
