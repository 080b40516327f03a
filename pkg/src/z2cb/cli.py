"""Command-line frontend: one subcommand per library operation.

All machine-readable output goes to stdout (JSON lines for verify,
fixed fields otherwise); diagnostics go to stderr. Exit codes: 0 when
no check FAILed and no error occurred, 1 when some report is a FAIL,
2 for bad input or flags.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import bounds, codelib, gf2core, isotropy
from .verifier import (
    VerificationReport,
    remark_matrix,
    scan_lemma14_part2,
    verify_lemma12_part1,
    verify_lemma12_part2,
    verify_lemma12_part3,
    verify_lemma14_part1,
    verify_lemma14_part2,
    verify_remark_matrix,
    verify_tables,
)

_SCAN_RE = re.compile(r"^(\d+)\.\.(\d+)$")


def _read_matrix(path: str) -> gf2core.GenMatrix:
    if path == "-":
        return gf2core.parse_matrix(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return gf2core.parse_matrix(fh.read())


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _print_reports(reports: list[VerificationReport]) -> int:
    failed = False
    for r in reports:
        print(r.to_json())
        failed = failed or r.verdict == "FAIL"
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="z2cb", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("mindist", help="print 'n k d' for a matrix file")
    sp.add_argument("matrix", help="matrix file path or - for stdin")

    sp = sub.add_parser("wdist", help="print the weight distribution as JSON")
    sp.add_argument("matrix")

    sp = sub.add_parser("shorten", help="shorten at a coordinate, print the matrix")
    sp.add_argument("matrix")
    sp.add_argument("--coord", type=int, required=True)
    sp.add_argument("-o", "--output")

    sp = sub.add_parser("puncture", help="puncture at a coordinate, print the matrix")
    sp.add_argument("matrix")
    sp.add_argument("--coord", type=int, required=True)
    sp.add_argument("-o", "--output")

    sp = sub.add_parser("bound", help="print the combined upper-bound report")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)

    sp = sub.add_parser("construct", help="print a named or lexicographic generator matrix")
    sp.add_argument("--name", required=True, help="e.g. golay23, hamming(3), lexicode(12,4)")
    sp.add_argument("-o", "--output")

    sp = sub.add_parser("search", help="best constructive lower bound for [n, k]")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)

    sp = sub.add_parser("analyze-rep", help="analyze an effective representation matrix")
    sp.add_argument("matrix")

    sp = sub.add_parser("verify", help="run verification suites, print JSON report lines")
    vsub = sp.add_subparsers(dest="suite", required=True)

    vp = vsub.add_parser("lemma12")
    vp.add_argument("--part", type=int, choices=(1, 2, 3), required=True)
    group = vp.add_mutually_exclusive_group()
    group.add_argument("--n", type=int)
    group.add_argument("--scan", help="inclusive range LO..HI")

    vp = vsub.add_parser("lemma14")
    vp.add_argument("--part", type=int, choices=(1, 2), required=True)
    vp.add_argument("--matrix", help="optional matrix file; defaults to the embedded one")
    group = vp.add_mutually_exclusive_group()
    group.add_argument("--exhaustive", action="store_true")
    group.add_argument("--sample", type=int, metavar="COUNT")
    vp.add_argument("--seed", type=int, default=1)
    vp.add_argument("--workers", type=int, default=os.cpu_count() or 1)

    vsub.add_parser("remark-matrix")

    vp = vsub.add_parser("tables")
    vp.add_argument("--table", default="ALL", choices=("T1", "T2", "T3", "T4", "ALL"))
    return p


def _cmd_verify_lemma12(args: argparse.Namespace) -> int:
    if args.part == 3:
        if args.n is not None or args.scan:
            print("part 3 takes neither --n nor --scan", file=sys.stderr)
            return 2
        return _print_reports([verify_lemma12_part3()])
    check = verify_lemma12_part1 if args.part == 1 else verify_lemma12_part2
    if args.scan:
        m = _SCAN_RE.match(args.scan)
        if not m:
            print(f"bad scan range: {args.scan!r}", file=sys.stderr)
            return 2
        lo, hi = int(m.group(1)), int(m.group(2))
        if lo > hi:
            print("scan range is empty", file=sys.stderr)
            return 2
        return _print_reports([check(n) for n in range(lo, hi + 1)])
    if args.n is None:
        print("need --n or --scan", file=sys.stderr)
        return 2
    return _print_reports([check(args.n)])


def _cmd_verify_lemma14(args: argparse.Namespace) -> int:
    code = _read_matrix(args.matrix) if args.matrix else remark_matrix()
    if args.part == 1:
        iota1 = gf2core.Gf2Word(code.n, code.rows[0])
        return _print_reports([verify_lemma14_part1(code, iota1)])
    if args.exhaustive:
        return _print_reports([scan_lemma14_part2(mode="exhaustive", workers=args.workers)])
    if args.sample is not None:
        return _print_reports(
            [scan_lemma14_part2(mode="sample", count=args.sample, seed=args.seed, workers=args.workers)]
        )
    return _print_reports([verify_lemma14_part2(code)])


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.cmd == "mindist":
            m = _read_matrix(args.matrix)
            print(f"{m.n} {m.k} {gf2core.min_distance(m)}")
            return 0
        if args.cmd == "wdist":
            m = _read_matrix(args.matrix)
            print(json.dumps(gf2core.weight_distribution(m).as_dict()))
            return 0
        if args.cmd == "shorten":
            _emit(gf2core.format_matrix(gf2core.shorten(_read_matrix(args.matrix), args.coord)), args.output)
            return 0
        if args.cmd == "puncture":
            _emit(gf2core.format_matrix(gf2core.puncture(_read_matrix(args.matrix), args.coord)), args.output)
            return 0
        if args.cmd == "bound":
            print(json.dumps(bounds.combined_upper_bound(args.n, args.k).as_dict()))
            return 0
        if args.cmd == "construct":
            _emit(gf2core.format_matrix(codelib.build_base(args.name)), args.output)
            return 0
        if args.cmd == "search":
            d, recipe = codelib.best_known_lower_bound(args.n, args.k)
            print(
                json.dumps(
                    {
                        "n": args.n,
                        "k": args.k,
                        "d": d,
                        "recipe": recipe.serialize() if recipe else None,
                    }
                )
            )
            return 0
        if args.cmd == "analyze-rep":
            rep = isotropy.Representation.from_matrix(_read_matrix(args.matrix))
            print(isotropy.analyze(rep).to_json())
            return 0
        if args.suite == "lemma12":
            return _cmd_verify_lemma12(args)
        if args.suite == "lemma14":
            return _cmd_verify_lemma14(args)
        if args.suite == "remark-matrix":
            return _print_reports(verify_remark_matrix())
        return _print_reports(verify_tables(args.table))
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
