"""Command-line front end.

Exit codes are the machine contract: 0 success, 1 verification or
reproduction mismatch, 2 usage error, 3 internal error.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .braids import left_normal_form, format_normal_form, parse_word, words_equal
from .catalog import audit_catalog, load_catalog
from .geography import (
    GateError,
    gates,
    predict,
    reproduce_table,
    rows_to_csv,
    rows_to_text,
)
from .moves import load_chain, verify_chain
from .seifert import bennequin_seifert
from .signatures import lt_sums, lt_value
from .cyclotomic import root_of_unity

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def _cmd_nf(args) -> int:
    word = parse_word(args.word, args.strands)
    print(format_normal_form(left_normal_form(word)))
    return EXIT_OK


def _cmd_eq(args) -> int:
    u = parse_word(args.word1, args.strands)
    v = parse_word(args.word2, args.strands)
    if words_equal(u, v):
        print("equal")
        return EXIT_OK
    print("distinct")
    return EXIT_MISMATCH


def _verify_one(path: str):
    report = verify_chain(load_chain(path))
    return path, report


def _cmd_verify(args) -> int:
    paths = args.certs
    if args.parallel and len(paths) > 1:
        with ThreadPoolExecutor() as pool:
            results = list(pool.map(_verify_one, paths))
    else:
        results = [_verify_one(p) for p in paths]
    failed = 0
    for path, report in results:
        status = "pass" if report.ok else "FAIL"
        print(f"{status}  {path}  ({report.steps_checked} steps, "
              f"{report.insertions} insertions)")
        if not report.ok:
            failed += 1
            for message in report.messages:
                print(f"      {message}", file=sys.stderr)
    return EXIT_OK if not failed else EXIT_MISMATCH


def _cmd_lt(args) -> int:
    word = parse_word(args.word, args.strands)
    data = bennequin_seifert(word)
    for k in range(1, args.order):
        value = lt_value(data, root_of_unity(args.order, k))
        print(f"zeta^{k}/{args.order}: sigma = {value.sigma}, "
              f"eta = {value.eta}")
    s, h = lt_sums(data, args.order)
    print(f"sums over k = 1..{args.order - 1}: sigma = {s}, eta = {h}")
    return EXIT_OK


def _cmd_predict(args) -> int:
    word = parse_word(args.word, args.strands)
    n, m = word.strands, word.exponent_sum()
    s, h = lt_sums(bennequin_seifert(word), args.order)
    g = gates(args.order, n, m, s, h)
    print(f"r = {g.r}, n = {n}, m = {m}, X = {g.x}, "
          f"sigma sum = {s}, eta sum = {h}")
    print(f"gate T11: {g.t11_a} <= 3 and {g.t11_b} <= 25 -> "
          f"{'pass' if g.t11_ok else 'fail'}")
    print(f"gate T12: eta = 0 and {g.t12_a} <= 2 and {g.t12_b} <= 15 -> "
          f"{'pass' if g.t12_ok else 'fail'}")
    mode = {"1": "T11", "2": "T12"}[args.theorem]
    try:
        pred = predict(args.order, n, m, s, h, mode)
    except GateError as exc:
        print(f"no prediction: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    b1 = "0" if pred.b1_high == 0 else f"0..{pred.b1_high}"
    print(f"prediction ({mode}): spin, chi = {pred.chi}, "
          f"sigma = {pred.sigma}, b1 = {b1}"
          + (f"  [{pred.caveat}]" if pred.caveat else ""))
    return EXIT_OK


def _cmd_reproduce(args) -> int:
    entries = load_catalog(args.catalog)
    rows = reproduce_table(args.theorem, entries,
                           jobs=8 if args.parallel else 1)
    if args.output == "csv":
        sys.stdout.write(rows_to_csv(rows))
    else:
        print(rows_to_text(rows))
    return EXIT_OK if all(r.match for r in rows) else EXIT_MISMATCH


def _cmd_catalog(args) -> int:
    if args.action != "audit":
        raise UsageError(f"unknown catalog action {args.action!r}")
    entries = load_catalog(args.catalog)
    report = audit_catalog(entries)
    print(f"{report.entries} entries, {report.chains} chains: "
          f"{'ok' if report.ok else 'PROBLEMS'}")
    for problem in report.problems:
        print(f"  {problem}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_MISMATCH


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidgeo",
        description="braid certificates, signatures, filling geography",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", help="left normal form of a braid word")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("word")
    p.set_defaults(func=_cmd_nf)

    p = sub.add_parser("eq", help="decide equality of two braid words")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=_cmd_eq)

    p = sub.add_parser("verify", help="check cobordism certificate files")
    p.add_argument("certs", nargs="+")
    p.add_argument("--parallel", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("lt", help="signature and nullity at roots of unity")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("word")
    p.set_defaults(func=_cmd_lt)

    p = sub.add_parser("predict", help="exact-filling constraints")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--theorem", choices=("1", "2"), default="2",
                   help="1: links (b1 bounded); 2: vanishing nullity sum")
    p.add_argument("word")
    p.set_defaults(func=_cmd_predict)

    p = sub.add_parser("reproduce", help="recompute a whole theorem table")
    p.add_argument("--theorem", required=True,
                   choices=("1.3", "1.4", "1.5", "1.6", "1.7", "1.8"))
    p.add_argument("--output", choices=("text", "csv"), default="text")
    p.add_argument("--catalog", type=Path, default=None)
    p.add_argument("--parallel", action="store_true")
    p.set_defaults(func=_cmd_reproduce)

    p = sub.add_parser("catalog", help="catalog maintenance")
    p.add_argument("action", choices=("audit",))
    p.add_argument("--catalog", type=Path, default=None)
    p.set_defaults(func=_cmd_catalog)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
