"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import as_partition, canonical_kind, KINDS
from .exprparse import (EvalError, ParseError, eval_expr, format_value,
                        value_to_json)
from .operators import InvariantViolation
from . import cache as cache_mod

USAGE_ERROR = 2
VERIFY_FAIL = 1
INTERNAL_ERROR = 3


def _parse_partition_list(text):
    try:
        data = json.loads(text)
        return as_partition(data)
    except (json.JSONDecodeError, ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError("bad partition %r: %s" % (text, exc))


def _parse_sequence(text):
    try:
        data = json.loads(text)
        return tuple(as_partition(r) for r in data)
    except (json.JSONDecodeError, ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError("bad sequence %r: %s" % (text, exc))


def _parse_kind(text):
    try:
        return canonical_kind(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _global_flags(parser, suppress):
    # subcommands re-accept the global flags; suppressed defaults keep a
    # pre-subcommand occurrence from being clobbered by the subparser
    extra = {"default": argparse.SUPPRESS} if suppress else {}
    parser.add_argument("--cache",
                        help="path of the product-coefficient cache "
                             "(or set UNIVCHAR_CACHE)", **extra)
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output", **extra)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    top = argparse.ArgumentParser(
        prog="univchar",
        description="Exact universal characters: bases, creation operators, "
                    "deformed tables.")
    _global_flags(top, suppress=False)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common],
                       help="evaluate an expression")
    p.add_argument("expr")

    p = sub.add_parser("expand", parents=[common],
                       help="expand an expression in a basis")
    p.add_argument("--basis", type=_parse_kind, required=True)
    p.add_argument("expr")

    p = sub.add_parser("kpoly", parents=[common],
                       help="one deformed-table coefficient")
    p.add_argument("--kind", type=_parse_kind, default="none")
    p.add_argument("--lambda", dest="lam", type=_parse_partition_list,
                   required=True)
    p.add_argument("-R", dest="rects", type=_parse_sequence, required=True)

    p = sub.add_parser("dpoly", parents=[common],
                       help="one deformed-product coefficient")
    p.add_argument("--kind", type=_parse_kind, default="vdom")
    p.add_argument("--lambda", dest="lam", type=_parse_partition_list,
                   required=True)
    p.add_argument("-R", dest="rects", type=_parse_sequence, required=True)

    p = sub.add_parser("table", parents=[common],
                       help="write coefficient tables")
    p.add_argument("-R", dest="rects", type=_parse_sequence, required=True)
    p.add_argument("--kinds", default="all",
                   help="comma list of kinds, or 'all'")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", required=True)
    p.add_argument("--latex", action="store_true")

    p = sub.add_parser("verify", parents=[common],
                       help="run a verification suite")
    p.add_argument("--suite", default="all",
                   choices=["lr", "bases", "operators", "determinants",
                            "kpoly", "duality", "kernels", "all"])
    p.add_argument("--max-degree", type=int, default=None)
    return top


def _table_job(args):
    kind, rects, latex = args
    from .kpoly import ktable_via_recurrence
    table = ktable_via_recurrence(kind, rects)
    return (kind, table.to_json(), table.to_latex() if latex else None,
            [(list(l), str(p)) for l, p in table.positivity_report()])


def cmd_table(rects, kinds, jobs, out_dir, latex, as_json):
    os.makedirs(out_dir, exist_ok=True)
    work = [(k, rects, latex) for k in kinds]
    if jobs > 1:
        import concurrent.futures
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as ex:
            produced = list(ex.map(_table_job, work))
    else:
        produced = [_table_job(w) for w in work]
    written = []
    for kind, obj, tex, warnings in produced:
        path = os.path.join(out_dir, "ktable_%s.json" % kind)
        with open(path, "w") as fh:
            json.dump(obj, fh, indent=1, sort_keys=True)
            fh.write("\n")
        written.append(path)
        if tex is not None:
            tex_path = os.path.join(out_dir, "ktable_%s.tex" % kind)
            with open(tex_path, "w") as fh:
                fh.write(tex)
            written.append(tex_path)
        for lam, poly in warnings:
            print("univchar: note: negative data at %s (%s) in kind %s"
                  % (lam, poly, kind), file=sys.stderr)
    if as_json:
        print(json.dumps({"written": written}, sort_keys=True))
    else:
        for path in written:
            print(path)
    return 0


def cmd_verify(suite, max_degree, as_json):
    from .verify import run_suite
    checks = run_suite(suite, max_degree)
    failed = [c for c in checks if not c[1]]
    if as_json:
        print(json.dumps({
            "suite": suite,
            "checks": [{"name": n, "pass": ok, "detail": d}
                       for n, ok, d in checks],
            "failed": len(failed),
        }, sort_keys=True))
    else:
        for name, ok, detail in checks:
            line = "%s %s" % ("PASS" if ok else "FAIL", name)
            if detail and not ok:
                line += "  [%s]" % detail
            print(line)
        print("%d checks, %d failures" % (len(checks), len(failed)))
    return VERIFY_FAIL if failed else 0


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0

    cache_path = cache_mod.default_cache_path(args.cache)
    if cache_path:
        cache_mod.load_cache(cache_path)

    try:
        code = _dispatch(args)
    except (ParseError, EvalError, ValueError) as exc:
        print("univchar: error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    except InvariantViolation as exc:
        print("univchar: internal invariant violated: %s" % exc,
              file=sys.stderr)
        return INTERNAL_ERROR

    if cache_path:
        cache_mod.save_cache(cache_path)
    return code


def _dispatch(args):
    if args.command == "eval":
        value = eval_expr(args.expr)
        print(json.dumps(value_to_json(value), sort_keys=True)
              if args.json else format_value(value))
        return 0
    if args.command == "expand":
        from .exprparse import _as_expansion
        from .series import change_basis
        value = _as_expansion(eval_expr(args.expr))
        value = change_basis(value, args.basis)
        print(json.dumps(value_to_json(value), sort_keys=True)
              if args.json else format_value(value))
        return 0
    if args.command == "kpoly":
        from .kpoly import k_via_schur_recurrence
        poly = k_via_schur_recurrence(args.kind, args.lam, args.rects)
        print(json.dumps({"poly": poly.to_json()}, sort_keys=True)
              if args.json else str(poly))
        return 0
    if args.command == "dpoly":
        from .operators import d_polynomial
        poly = d_polynomial(args.kind, args.lam, args.rects)
        print(json.dumps({"poly": poly.to_json()}, sort_keys=True)
              if args.json else str(poly))
        return 0
    if args.command == "table":
        kinds = (list(KINDS) if args.kinds == "all"
                 else [canonical_kind(k) for k in args.kinds.split(",")])
        return cmd_table(args.rects, kinds, args.jobs, args.out,
                         args.latex, args.json)
    if args.command == "verify":
        return cmd_verify(args.suite, args.max_degree, args.json)
    raise ValueError("unknown command %r" % args.command)


if __name__ == "__main__":
    sys.exit(main())
