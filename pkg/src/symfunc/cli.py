"""Command-line interface.

Subcommands:

  expand  EXPR --basis B          rewrite an expression in one basis
  apply   EXPR --op NAME [--a A --k K] [--basis B]   apply a vertex operator
  inner   EXPR1 EXPR2             Hall inner product
  count   --n N --k K [--method M]   same-shape tableau pairs of height <= k
  verify  [--max-degree D] [--oracle] [--suite NAME]   run invariant suites

Results go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 verification failure, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from typing import Optional, Sequence

from .expressions import ParseError, parse_expression
from .ring import BASES, expand, inner_product
from .tableaux import ONE_ROW_METHODS, _closed_form_terms, bounded_height_pairs
from .vertex import OPERATOR_PARAMS, OperatorSpec, apply_operator
from .verify import DEFAULT_SUITES, SUITES, Bounds, run_suites

_OPERATOR_NAMES = tuple(name for name in OPERATOR_PARAMS if name != "EVERY")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symfunc",
        description="Exact symmetric-function arithmetic, vertex operators, "
        "and bounded-height tableau counting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="expand an expression in a basis")
    p_expand.add_argument("expr", help="expression, e.g. '3/2*s[2,1] - p[3]*h[1]'")
    p_expand.add_argument("--basis", choices=BASES, default="p")
    p_expand.add_argument("--json", action="store_true")

    p_apply = sub.add_parser("apply", help="apply a vertex operator")
    p_apply.add_argument("expr")
    p_apply.add_argument("--op", choices=_OPERATOR_NAMES, required=True)
    p_apply.add_argument("--a", type=int, default=None)
    p_apply.add_argument("--k", type=int, default=None)
    p_apply.add_argument("--basis", choices=BASES, default="p")
    p_apply.add_argument("--json", action="store_true")

    p_inner = sub.add_parser("inner", help="Hall inner product of two expressions")
    p_inner.add_argument("expr1")
    p_inner.add_argument("expr2")

    p_count = sub.add_parser(
        "count", help="pairs of same-shape standard tableaux of bounded height"
    )
    p_count.add_argument("--n", type=int, required=True)
    p_count.add_argument("--k", type=int, required=True)
    p_count.add_argument("--method", choices=ONE_ROW_METHODS, default="closed")
    p_count.add_argument(
        "--verbose", action="store_true", help="also print per-composition terms as JSON"
    )

    p_verify = sub.add_parser("verify", help="run the invariant suites")
    p_verify.add_argument("--max-degree", type=int, default=4)
    p_verify.add_argument(
        "--oracle", action="store_true", help="include the polynomial-oracle sweep"
    )
    p_verify.add_argument(
        "--suite",
        action="append",
        choices=sorted(SUITES),
        help="run only this suite (repeatable)",
    )

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "expand":
            expansion = expand(parse_expression(args.expr), args.basis)
            if args.json:
                print(json.dumps(expansion.to_json_obj(), indent=2))
            else:
                print(expansion.to_text())
            return 0

        if args.command == "apply":
            spec = OperatorSpec(args.op, args.a, args.k)
            result = apply_operator(spec, parse_expression(args.expr))
            expansion = expand(result, args.basis)
            if args.json:
                print(json.dumps(expansion.to_json_obj(), indent=2))
            else:
                print(expansion.to_text())
            return 0

        if args.command == "inner":
            value = inner_product(
                parse_expression(args.expr1), parse_expression(args.expr2)
            )
            print(value)
            return 0

        if args.command == "count":
            if args.n < 0 or args.k < 1:
                parser.error("need --n >= 0 and --k >= 1")
            print(bounded_height_pairs(args.n, args.k, args.method))
            if args.verbose:
                terms = [
                    {"composition": list(s), "term": str(value)}
                    for s, value in _closed_form_terms(args.n, args.k)
                ]
                print(json.dumps(terms, indent=2))
            return 0

        if args.command == "verify":
            if args.max_degree < 0:
                parser.error("--max-degree must be non-negative")
            bounds = Bounds.for_degree(args.max_degree)
            if args.oracle:
                # the full conclusive sweep: degree 6 in six variables
                bounds = replace(bounds, oracle_degree=6, oracle_vars=6)
            names = args.suite if args.suite else list(DEFAULT_SUITES)
            ok = run_suites(names, bounds, sys.stdout)
            return 0 if ok else 1

    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    raise SystemExit(main())
