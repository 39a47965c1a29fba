"""Command-line front end.

Subcommands: mult, convert, lr, kostka, skew, eval, verify.  Output on
stdout is deterministic and machine-parsable (text or --json); progress and
diagnostics go to stderr.  Exit codes: 0 success, 1 verification failure,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Optional, Sequence

from .partitions import format_partition, parse_composition, parse_partition
from .polyval import eval_s_tableau
from .ring import BASES, SymFunc, convert, multiply, skew_schur
from .tableaux import enumerate_ssyt, kostka, lr_tableaux
from .verification import ACCEPTANCE_BOUNDS, SUITES, run_suite

DEFAULT_MAX_DEGREE = 20


class UsageError(ValueError):
    """Bad input on the command line (exit code 2)."""


def _max_degree() -> int:
    raw = os.environ.get("SCHURKIT_MAX_DEGREE", str(DEFAULT_MAX_DEGREE))
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"SCHURKIT_MAX_DEGREE is not an integer: {raw!r}")
    if cap < 0:
        raise UsageError(f"SCHURKIT_MAX_DEGREE must be nonnegative: {cap}")
    return cap


def _check_cap(size: int, what: str) -> None:
    cap = _max_degree()
    if size > cap:
        raise UsageError(
            f"{what} has size {size}, above the cap {cap} "
            "(raise SCHURKIT_MAX_DEGREE to allow it)"
        )


_ELEMENT_RE = re.compile(r"\s*([shem])\s*(\[[\d,\s]*\])\s*")
_TERM_RE = re.compile(
    r"\s*(?P<op>[+-])?\s*(?:(?P<coeff>\d+)\s*\*\s*)?(?P<basis>[shem])\s*(?P<body>\[[\d,\s]*\])"
)


def parse_element(text: str) -> SymFunc:
    """Parse a single basis element like `s[2,1]`."""
    m = _ELEMENT_RE.fullmatch(text)
    if not m:
        raise UsageError(f"expected a basis element like s[2,1], got {text!r}")
    lam = parse_partition(m.group(2))
    return SymFunc.element(m.group(1), lam)


def parse_symfunc(text: str) -> SymFunc:
    """Parse the linear-combination text form, e.g. `2*s[3,2,1] + s[4,2]`."""
    if text.strip() == "0":
        return SymFunc.zero("s")
    pos = 0
    basis: Optional[str] = None
    terms: list[tuple[tuple[int, ...], int]] = []
    first = True
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TERM_RE.match(text, pos)
        if not m:
            raise UsageError(f"cannot parse expression at ...{text[pos:]!r}")
        op = m.group("op")
        if not first and op is None:
            raise UsageError(f"missing + or - before ...{text[pos:]!r}")
        sign = -1 if op == "-" else 1
        coeff = int(m.group("coeff")) if m.group("coeff") else 1
        if basis is None:
            basis = m.group("basis")
        elif basis != m.group("basis"):
            raise UsageError(
                f"mixed bases {basis!r} and {m.group('basis')!r} in one expression"
            )
        terms.append((parse_partition(m.group("body")), sign * coeff))
        pos = m.end()
        first = False
    if basis is None:
        raise UsageError(f"empty expression: {text!r}")
    return SymFunc(basis, terms)


def _emit_symfunc(f: SymFunc, basis: str, as_json: bool) -> None:
    out = convert(f, basis)
    print(out.to_json() if as_json else str(out))


def _cmd_mult(args) -> int:
    m = re.fullmatch(r"(.+?)\*\s*([shem]\s*\[.*)", args.expr, flags=re.S)
    if not m:
        raise UsageError(f"expected B[parts]*B[parts], got {args.expr!r}")
    left = parse_element(m.group(1))
    right = parse_element(m.group(2))
    degrees = [sum(lam) for lam in (*left.terms, *right.terms)]
    _check_cap(sum(degrees), "product degree")
    _emit_symfunc(multiply(left, right), args.basis, args.json)
    return 0


def _cmd_convert(args) -> int:
    f = parse_symfunc(args.expr)
    for lam in f.terms:
        _check_cap(sum(lam), f"partition {format_partition(lam)}")
    _emit_symfunc(f, args.basis, args.json)
    return 0


def _cmd_lr(args) -> int:
    lam = parse_partition(args.outer)
    mu = parse_partition(args.inner)
    nu = parse_partition(args.content)
    _check_cap(sum(lam), f"partition {format_partition(lam)}")
    witnesses = lr_tableaux(lam, mu, nu)
    _print_count(len(witnesses), witnesses if args.witnesses else None, args.json)
    return 0


def _cmd_kostka(args) -> int:
    lam = parse_partition(args.outer)
    mu = parse_partition(args.inner)
    alpha = parse_composition(args.content)
    _check_cap(sum(lam), f"partition {format_partition(lam)}")
    count = kostka(lam, mu, alpha)
    witnesses = None
    if args.witnesses:
        witnesses = (
            enumerate_ssyt(lam, mu, max_entry=max(len(alpha), 1), content=alpha)
            if count
            else []
        )
    _print_count(count, witnesses, args.json)
    return 0


def _print_count(count: int, witnesses, as_json: bool) -> None:
    if as_json:
        payload: dict = {"count": count}
        if witnesses is not None:
            payload["witnesses"] = [t.to_json_dict() for t in witnesses]
        print(json.dumps(payload))
        return
    print(count)
    if witnesses is not None:
        print(json.dumps([t.to_json_dict() for t in witnesses]))


def _cmd_skew(args) -> int:
    lam = parse_partition(args.outer)
    mu = parse_partition(args.inner)
    _check_cap(sum(lam), f"partition {format_partition(lam)}")
    _emit_symfunc(skew_schur(lam, mu), args.basis, args.json)
    return 0


def _cmd_eval(args) -> int:
    lam = parse_partition(args.outer)
    mu = parse_partition(args.inner) if args.inner is not None else ()
    _check_cap(sum(lam), f"partition {format_partition(lam)}")
    if args.vars < 0:
        raise UsageError("--vars must be nonnegative")
    _check_cap(args.vars, "variable count")
    poly = eval_s_tableau(lam, mu, args.vars)
    print(poly.to_json() if args.json else str(poly))
    return 0


def _cmd_verify(args) -> int:
    def progress(message: str) -> None:
        print(message, file=sys.stderr)

    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {sorted(SUITES)} or all")
    failed = False
    for name in names:
        bound = args.bound if args.bound is not None else ACCEPTANCE_BOUNDS[name]
        if bound < 0:
            raise UsageError("bound must be nonnegative")
        _check_cap(bound, "verification bound")
        result = run_suite(name, bound, progress if not args.quiet else None)
        prefix = f"{name}: " if args.suite == "all" else ""
        if result.ok:
            print(f"{prefix}PASS {result.checked} instances")
        else:
            failed = True
            print(f"{prefix}FAIL {len(result.failures)}/{result.checked} instances")
            print(result.failures[0], file=sys.stderr)
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurkit",
        description="Exact Schur polynomial calculus: products, coefficients, "
        "basis changes, polynomial evaluation, and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, basis=True):
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        if basis:
            p.add_argument(
                "--basis",
                choices=BASES,
                default="s",
                help="output basis (default s)",
            )

    p = sub.add_parser("mult", help="multiply two basis elements")
    p.add_argument("expr", help="expression like 's[2,1]*s[2,1]' or 'h[1]*s[1]'")
    add_common(p)
    p.set_defaults(func=_cmd_mult)

    p = sub.add_parser("convert", help="change the basis of a linear combination")
    p.add_argument("expr", help="expression like '2*s[3,2,1] + s[4,2]'")
    add_common(p)
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient")
    p.add_argument("outer", help="partition literal like [3,2,1]")
    p.add_argument("inner", help="partition literal")
    p.add_argument("content", help="partition literal")
    p.add_argument("--witnesses", action="store_true", help="also print the tableaux as JSON")
    add_common(p, basis=False)
    p.set_defaults(func=_cmd_lr)

    p = sub.add_parser("kostka", help="Kostka number of a skew shape and content")
    p.add_argument("outer", help="partition literal")
    p.add_argument("inner", help="partition literal")
    p.add_argument("content", help="composition literal like [1,0,2]")
    p.add_argument("--witnesses", action="store_true", help="also print the tableaux as JSON")
    add_common(p, basis=False)
    p.set_defaults(func=_cmd_kostka)

    p = sub.add_parser("skew", help="Schur expansion of a skew shape")
    p.add_argument("outer", help="partition literal")
    p.add_argument("inner", help="partition literal")
    add_common(p)
    p.set_defaults(func=_cmd_skew)

    p = sub.add_parser("eval", help="tableau polynomial in N variables")
    p.add_argument("outer", help="partition literal")
    p.add_argument("inner", nargs="?", default=None, help="optional inner shape")
    p.add_argument("--vars", type=int, required=True, metavar="N", help="number of variables")
    add_common(p, basis=False)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("verify", help="run a property suite up to a size bound")
    p.add_argument("suite", help=f"one of {sorted(SUITES)} or 'all'")
    p.add_argument(
        "bound",
        nargs="?",
        type=int,
        default=None,
        help="size bound (default: the acceptance bound for the suite)",
    )
    p.add_argument("--quiet", action="store_true", help="suppress progress on stderr")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
