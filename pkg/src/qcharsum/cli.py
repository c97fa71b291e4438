"""Command-line interface.

Subcommands:

* ``verify``            -- run named checks, print a summary, optionally
  write JSON/TSV reports; exits nonzero when any check fails.
* ``census``            -- polynomial class-count table (TSV).
* ``hl-value``          -- one exact Hall-Littlewood principal value.
* ``degree-sum``        -- real character degree sum for a group family.
* ``involutions``       -- involution count for a group family.
* ``eps-split``         -- the two indicator-refined degree sums.
* ``brute-involutions`` -- enumerate a small group directly.
* ``bench``             -- compare the pure and compiled kernels.

Exact values print as integers (numeric q) or rational functions in q
(symbolic mode).
"""

from __future__ import annotations

import argparse
import os
import re
import sys

from . import chars, groups, verify
from .exact import RatFunc
from .hl import hl_principal
from .polycount import brute_poly_census, count_selfdual_and_pairs

_WEYL = {"weylA": "A", "weylB": "B", "weylD": "D"}


# ---------------------------------------------------------------------------
# Expression parsing for --z / --t values (integers, q, + - * / ^, parens).
# ---------------------------------------------------------------------------


class _ExprParser:
    _TOKEN = re.compile(r"\*\*|[-+*/^()]|\d+|[A-Za-z]+")

    def __init__(self, text: str):
        self.tokens = self._TOKEN.findall(text)
        if "".join(self.tokens) != re.sub(r"\s+", "", text):
            raise ValueError(f"cannot tokenize expression {text!r}")
        self.pos = 0

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self):
        tok = self._peek()
        if tok is None:
            raise ValueError("unexpected end of expression")
        self.pos += 1
        return tok

    def _expect(self, tok: str):
        got = self._take()
        if got != tok:
            raise ValueError(f"expected {tok!r}, got {got!r}")

    def parse(self) -> RatFunc:
        value = self._expr()
        if self.pos != len(self.tokens):
            raise ValueError(f"trailing input at {self.tokens[self.pos]!r}")
        return value

    def _expr(self) -> RatFunc:
        value = self._term()
        while self._peek() in ("+", "-"):
            op = self._take()
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self) -> RatFunc:
        value = self._unary()
        while self._peek() in ("*", "/"):
            op = self._take()
            rhs = self._unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def _unary(self) -> RatFunc:
        if self._peek() == "-":
            self._take()
            return -self._unary()
        if self._peek() == "+":
            self._take()
            return self._unary()
        return self._power()

    def _power(self) -> RatFunc:
        base = self._atom()
        if self._peek() in ("^", "**"):
            self._take()
            return base ** self._int_exponent()
        return base

    def _int_exponent(self) -> int:
        if self._peek() == "(":
            self._take()
            value = self._int_exponent()
            self._expect(")")
            return value
        sign = 1
        if self._peek() == "-":
            self._take()
            sign = -1
        tok = self._take()
        if not tok.isdigit():
            raise ValueError(f"exponent must be an integer, got {tok!r}")
        return sign * int(tok)

    def _atom(self) -> RatFunc:
        tok = self._take()
        if tok == "(":
            value = self._expr()
            self._expect(")")
            return value
        if tok == "q":
            return RatFunc.x()
        if tok.isdigit():
            return RatFunc.const(int(tok))
        raise ValueError(f"unexpected token {tok!r} (allowed: integers, q)")


def parse_ratfunc(text: str) -> RatFunc:
    """Parse an exact rational-function expression in q, e.g. ``-1/q``."""
    return _ExprParser(text).parse()


def _parse_int_list(text: str):
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}")


def _parse_parts(text: str):
    parts = _parse_int_list(text)
    if any(p <= 0 for p in parts) or parts != sorted(parts, reverse=True):
        raise ValueError(f"partition parts must be positive and weakly "
                         f"decreasing, got {text!r}")
    return parts


# ---------------------------------------------------------------------------
# Subcommand handlers (each returns a process exit code).
# ---------------------------------------------------------------------------


def _cmd_verify(args) -> int:
    if args.quick:
        os.environ["QCHARSUM_BUDGET"] = "quick"
    if args.list:
        for spec in verify.REGISTRY.values():
            tags = ",".join(spec.tags)
            print(f"{spec.id:26s} [{tags}] {spec.description}")
        return 0
    overrides = {}
    if args.order is not None:
        overrides["order"] = args.order
    if args.nmax is not None:
        overrides["nmax"] = args.nmax
    if args.q is not None:
        overrides["qs"] = _parse_int_list(args.q)
        overrides["symbolic"] = bool(args.symbolic)
    elif args.symbolic:
        overrides["qs"] = []
        overrides["symbolic"] = True
    ids = None
    if args.id:
        ids = [part for chunk in args.id for part in chunk.split(",") if part]
    reports = verify.run_all(ids=ids, tag=args.tag, overrides=overrides)
    for line in verify.summary_lines(reports):
        print(line)
    passed = sum(r.status == "pass" for r in reports)
    failed = sum(r.status == "fail" for r in reports)
    skipped = sum(r.status == "skipped" for r in reports)
    total_ms = sum(r.millis for r in reports)
    print(f"{passed} passed, {failed} failed, {skipped} skipped "
          f"({total_ms} ms)")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as handle:
            handle.write(verify.reports_to_json(reports) + "\n")
    if args.tsv:
        with open(args.tsv, "w", encoding="utf-8") as handle:
            handle.write(verify.reports_to_tsv(reports))
    return 1 if failed else 0


def _cmd_census(args) -> int:
    flavors = ("gl", "u") if args.flavor == "both" else (args.flavor,)
    sources = {"formula": ("formula",), "brute": ("brute",),
               "both": ("formula", "brute")}[args.source]
    qs = _parse_int_list(args.q)
    print("flavor\td\tq\tN\tNstar\tMstar\tsource")
    for flavor in flavors:
        for q in qs:
            for d in range(1, args.dmax + 1):
                for source in sources:
                    counts = (count_selfdual_and_pairs(d, q, flavor)
                              if source == "formula"
                              else brute_poly_census(d, q, flavor))
                    print(f"{flavor}\t{d}\t{q}\t{counts.n_plain}"
                          f"\t{counts.n_selfdual}\t{counts.m_pairs}\t{source}")
    return 0


def _cmd_hl_value(args) -> int:
    lam = _parse_parts(args.lam)
    z = parse_ratfunc(args.z)
    t = parse_ratfunc(args.t)
    print(hl_principal(lam, z, t).value)
    return 0


def _numeric_or_symbolic(args):
    """(q, parity) for the chars API; symbolic mode defaults to parity even."""
    if args.q is not None:
        return args.q, args.parity
    parity = args.parity or "even"
    return None, parity


def _require_scale(args, parser):
    if args.q is None and not args.symbolic:
        parser.error("need --q Q or --symbolic for this group")


def _cmd_degree_sum(args, parser) -> int:
    if args.group in _WEYL:
        print(chars.weyl_sums(_WEYL[args.group], args.n)["degree_sum"])
        return 0
    _require_scale(args, parser)
    q, parity = _numeric_or_symbolic(args)
    print(chars.real_degree_sum_gf(args.group, args.n, q, parity))
    return 0


def _cmd_involutions(args, parser) -> int:
    if args.group in _WEYL:
        print(chars.weyl_sums(_WEYL[args.group], args.n)["involutions"])
        return 0
    _require_scale(args, parser)
    q, parity = _numeric_or_symbolic(args)
    print(chars.involution_count(args.group, args.n, q, parity))
    return 0


def _cmd_eps_split(args, parser) -> int:
    _require_scale(args, parser)
    q, parity = _numeric_or_symbolic(args)
    plus = chars.u_eps_sum_gf(args.n, 1, q, parity)
    minus = chars.u_eps_sum_gf(args.n, -1, q, parity)
    print(f"eps=+1\t{plus}")
    print(f"eps=-1\t{minus}")
    print(f"sum\t{plus + minus}")
    print(f"difference\t{plus - minus}")
    return 0


def _cmd_brute_involutions(args) -> int:
    order = groups.group_order(args.group, args.n, args.q)
    brute = groups.count_square_roots_of_identity(args.group, args.n, args.q)
    closed = chars.involution_count(args.group, args.n, args.q)
    print(f"group order\t{order}")
    print(f"involutions (enumerated)\t{brute}")
    print(f"involutions (closed form)\t{closed}")
    print(f"agreement\t{'yes' if brute == closed else 'NO'}")
    return 0 if brute == closed else 1


def _cmd_bench(args) -> int:
    from . import bench
    return bench.run(end_to_end=args.end_to_end)


# ---------------------------------------------------------------------------
# Parser assembly.
# ---------------------------------------------------------------------------


def _add_scale_flags(sub, with_parity=True):
    sub.add_argument("--q", type=int, default=None,
                     help="evaluate at this prime power")
    sub.add_argument("--symbolic", action="store_true",
                     help="keep q symbolic (exact rational function)")
    if with_parity:
        sub.add_argument("--parity", choices=("even", "odd"), default=None,
                         help="characteristic parity for symbolic mode "
                              "(default even)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcharsum",
        description="Exact verification toolkit for real character degree "
                    "sums of finite general linear and unitary groups.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("verify", help="run named checks")
    p.add_argument("--id", action="append", metavar="ID",
                   help="run only this check id (repeatable, comma-splittable)")
    p.add_argument("--tag", default=None, help="run only checks with this tag")
    p.add_argument("--json", default=None, metavar="PATH",
                   help="write a JSON report")
    p.add_argument("--tsv", default=None, metavar="PATH",
                   help="write a TSV report")
    p.add_argument("--order", type=int, default=None,
                   help="override series truncation order where applicable")
    p.add_argument("--nmax", type=int, default=None,
                   help="override maximum rank where applicable")
    p.add_argument("--q", default=None, metavar="LIST",
                   help="comma-separated numeric q values where applicable")
    p.add_argument("--symbolic", action="store_true",
                   help="symbolic q only (with --q: both)")
    p.add_argument("--quick", action="store_true",
                   help="use the quick parameter budget")
    p.add_argument("--list", action="store_true",
                   help="list check ids and descriptions, then exit")
    p.set_defaults(func=lambda a: _cmd_verify(a))

    p = subs.add_parser("census", help="polynomial class-count table")
    p.add_argument("--flavor", choices=("gl", "u", "both"), default="both")
    p.add_argument("--dmax", type=int, default=4, help="degrees 1..dmax")
    p.add_argument("--q", default="2,3,4,5", metavar="LIST",
                   help="comma-separated prime powers")
    p.add_argument("--source", choices=("formula", "brute", "both"),
                   default="formula")
    p.set_defaults(func=lambda a: _cmd_census(a))

    p = subs.add_parser("hl-value", help="exact Hall-Littlewood principal value")
    p.add_argument("--lam", "--lambda", dest="lam", required=True,
                   metavar="PARTS", help="partition, e.g. 2,1")
    p.add_argument("--z", required=True, help="geometric ratio, e.g. -1/q")
    p.add_argument("--t", required=True, help="deformation value, e.g. 1/q")
    p.set_defaults(func=lambda a: _cmd_hl_value(a))

    p = subs.add_parser("degree-sum", help="real character degree sum")
    p.add_argument("--group", required=True,
                   choices=("gl", "u", "weylA", "weylB", "weylD"))
    p.add_argument("--n", type=int, required=True)
    _add_scale_flags(p)
    p.set_defaults(func=lambda a, _p=p: _cmd_degree_sum(a, _p))

    p = subs.add_parser("involutions", help="involution count")
    p.add_argument("--group", required=True,
                   choices=("gl", "u", "weylA", "weylB", "weylD"))
    p.add_argument("--n", type=int, required=True)
    _add_scale_flags(p)
    p.set_defaults(func=lambda a, _p=p: _cmd_involutions(a, _p))

    p = subs.add_parser("eps-split",
                        help="indicator-refined unitary degree sums")
    p.add_argument("--group", choices=("u",), default="u")
    p.add_argument("--n", type=int, required=True)
    _add_scale_flags(p)
    p.set_defaults(func=lambda a, _p=p: _cmd_eps_split(a, _p))

    p = subs.add_parser("brute-involutions",
                        help="enumerate a small group directly")
    p.add_argument("--group", required=True, choices=("gl", "u"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=lambda a: _cmd_brute_involutions(a))

    p = subs.add_parser("bench", help="compare pure and compiled kernels")
    p.add_argument("--end-to-end", action="store_true",
                   help="also time a full check in a subprocess per kernel")
    p.set_defaults(func=lambda a: _cmd_bench(a))

    return parser


# expression values often start with '-'; fold them into --flag=value form
# so argparse does not mistake them for option strings
_VALUE_FLAGS = ("--z", "--t", "--lam", "--lambda")


def _merge_value_flags(argv):
    merged = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _VALUE_FLAGS and i + 1 < len(argv):
            merged.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            merged.append(token)
            i += 1
    return merged


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_merge_value_flags(argv))
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
