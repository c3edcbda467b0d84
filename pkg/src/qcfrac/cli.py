"""Command-line front end: qcfrac expand | verify | partitions | dissect | vanish | cf."""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction
from typing import List, Optional

from . import __version__
from .cfrac import NAMES, CFSpec, auto_depth, convergent, named_product
from .dissection import (FAMILIES, DissectionSpec, dissection_lhs, family, p_dissect,
                         vanishing_scan, verify_diss_expansion)
from .dsl import DSLError, evaluate, load, parse_expression
from .dsl.evaluate import check_statement
from .errors import QSeriesError
from .identities import (IdentityCheck, auxiliary_checks, compare, errata_checks, run,
                         thm21_checks, thm22_checks, thm23_checks)
from .partitions import (NAMED_SPECS, PartitionSpec, enum_counts, gf_counts, verify_thm31,
                         verify_thm32)
from .series import make_monomial

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SUITE_CHECKS = {
    "thm21": thm21_checks,
    "thm22": thm22_checks,
    "thm23": lambda: thm23_checks(4),
    "aux": auxiliary_checks,
    "errata": errata_checks,
}


class UsageError(Exception):
    pass


def parse_order(text: str) -> Fraction:
    """An order in units of q: an integer or a fraction a/b."""
    m = re.fullmatch(r"\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?", text)
    if not m or (m.group(2) is not None and int(m.group(2)) == 0):
        raise argparse.ArgumentTypeError(f"invalid order {text!r}; use N or a/b")
    value = Fraction(int(m.group(1)), int(m.group(2) or 1))
    if value <= 0:
        raise argparse.ArgumentTypeError("order must be positive")
    return value


def frac_json(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def emit_report(args, results: list, order: Optional[Fraction], start: float) -> None:
    elapsed = int((time.perf_counter() - start) * 1000) if args.timing else 0
    report = {
        "tool_version": __version__,
        "command": args.command,
        "order": frac_json(order) if order is not None else None,
        "results": results,
        "elapsed_ms": elapsed,
    }
    print(json.dumps(report, indent=2))


def result_line(r) -> str:
    line = f"{r.id}: {r.status.upper()}"
    if r.first_mismatch is not None:
        e, a, b = r.first_mismatch
        line += f" (first mismatch at q^{e}: {a} vs {b})"
    return line


def seed_fault(checks: List[IdentityCheck], exponent: Fraction) -> None:
    """Add q^exponent to the right side of the first check."""
    first = checks[0]
    rhs = first.rhs
    first.rhs = lambda W: rhs(W) + make_monomial(1, exponent)


def report_checks(args, results, order, start) -> int:
    if args.json:
        emit_report(args, [r.to_json() for r in results], order, start)
    else:
        for r in results:
            print(result_line(r))
        passed = sum(r.passed for r in results)
        print(f"{passed}/{len(results)} passed")
    return EXIT_PASS if all(r.passed for r in results) else EXIT_FAIL


# -- commands -------------------------------------------------------------------

def cmd_expand(args) -> int:
    start = time.perf_counter()
    node = parse_expression(args.expr)
    s = evaluate(node, args.order)
    if s.is_exact:
        s = s.truncate(args.order)
    if args.scale is not None and args.scale % s.scale:
        raise UsageError(f"series lives on q^(1/{s.scale}), not on q^(1/{args.scale})")
    if args.format == "json":
        terms = [{"exp": frac_json(e), "coeff": c} for e, c in s.terms()]
        order = s.order if s.order is not None else args.order
        emit_report(args, terms, order, start)
    else:
        print(s.render(show_order=args.show_order))
    return EXIT_PASS


def cmd_verify(args) -> int:
    start = time.perf_counter()
    order = args.order
    if args.file:
        source = load(args.file)
        if order is None:
            order = Fraction(source.order or 60)
        results = []
        for i, stmt in enumerate(source.statements):
            res = check_statement(stmt, order, scale=source.scale)
            if i == 0 and args.seed_fault is not None:
                lhs, rhs = evaluate(stmt.lhs, order), evaluate(stmt.rhs, order)
                res = compare(res.id, lhs, rhs + make_monomial(1, args.seed_fault), order)
            results.append(res)
        return report_checks(args, results, order, start)
    order = order or Fraction(60)
    names = list(SUITE_CHECKS) if args.suite == "all" else [args.suite]
    checks = [c for name in names for c in SUITE_CHECKS[name]()]
    if args.seed_fault is not None:
        seed_fault(checks, args.seed_fault)
    return report_checks(args, run(checks, order), order, start)


def parse_partition_spec(text: str) -> PartitionSpec:
    """'C1' or 'mod=28; parts=1±,13±; parts2=6±,14±'.

    ``partsK`` lists residues with K colours (``parts`` means one colour);
    a trailing '±' or '+-' adds the residue mod - r as well.
    """
    key = text.strip()
    if key in NAMED_SPECS:
        return NAMED_SPECS[key]
    modulus = None
    groups = []
    for field in filter(None, (f.strip() for f in text.split(";"))):
        m = re.fullmatch(r"(\w+)\s*=\s*(.+)", field)
        if not m:
            raise UsageError(f"bad field {field!r} in partition spec")
        name, value = m.group(1), m.group(2)
        if name == "mod":
            if not value.strip().isdigit() or int(value) < 1:
                raise UsageError(f"mod must be a positive integer, not {value!r}")
            modulus = int(value)
            continue
        pm = re.fullmatch(r"parts(\d*)", name)
        if not pm:
            raise UsageError(f"unknown key {name!r}; expected mod or partsK")
        colours = int(pm.group(1) or 1)
        for item in value.split(","):
            im = re.fullmatch(r"\s*(\d+)\s*(±|\+-)?\s*", item)
            if not im:
                raise UsageError(f"bad residue {item!r}")
            groups.append((int(im.group(1)), colours, im.group(2) is not None))
    if modulus is None:
        raise UsageError("partition spec needs mod=M")
    if not groups:
        raise UsageError("partition spec needs at least one partsK field")
    classes = []
    for r, c, symmetric in groups:
        classes.append((r, c))
        if symmetric:
            classes.append((modulus - r or modulus, c))
    try:
        return PartitionSpec(modulus, tuple(classes), symmetric=False)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_partitions(args) -> int:
    start = time.perf_counter()
    if args.theorem:
        verify = {"31": verify_thm31, "32": verify_thm32}[args.theorem]
        return report_checks(args, [verify(args.n)], Fraction(args.n), start)
    if not args.spec:
        raise UsageError("partitions needs --spec or --theorem")
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    spec = parse_partition_spec(args.spec)
    tables = {}
    if args.method in ("gf", "both"):
        tables["gf"] = gf_counts(spec, args.n)
    if args.method in ("enum", "both"):
        tables["enum"] = enum_counts(spec, args.n)
    agree = len({tuple(t.counts) for t in tables.values()}) == 1
    if args.json:
        rows = [dict({"n": n}, **{k: t[n] for k, t in tables.items()}) for n in range(args.n + 1)]
        emit_report(args, rows, None, start)
    elif args.table:
        for n in range(args.n + 1):
            print(n, *(t[n] for t in tables.values()))
    else:
        values = {k: t[args.n] for k, t in tables.items()}
        print(next(iter(values.values())) if agree else
              " ".join(f"{k}={v}" for k, v in values.items()))
    return EXIT_PASS if agree else EXIT_FAIL


def cmd_dissect(args) -> int:
    start = time.perf_counter()
    order = args.order or Fraction(60)
    if args.diss:
        forms = ["printed", "derived"] if args.diss == "both" else [args.diss]
        return report_checks(args, [verify_diss_expansion(order, f) for f in forms], order, start)
    if None in (args.t, args.r, args.s, args.p):
        raise UsageError("dissect needs --t --r --s --p (or --diss)")
    spec = DissectionSpec(args.t, args.r, args.s, args.p)
    components, combined = p_dissect(spec, order)
    result = compare(f"dissection(t={spec.t},r={spec.r},s={spec.s},p={spec.p})",
                     combined, dissection_lhs(spec, order), order)
    if not args.json and args.components:
        for j, c in enumerate(components):
            print(f"component {j}: {c.render()}")
    return report_checks(args, [result], order, start)


def cmd_vanish(args) -> int:
    start = time.perf_counter()
    names = sorted(FAMILIES) if args.family == "all" else [args.family]
    reports = [vanishing_scan(family(n), args.max, args.residue) for n in names]
    if args.json:
        rows = []
        for rep in reports:
            row = rep.result.to_json()
            row["checked"] = rep.checked
            row["witness"] = sorted([k, n, c] for k, (n, c) in rep.first_nonzero.items())[:1]
            rows.append(row)
        emit_report(args, rows, Fraction(args.max), start)
    else:
        for rep in reports:
            print(rep.summary())
    return EXIT_PASS if all(r.result.passed for r in reports) else EXIT_FAIL


def cmd_cf(args) -> int:
    start = time.perf_counter()
    order = args.order or Fraction(60)
    spec = CFSpec.named(args.name)
    if args.depth is not None:
        series, depth, stabilized = convergent(spec, args.depth, order), args.depth, None
    else:
        rep = auto_depth(spec, order)
        series, depth, stabilized = rep.series, rep.depth_used, rep.stabilized
    result = compare(f"{args.name}.cf=product", series, named_product(args.name, order), order)
    if args.json:
        row = result.to_json()
        row["depth"] = depth
        row["stabilized"] = stabilized
        emit_report(args, [row], order, start)
    else:
        state = "" if stabilized is None else (", stabilized" if stabilized else ", NOT stabilized")
        print(f"{args.name}: depth {depth}{state}")
        print(series.render())
        print(result_line(result))
    ok = result.passed and stabilized is not False
    return EXIT_PASS if ok else EXIT_FAIL


# -- argument parsing -------------------------------------------------------------

class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = Parser(prog="qcfrac", description="Exact q-series identity checking.")
    parser.add_argument("--version", action="version", version=f"qcfrac {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=Parser)

    def common(p, order=True):
        if order:
            p.add_argument("--order", type=parse_order, default=None,
                           help="truncation order in units of q (N or a/b)")
        p.add_argument("--json", action="store_true", help="print a JSON report")
        p.add_argument("--timing", action="store_true", help="record elapsed_ms in JSON reports")

    p = sub.add_parser("expand", help="expand a DSL expression")
    p.add_argument("expr")
    p.add_argument("--order", type=parse_order, default=Fraction(20))
    p.add_argument("--scale", type=int, default=None, help="pin the exponent grid q^(1/D)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--show-order", action="store_true", help="append the O(q^N) term")
    p.add_argument("--timing", action="store_true")

    p = sub.add_parser("verify", help="run identity suites or a .qid file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--suite", choices=("thm21", "thm22", "thm23", "aux", "errata", "all"))
    group.add_argument("--file")
    p.add_argument("--seed-fault", type=parse_order, default=None, help=argparse.SUPPRESS)
    common(p)

    p = sub.add_parser("partitions", help="count colour partitions")
    p.add_argument("--spec", help="C1..D3 or 'mod=28; parts=1±,13±; parts2=6±,14±'")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--method", choices=("gf", "enum", "both"), default="both")
    p.add_argument("--theorem", choices=("31", "32"))
    p.add_argument("--table", action="store_true", help="print counts for 0..n")
    common(p, order=False)

    p = sub.add_parser("dissect", help="p-dissection of a theta quotient")
    for name in ("t", "r", "s", "p"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--diss", choices=("printed", "derived", "both"),
                   help="check the six-term expansion of 1/S1* instead")
    p.add_argument("--components", action="store_true", help="print each component")
    common(p)

    p = sub.add_parser("vanish", help="vanishing-coefficient scans")
    p.add_argument("--family", required=True,
                   choices=sorted(FAMILIES) + [n.rstrip("*") for n in sorted(FAMILIES)] + ["all"])
    p.add_argument("--max", type=int, default=500)
    p.add_argument("--residue", type=int, default=None, help="scan a different residue class")
    common(p, order=False)

    p = sub.add_parser("cf", help="convergent report for a named continued fraction")
    p.add_argument("--name", required=True, choices=NAMES)
    p.add_argument("--depth", type=int, default=None, help="fixed depth instead of auto")
    common(p)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        handler = {"expand": cmd_expand, "verify": cmd_verify, "partitions": cmd_partitions,
                   "dissect": cmd_dissect, "vanish": cmd_vanish, "cf": cmd_cf}[args.command]
        return handler(args)
    except UsageError as exc:
        print(f"qcfrac: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DSLError, QSeriesError, ValueError, KeyError, OSError) as exc:
        print(f"qcfrac: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        # --help and --version
        return exc.code if isinstance(exc.code, int) else EXIT_PASS


if __name__ == "__main__":
    sys.exit(main())
