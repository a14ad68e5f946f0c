"""Command line interface.

Every command reads tables in the plain text format (size, then the rows)
and diagrams in the JSON format; results go to stdout, errors to stderr.
Exit codes: 0 success, 1 domain error or failed check, 2 usage or missing
file.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .core import (PropertyReport, RackError, RackTable, dual,
                   format_rack_table, operator_equivalence_quotient,
                   parse_rack_table, properties_report, quotient_by,
                   validate_rack)
from .generators import alexander, constant_action, ts_rack
from .iso import isomorphic, rp_family_scan, verify_constant_action_classification
from .links import (DiagramError, counting_polynomial_string,
                    enhanced_invariant, parse_diagram, rack_counting)
from .poly import (CONVENTIONS, enumerate_subracks, exponent_profile,
                   rack_polynomial, subrack_polynomial)

__all__ = ["main"]

_MODES = ("sr", "pr", "srpp", "rpp")


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_table(path: str) -> RackTable:
    return parse_rack_table(_read(path))


def _load_valid_table(path: str) -> RackTable:
    table = _load_table(path)
    if not table.report.is_rack:
        _print_report(table.report, file=sys.stderr)
        table.require_rack()
    return table


def _parse_elements(text: str) -> tuple[int, ...]:
    """Accept "{4,5}", "4,5", or "4 5"."""
    cleaned = text.strip().strip("{}")
    tokens = [t for t in re.split(r"[,\s]+", cleaned) if t]
    if not tokens:
        raise RackError(f"no elements in {text!r}")
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise RackError(f"non-integer element in {text!r}") from None


def _parse_partition(text: str) -> tuple[tuple[int, ...], ...]:
    """Accept blocks in braces, like "{1,2}{3}{4,5}"."""
    blocks = re.findall(r"\{([^{}]*)\}", text)
    if not blocks:
        raise RackError(f"no blocks in {text!r}; write blocks as {{1,2}}{{3}}")
    return tuple(_parse_elements(b) for b in blocks)


def _format_set(elements: tuple[int, ...]) -> str:
    return "{" + ",".join(str(v) for v in elements) + "}"


def _print_report(report: PropertyReport, file=None) -> None:
    out = file if file is not None else sys.stdout
    for name in ("is_rack", "is_quandle", "is_crossed_set",
                 "is_abelian", "is_latin"):
        flag = "true" if getattr(report, name) else "false"
        print(f"{name}: {flag}", file=out)
    shown = report.axiom_violations[:10]
    for v in shown:
        print(f"violation: {v.axiom} at {v.witness}", file=out)
    hidden = len(report.axiom_violations) - len(shown)
    if hidden > 0:
        print(f"violation: and {hidden} more", file=out)


def _cmd_check(args: argparse.Namespace) -> int:
    report = validate_rack(_load_table(args.table))
    _print_report(report)
    return 0 if report.is_rack else 1


def _cmd_props(args: argparse.Namespace) -> int:
    _print_report(properties_report(_load_valid_table(args.table)))
    return 0


def _cmd_poly(args: argparse.Namespace) -> int:
    table = _load_valid_table(args.table)
    print(rack_polynomial(table, args.m, args.n, args.convention))
    return 0


def _cmd_profile(args: argparse.Namespace) -> int:
    table = _load_valid_table(args.table)
    profile = exponent_profile(table, args.m, args.n)
    for x in table.elements:
        c, r = profile.pair(x)
        print(f"{x}: c={c} r={r}")
    return 0


def _cmd_subracks(args: argparse.Namespace) -> int:
    table = _load_valid_table(args.table)
    for subset in enumerate_subracks(table):
        print(_format_set(subset))
    return 0


def _cmd_srp(args: argparse.Namespace) -> int:
    table = _load_valid_table(args.table)
    subset = _parse_elements(args.subset)
    print(subrack_polynomial(table, subset, args.m, args.n, args.convention))
    return 0


def _cmd_gen_constant(args: argparse.Namespace) -> int:
    from .core import Permutation
    table = constant_action(Permutation(tuple(args.images)))
    table.require_rack()
    print(format_rack_table(table), end="")
    return 0


def _cmd_gen_alexander(args: argparse.Namespace) -> int:
    print(format_rack_table(alexander(args.n, args.t)), end="")
    return 0


def _cmd_gen_ts(args: argparse.Namespace) -> int:
    print(format_rack_table(ts_rack(args.n, args.t, args.s)), end="")
    return 0


def _cmd_dual(args: argparse.Namespace) -> int:
    print(format_rack_table(dual(_load_valid_table(args.table))), end="")
    return 0


def _cmd_quotient(args: argparse.Namespace) -> int:
    table = _load_valid_table(args.table)
    quotient = quotient_by(table, _parse_partition(args.partition))
    print(format_rack_table(quotient), end="")
    return 0


def _cmd_opquot(args: argparse.Namespace) -> int:
    table = _load_valid_table(args.table)
    partition, quotient, is_quandle = operator_equivalence_quotient(table)
    print("partition: " + " ".join(_format_set(b) for b in partition))
    print(f"quandle: {'true' if is_quandle else 'false'}")
    print(format_rack_table(quotient), end="")
    return 0


def _cmd_iso(args: argparse.Namespace) -> int:
    result = isomorphic(_load_valid_table(args.left),
                        _load_valid_table(args.right))
    if result.isomorphic:
        print("isomorphic")
        print("witness: " + " ".join(str(v) for v in result.witness.images))
    else:
        print("not isomorphic")
    return 0


def _cmd_scan(args: argparse.Namespace) -> int:
    scan = rp_family_scan(_load_valid_table(args.left),
                          _load_valid_table(args.right),
                          bound=args.bound, convention=args.convention)
    for line in scan.lines():
        print(line)
    return 0


def _cmd_classify_ca(args: argparse.Namespace) -> int:
    report = verify_constant_action_classification(args.size, args.convention)
    for line in report.lines():
        print(line)
    print(f"consistent: {'true' if report.consistent else 'false'}")
    return 0 if report.consistent else 1


def _cmd_invariant(args: argparse.Namespace) -> int:
    diagram = parse_diagram(_read(args.link))
    table = _load_valid_table(args.table)
    if args.mode == "sr":
        total, _ = rack_counting(diagram, table)
        print(total)
    elif args.mode == "pr":
        _, per_class = rack_counting(diagram, table)
        print(counting_polynomial_string(per_class))
    else:
        invariant = enhanced_invariant(diagram, table, args.m, args.n,
                                       args.convention)
        print(invariant.enhanced_string(with_framing=args.mode == "rpp"))
    return 0


def _add_depths(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-m", type=int, default=1, metavar="M",
                        help="first depth (default 1)")
    parser.add_argument("-n", type=int, default=1, metavar="N",
                        help="second depth (default 1)")


def _add_convention(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--convention", choices=CONVENTIONS, default="def",
                        help="which count feeds which variable (default def)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rackkit",
        description="Finite racks and quandles: polynomial and link invariants")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a table and report properties")
    p.add_argument("table")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("props", help="property flags of a valid rack")
    p.add_argument("table")
    p.set_defaults(func=_cmd_props)

    p = sub.add_parser("poly", help="two-variable rack polynomial")
    p.add_argument("table")
    _add_depths(p)
    _add_convention(p)
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("profile", help="per-element count pairs")
    p.add_argument("table")
    _add_depths(p)
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("subracks", help="list all closed subsets")
    p.add_argument("table")
    p.set_defaults(func=_cmd_subracks)

    p = sub.add_parser("srp", help="subrack polynomial of a closed subset")
    p.add_argument("table")
    p.add_argument("subset", help='subset like "{4,5}"')
    _add_depths(p)
    _add_convention(p)
    p.set_defaults(func=_cmd_srp)

    p = sub.add_parser("gen", help="generate standard tables")
    gen_sub = p.add_subparsers(dest="family", required=True)
    g = gen_sub.add_parser("constant", help="constant action rack from a permutation")
    g.add_argument("images", type=int, nargs="+",
                   help="images of 1..n in order")
    g.set_defaults(func=_cmd_gen_constant)
    g = gen_sub.add_parser("alexander", help="linear quandle on Z/n")
    g.add_argument("n", type=int)
    g.add_argument("t", type=int)
    g.set_defaults(func=_cmd_gen_alexander)
    g = gen_sub.add_parser("ts", help="two-coefficient linear rack on Z/n")
    g.add_argument("n", type=int)
    g.add_argument("t", type=int)
    g.add_argument("s", type=int)
    g.set_defaults(func=_cmd_gen_ts)

    p = sub.add_parser("dual", help="invert every column action")
    p.add_argument("table")
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("quotient", help="quotient by a congruence partition")
    p.add_argument("table")
    p.add_argument("partition", help='blocks like "{1,2}{3}{4,5}"')
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("opquot",
                       help="quotient by the acts-identically congruence")
    p.add_argument("table")
    p.set_defaults(func=_cmd_opquot)

    p = sub.add_parser("iso", help="isomorphism test with witness")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("scan",
                       help="compare polynomial families over a depth grid")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--bound", type=int, default=None,
                   help="max depth (default: period of both tables)")
    _add_convention(p)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("classify-ca",
                       help="cross-check the constant action classification")
    p.add_argument("size", type=int)
    _add_convention(p)
    p.set_defaults(func=_cmd_classify_ca)

    p = sub.add_parser("invariant", help="framed link counting invariants")
    p.add_argument("link")
    p.add_argument("table")
    p.add_argument("--mode", choices=_MODES, default="rpp",
                   help="sr: total count, pr: per-class counts, "
                        "srpp/rpp: polynomial-enhanced (default rpp)")
    _add_depths(p)
    _add_convention(p)
    p.set_defaults(func=_cmd_invariant)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RackError, DiagramError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
