"""Command-line front end.

Every subcommand reads a document file (see :mod:`fpsoft.docio` for the
grammar) and prints a deterministic textual report.  Exit codes: 0 when the
queried property holds or the result is valid, 1 for violations and
semantic errors, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from .docio import Document, ParseError, format_fraction, format_set, parse_document
from .laws import LawResult, UnknownLawError, REGISTRY, run_law_suite
from .mapping import preimage
from .sets import FPSoftPoint, empty_set, is_subset, union_family
from .topology import (
    FPSoftTopology,
    check_axioms,
    closure,
    interior,
    is_continuous,
    is_qnbd,
    discontinuity_witness,
    validate_topology,
)
from .compactness import minimal_subcover


class CommandError(Exception):
    """Semantic error surfaced to the user with exit code 1."""


_POINT = re.compile(r"^([^:{}\s]+):(\d+)/(\d+):\{([^{}]*)\}$")


def parse_point(context, text: str) -> FPSoftPoint:
    m = _POINT.match(text.strip())
    if m is None:
        raise CommandError(f"bad point {text!r}, expected e:P/Q:{{x1 x2}}")
    param, num, den, inner = m.groups()
    symbols = [s for s in inner.replace(",", " ").split() if s]
    if int(den) == 0:
        raise CommandError("point grade denominator is zero")
    alpha = Fraction(int(num), int(den))
    if not 0 < alpha <= 1:
        raise CommandError("point grade must lie in (0, 1]")
    if param not in context.parameters:
        raise CommandError(f"{param} not in parameters")
    for s in symbols:
        if s not in context.universe:
            raise CommandError(f"{s} not in universe")
    return FPSoftPoint.of(context, param, alpha, symbols)


def _load(path: str) -> Document:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_document(fh.read())
    except OSError as exc:
        raise CommandError(str(exc)) from exc
    except ParseError as exc:
        raise CommandError(str(exc)) from exc


def _named_set(doc: Document, name: str):
    if name not in doc.sets:
        raise CommandError(f"unknown set {name!r}")
    return doc.sets[name]


def _named_topology(doc: Document, name: str) -> FPSoftTopology:
    if name not in doc.topologies:
        raise CommandError(f"unknown topology {name!r}")
    return FPSoftTopology(doc.context, tuple(doc.topology_sets(name)))


def _validated_topology(doc: Document, name: str) -> FPSoftTopology:
    if name not in doc.topologies:
        raise CommandError(f"unknown topology {name!r}")
    return validate_topology(doc.context, doc.topology_sets(name))


def _set_label(doc: Document, fa) -> str:
    return doc.set_names().get(fa, format_set("anonymous", fa))


def cmd_validate(args) -> int:
    doc = _load(args.input)
    if args.topology not in doc.topologies:
        raise CommandError(f"unknown topology {args.topology!r}")
    violation = check_axioms(doc.context, doc.topology_sets(args.topology))
    if violation is None:
        print("valid")
        return 0
    detail = violation.message.split(": ", 1)[-1]
    if violation.members:
        names = ",".join(_set_label(doc, m) for m in violation.members)
        print(f"invalid: axiom {violation.axiom} violated by ({names}): {detail}")
    else:
        print(f"invalid: axiom {violation.axiom} violated: {detail}")
    return 1


def cmd_closure(args) -> int:
    doc = _load(args.input)
    t = _validated_topology(doc, args.topology)
    print(format_set("result", closure(t, _named_set(doc, args.set))))
    return 0


def cmd_interior(args) -> int:
    doc = _load(args.input)
    t = _validated_topology(doc, args.topology)
    print(format_set("result", interior(t, _named_set(doc, args.set))))
    return 0


def cmd_qnbd(args) -> int:
    doc = _load(args.input)
    t = _validated_topology(doc, args.topology)
    pt = parse_point(doc.context, args.point)
    if is_qnbd(t, _named_set(doc, args.set), pt):
        print("yes")
        return 0
    print("no")
    return 1


def cmd_base(args) -> int:
    doc = _load(args.input)
    t = _validated_topology(doc, args.topology)
    base = [_named_set(doc, n) for n in args.base]
    for b in base:
        if b not in t.opens:
            raise CommandError(f"base member {_set_label(doc, b)} is not open")
    for fa in t.opens:
        below = [b for b in base if is_subset(b, fa)]
        merged = union_family(below) if below else empty_set(doc.context)
        if merged != fa:
            print(f"no: {_set_label(doc, fa)} is not a union of base members")
            return 1
    print("yes")
    return 0


def cmd_continuity(args) -> int:
    doc = _load(args.input)
    if args.mapping not in doc.mappings:
        raise CommandError(f"unknown mapping {args.mapping!r}")
    m = doc.mappings[args.mapping]
    t1 = _validated_topology(doc, args.source_topology)
    if args.target_topology not in doc.topologies:
        raise CommandError(f"unknown topology {args.target_topology!r}")
    t2 = validate_topology(m.target, doc.topology_sets(args.target_topology))
    if is_continuous(m, t1, t2):
        print("yes")
        return 0
    bad = discontinuity_witness(m, t1, t2)
    print(f"no: preimage of {_set_label(doc, bad)} is not open")
    print(format_set("preimage", preimage(m, bad)))
    return 1


def cmd_subcover(args) -> int:
    doc = _load(args.input)
    if args.cover not in doc.covers:
        raise CommandError(f"unknown cover {args.cover!r}")
    sub = minimal_subcover(doc.cover_of(args.cover))
    if sub is None:
        print("not a cover")
        return 1
    print("minimal subcover: " + " ".join(_set_label(doc, f) for f in sub))
    return 0


def _report(result: LawResult) -> str:
    if result.passed and not result.expects_counterexample:
        return f"pass ({result.instances} instances)"
    if result.passed:
        return ("pass (required counterexample found, "
                f"{result.instances} instances)\n" + result.witness)
    if result.expects_counterexample:
        return f"FAIL: no counterexample found in {result.instances} instances"
    return f"FAIL: counterexample\n{result.witness}"


def cmd_laws(args) -> int:
    if args.all == bool(args.law):
        raise CommandError("exactly one of --law and --all is required")
    ids = list(REGISTRY) if args.all else [args.law]
    status = 0
    for law_id in ids:
        try:
            result = run_law_suite(law_id, args.universe, args.parameters,
                                   args.resolution, jobs=args.jobs)
        except UnknownLawError:
            raise CommandError(f"unknown law {law_id!r}") from None
        prefix = f"{law_id}: " if args.all else ""
        print(prefix + _report(result))
        if not result.passed:
            status = 1
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fpsoft",
        description="fuzzy-parametrized soft set topology toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("--input", required=True, help="document file")
        p.add_argument("--jobs", type=int, default=1,
                       help="accepted for interface uniformity; output is "
                       "deterministic regardless")
        return p

    p = with_input(sub.add_parser("validate", help="check topology axioms"))
    p.add_argument("--topology", required=True)
    p.set_defaults(func=cmd_validate)

    for name, func in [("closure", cmd_closure), ("interior", cmd_interior)]:
        p = with_input(sub.add_parser(name, help=f"compute the {name} of a set"))
        p.add_argument("--topology", required=True)
        p.add_argument("--set", required=True)
        p.set_defaults(func=func)

    p = with_input(sub.add_parser("qnbd", help="Q-neighborhood test"))
    p.add_argument("--topology", required=True)
    p.add_argument("--set", required=True)
    p.add_argument("--point", required=True, help="e:P/Q:{x1 x2}")
    p.set_defaults(func=cmd_qnbd)

    p = with_input(sub.add_parser("base", help="base test"))
    p.add_argument("--topology", required=True)
    p.add_argument("--base", required=True, nargs="+")
    p.set_defaults(func=cmd_base)

    p = with_input(sub.add_parser("continuity", help="continuity test"))
    p.add_argument("--mapping", required=True)
    p.add_argument("--source-topology", required=True)
    p.add_argument("--target-topology", required=True)
    p.set_defaults(func=cmd_continuity)

    p = with_input(sub.add_parser("subcover", help="exact minimal subcover"))
    p.add_argument("--cover", required=True)
    p.set_defaults(func=cmd_subcover)

    p = sub.add_parser("laws", help="run exhaustive law suites")
    p.add_argument("--law", help="law id from the registry")
    p.add_argument("--all", action="store_true", help="run every law")
    p.add_argument("--universe", type=int, default=None)
    p.add_argument("--parameters", type=int, default=None)
    p.add_argument("--resolution", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1,
                   help="worker count (scans stay deterministic regardless)")
    p.set_defaults(func=cmd_laws)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
