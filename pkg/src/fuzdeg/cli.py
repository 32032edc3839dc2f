"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 capacity error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import report
from .claims import all_claims, evaluate
from .classes import count_classes, enumerate_classes
from .config import DEFAULT_CLASS_CAP, DEFAULT_ORACLE_CAP, DEFAULT_PAIR_CAP, RunConfig, default_max_order
from .errors import (
    CapacityError,
    GroupValidationError,
    InsufficientDepthError,
    SpecError,
)
from .groups import parse_group_spec
from .lattice import enumerate_subgroups
from .verify import run_verification

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-order", type=_positive, default=None,
                        help="largest group order accepted (default: $FUZDEG_MAX_ORDER or 128)")
    common.add_argument("--jobs", type=_positive, default=1, help="worker threads for pair loops")
    common.add_argument("--class-cap", type=_positive, default=DEFAULT_CLASS_CAP)
    common.add_argument("--pair-cap", type=_positive, default=DEFAULT_PAIR_CAP)
    common.add_argument("-o", "--output", type=Path, default=None, help="write to a file instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="fuzdeg",
        description="Distinct fuzzy subgroups, their counts and commutativity degree for small finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="count classes and compute the degree")
    p.add_argument("spec", help="group spec, e.g. dihedral:8, cyclic:9, product:cyclic:2,cyclic:4, file:path")
    p.add_argument("--format", choices=("json", "csv", "markdown"), default="json")

    p = sub.add_parser("verify", parents=[common], help="cross-check against the brute-force oracle")
    p.add_argument("spec")
    p.add_argument("--oracle-depth", type=_positive, default=None)
    p.add_argument("--oracle-cap", type=_positive, default=DEFAULT_ORACLE_CAP)
    p.add_argument("--samples", type=_positive, default=10_000,
                   help="random pairs checked for groups above order 6")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "markdown"), default="markdown")

    p = sub.add_parser("paper-table", parents=[common], help="recompute every published value")
    p.add_argument("--format", choices=("json", "csv", "markdown"), default="markdown")

    p = sub.add_parser("export-lattice", parents=[common], help="subgroup lattice as DOT or JSON")
    p.add_argument("spec")
    p.add_argument("--format", choices=("dot", "json"), default="dot")

    p = sub.add_parser("classes", parents=[common], help="list every class as a subgroup chain (JSON)")
    p.add_argument("spec")
    p.add_argument("--census", action="store_true", help="emit only the per-support counts")
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        spec=getattr(args, "spec", ""),
        max_order=args.max_order if args.max_order is not None else default_max_order(),
        class_cap=args.class_cap,
        pair_cap=args.pair_cap,
        oracle_cap=getattr(args, "oracle_cap", DEFAULT_ORACLE_CAP),
        oracle_depth=getattr(args, "oracle_depth", None),
        format=getattr(args, "format", "json"),
        seed=getattr(args, "seed", 0),
        jobs=args.jobs,
        samples=getattr(args, "samples", 10_000),
    )


def _verify_markdown(rep) -> str:
    lines = [
        f"# Verification: {rep.group} (order {rep.order})",
        "",
        f"- classes: {rep.s} (oracle buckets: {rep.oracle_classes}, oracle maps: {rep.oracle_maps})",
        f"- pairs: {rep.pairs_checked} ({rep.pair_mode})",
        f"- sd: {rep.sd} (oracle: {rep.oracle_sd})",
        "",
        "| check | result | cases | statement |",
        "|---|---|---|---|",
    ]
    for c in rep.checks:
        lines.append(f"| {c.name} | {'pass' if c.passed else 'FAIL'} | {c.checked} | {c.statement} |")
    for c in rep.checks:
        if not c.passed:
            lines += ["", f"counterexample for {c.name}: {c.counterexample}"]
    lines += ["", "all checks passed" if rep.passed else "VERIFICATION FAILED"]
    return "\n".join(lines) + "\n"


def _run(args: argparse.Namespace) -> tuple[str, int]:
    config = _config(args)
    logging.getLogger("fuzdeg").debug("running %s with %s", args.command, config)
    if args.command == "analyze":
        doc = report.analyze(args.spec, config)
        if args.format == "csv":
            return report.analysis_to_csv(doc), EXIT_OK
        if args.format == "markdown":
            return report.analysis_to_markdown(doc), EXIT_OK
        return report.to_json(doc), EXIT_OK

    if args.command == "verify":
        g = parse_group_spec(args.spec, config.max_order)
        rep = run_verification(g, config)
        text = report.to_json(rep.to_dict()) if args.format == "json" else _verify_markdown(rep)
        return text, EXIT_OK if rep.passed else EXIT_VERIFY

    if args.command == "paper-table":
        rows = [r.to_dict() for r in evaluate(all_claims(), config.max_order)]
        if args.format == "json":
            return report.to_json({"claims": rows}), EXIT_OK
        if args.format == "csv":
            return report.claims_csv(rows), EXIT_OK
        return report.claims_markdown(rows) + "\n", EXIT_OK

    g = parse_group_spec(args.spec, config.max_order)
    lat = enumerate_subgroups(g, jobs=config.jobs)
    if args.command == "export-lattice":
        if args.format == "json":
            return report.to_json(report.lattice_to_dict(lat)), EXIT_OK
        return report.lattice_to_dot(lat), EXIT_OK

    if args.census:
        return report.to_json(report.census_to_dict(lat, count_classes(lat))), EXIT_OK
    classes = enumerate_classes(lat, config.class_cap)
    return report.to_json(report.classes_to_dict(lat, classes)), EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        text, code = _run(args)
    except (SpecError, GroupValidationError, ValueError) as exc:
        print(f"fuzdeg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapacityError, InsufficientDepthError) as exc:
        print(f"fuzdeg: capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    if args.output is not None:
        args.output.write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
