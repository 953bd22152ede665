"""Command-line entry point: ``arrowcat list | run | check-file``.

Exit codes: 0 when everything passes, 1 when a law is violated (or a
negative control unexpectedly passes), 2 for bad input or usage.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .errors import ParseError, UnknownSuite, ValidationError
from .fixtures import load_instances
from .suites import DEFAULTS, SUITES, run_suite

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def _positive(text: str) -> int:
    n = _nonneg(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def default_seed(environ=os.environ) -> int:
    raw = environ.get("ARROWCAT_SEED")
    if raw is None or raw == "":
        return DEFAULTS["seed"]
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"ARROWCAT_SEED must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arrowcat", description="Check lifted structure laws on arrow categories of matrix categories.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list the law suites")

    run = sub.add_parser("run", help="run one law suite")
    run.add_argument("suite", help="suite id (see `arrowcat list`)")
    run.add_argument("--seed", type=int, default=None, help="base seed (default: $ARROWCAT_SEED or 0)")
    run.add_argument("--samples", type=_nonneg, default=DEFAULTS["samples"], help="sampled fixtures per check")
    run.add_argument("--max-dim", type=_positive, default=None,
                     help="largest sampled dimension (default 3, 4 for monoidal-coherence)")
    run.add_argument("--fixtures", metavar="FILE", help="extra instance file added to the shipped fixtures")
    run.add_argument("--format", choices=("text", "json"), default="text")
    run.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    run.add_argument("-q", "--quiet", action="store_true", help="text format: only show unexpected results")

    check = sub.add_parser("check-file", help="parse and validate an instance file")
    check.add_argument("file")
    return parser


def _list(out) -> int:
    width = max(len(n) for n in SUITES)
    for s in SUITES.values():
        out.write(f"{s.name:<{width}}  {s.title}\n{'':<{width}}  cites: {s.citation}\n")
    return EXIT_OK


def _run(args, out) -> int:
    seed = args.seed if args.seed is not None else default_seed()
    fixtures = load_instances(args.fixtures) if args.fixtures else None
    report = run_suite(args.suite, seed=seed, samples=args.samples, max_dim=args.max_dim,
                       fixtures=fixtures, fixtures_label=Path(args.fixtures).name if args.fixtures else None)
    text = report.to_json() if args.format == "json" else report.to_text(verbose=not args.quiet)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        out.write(f"{report.suite}: {report.status} ({report.totals['checks']} checks) -> {args.out}\n")
    else:
        out.write(text)
    return report.exit_code


def _check_file(args, out) -> int:
    fx = load_instances(args.file)
    counts = ", ".join(f"{n} {k}" for k, n in fx.counts().items() if n)
    out.write(f"{args.file}: ok ({counts or 'empty'})\n")
    return EXIT_OK


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "list":
            return _list(out)
        if args.command == "run":
            return _run(args, out)
        return _check_file(args, out)
    except (ParseError, ValidationError, UnknownSuite, UsageError) as exc:
        err.write(f"arrowcat: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        err.write(f"arrowcat: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
