"""Command line interface: run verification suites, dump relation
catalogs, and check reduction certificates.

Exit codes: 0 on success, 1 when any check fails, 2 on usage or parse
errors.
"""

from __future__ import annotations

import argparse
import sys

from . import certificates, lpres, suites


def _parse_seed(text: str) -> int:
    return int(text, 16) if text.lower().startswith("0x") else int(text, 0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torellikit",
        description="Exact verification of free-group automorphism identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", required=True, choices=suites.suite_names())
    verify.add_argument("--n", type=int, default=None)
    verify.add_argument("--k", type=int, default=None)
    verify.add_argument("--samples", type=int, default=None)
    verify.add_argument("--seed", type=_parse_seed, default=None,
                        help="hex (0x5EED) or decimal")
    verify.add_argument("--format", choices=("json", "text"), default="json")
    verify.add_argument("--report", default=None, help="write the report here")
    verify.add_argument("--threads", type=int, default=None)

    catalog = sub.add_parser("catalog", help="dump a relation catalog")
    catalog.add_argument("--dump", required=True,
                         choices=sorted(lpres._CATALOGS))
    catalog.add_argument("--n", type=int, required=True)
    catalog.add_argument("--k", type=int, default=1)

    certify = sub.add_parser("certify", help="check a reduction certificate")
    certify.add_argument("--file", required=True)
    certify.add_argument("--depth", type=int, default=1,
                         help="substitution depth for relator recognition")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0

    if args.command == "verify":
        try:
            report = suites.run_suite(
                args.suite, n=args.n, k=args.k, samples=args.samples,
                seed=args.seed, threads=args.threads,
            )
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        text = report.to_json() if args.format == "json" else report.to_text()
        if args.report:
            with open(args.report, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        print(text)
        return 0 if report.passed else 1

    if args.command == "catalog":
        try:
            for inst in lpres.relation_catalog(args.dump, args.n, args.k):
                print(inst.describe())
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        return 0

    if args.command == "certify":
        try:
            report = certificates.check_certificate_file(args.file, depth=args.depth)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print(report.summary())
        return 0 if report.ok else 1

    return 2


if __name__ == "__main__":
    sys.exit(main())
