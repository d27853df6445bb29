"""Command line interface.

Subcommands:
    homtwist check <file.json>            run a manifest's tasks
    homtwist table <file.json> <name>     print an algebra's multiplication table
    homtwist paper [--filter S] [--bounds N]   run the acceptance suite

Exit codes: 0 success, 1 expectation failure, 2 parse error, 3 semantic error.
HOMTWIST_THREADS caps internal parallelism (0 = auto); the current scan
executor is sequential, which satisfies any cap.
"""

import argparse
import os
import sys

from .errors import HomTwistError, ManifestError, ManifestSyntaxError
from .manifest import EXIT_SEMANTIC, EXIT_SYNTAX, parse_manifest, run, table
from .suite import paper_suite


def _read_threads_env():
    raw = os.environ.get("HOMTWIST_THREADS", "0")
    try:
        value = int(raw)
        if value < 0:
            raise ValueError
    except ValueError:
        print(f"invalid HOMTWIST_THREADS={raw!r} (need an integer >= 0)", file=sys.stderr)
        return None
    return value


def _load(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_manifest(fh.read())


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="homtwist",
        description="Exact checks and constructions for Hom-associative structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run a manifest's tasks")
    p_check.add_argument("file")

    p_table = sub.add_parser("table", help="print an algebra multiplication table")
    p_table.add_argument("file")
    p_table.add_argument("name")

    p_paper = sub.add_parser("paper", help="run the built-in acceptance suite")
    p_paper.add_argument("--filter", default=None, help="only criteria containing this substring")
    p_paper.add_argument("--bounds", type=int, default=None, help="cap quantum degree bounds")

    args = parser.parse_args(argv)
    if _read_threads_env() is None:
        return EXIT_SEMANTIC

    if args.command == "paper":
        return paper_suite(filter_substr=args.filter, bounds=args.bounds)

    try:
        manifest = _load(args.file)
    except ManifestSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except OSError as exc:
        print(f"cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except HomTwistError as exc:
        print(f"semantic error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC

    if args.command == "check":
        code, report = run(manifest)
        print(report)
        return code

    try:
        print(table(manifest, args.name))
    except ManifestError as exc:
        print(f"semantic error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    return 0


if __name__ == "__main__":
    sys.exit(main())
