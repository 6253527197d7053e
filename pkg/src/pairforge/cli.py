"""pairforge command-line entry point."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalog import CatalogEntry, catalog_pair
from .errors import AxiomError, ParseError
from .fileformat import parse_pair_file
from .identities import DEFAULT_BUDGET
from .report import COMMANDS, EXIT_INPUT, Options, run_report


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pairforge", description="Structure reports for finite-dimensional associative pairs.")
    p.add_argument("command", choices=COMMANDS)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--pair", metavar="FILE", help="pair definition file")
    src.add_argument("--catalog", metavar="NAME", help="catalog pair such as 'rect(2,3)', 'split(2)', 'gauss'")
    p.add_argument("--standard", type=int, metavar="N", help="degree of the standard identity to check")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, metavar="N",
                   help="work budget for identity checks (0 = unlimited)")
    p.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes for identity checks")
    p.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    return p


def load_entry(args) -> CatalogEntry:
    if args.catalog is not None:
        return catalog_pair(args.catalog)
    path = Path(args.pair)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    parsed = parse_pair_file(text)
    return CatalogEntry(path.name, parsed.pair, parsed.involution, parsed.module)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.standard is not None and args.standard < 1:
        print("pairforge: --standard must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        entry = load_entry(args)
    except (AxiomError, ParseError) as exc:
        print(f"pairforge: {exc}", file=sys.stderr)
        return EXIT_INPUT
    opts = Options(standard=args.standard, budget=args.budget or None, jobs=max(1, args.jobs))
    report = run_report(args.command, entry, opts)
    text = report.render()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return report.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
