"""plot-figures command line entry point."""

from __future__ import annotations

import argparse
import sys

from .figures import FIGURES, FigplotsError, FigureSpec, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plot-figures")
    parser.add_argument("--csv", required=True, help="scan CSV produced by gatemp")
    parser.add_argument("--figure", required=True, choices=FIGURES)
    parser.add_argument("--out", required=True, help="output image path")
    parser.add_argument("--probe", action="store_true", help="also dump plotted arrays as JSON")
    parser.add_argument(
        "--envelope-csv", default=None, help="optional squeezed-thermal curve CSV (fig3a/fig3b)"
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    spec = FigureSpec(
        csv_path=args.csv,
        figure=args.figure,
        out_path=args.out,
        probe=args.probe,
        envelope_csv=args.envelope_csv,
    )
    try:
        render(spec)
    except (FigplotsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
