"""plotkit: render figures from exported spectral-statistics files.

    plotkit figure --spec fig.json --out fig.png

Exit codes mirror the exporter: 0 success, 2 rejected description or
inputs, 1 internal error.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__, figspec
from .inputs import InputError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plotkit",
        description="Render publication-style figures from exported "
                    "CSV and JSON statistics files.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    fig = sub.add_parser("figure",
                         help="render one figure from a JSON description")
    fig.add_argument("--spec", required=True, metavar="FIG.JSON",
                     help="figure description file")
    fig.add_argument("--out", default=None, metavar="IMAGE",
                     help="output image path (overrides the description)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = figspec.load(args.spec)
        from .figures import render  # pulls in matplotlib, keep help fast

        out = render(spec, args.out)
    except (figspec.SpecError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - the CLI boundary reports and exits
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
