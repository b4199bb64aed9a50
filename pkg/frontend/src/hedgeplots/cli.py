"""Command-line entry point: ``hedgeplots render --csv <file> --out <dir>``."""

import argparse
import sys

from hedgeplots.data import SchemaError
from hedgeplots.render import PlotSpec, render


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hedgeplots",
        description="Render regret-versus-replication charts from a results CSV.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p_render = sub.add_parser("render", help="render one image per k panel")
    p_render.add_argument("--csv", required=True, help="results CSV from the harness")
    p_render.add_argument("--out", required=True, help="output directory for images")
    p_render.add_argument(
        "--metric",
        default="regret_best",
        help="y column: regret_best or a q_<value> quantile column",
    )
    return parser


def cli_main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if not exc.code else int(exc.code)
    try:
        spec = PlotSpec(input_csv=args.csv, output_dir=args.out, y_metric=args.metric)
        written = render(spec)
    except (SchemaError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for path in written:
        print(path)
    return 0


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
