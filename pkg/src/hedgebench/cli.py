"""Command-line entry points.

    hedgebench run   --config spec.cfg           # run an experiment, write CSV
    hedgebench gen   --d 2 --T 8 --k 2 --adv 0.1 --m 1 --out a.csv
    hedgebench bound --t 0 --N 2 --eps 1 --delta 0.5

Exit codes: 0 success, 1 runtime error (I/O, bad data), 2 configuration error
(including usage errors).
"""

import argparse
import logging
import sys

from hedgebench.adversary import apply_advantage, build_base, replicate, write_matrix_csv
from hedgebench.analytics import BoundParams, theorem1_bound
from hedgebench.bench import emit_csv, load_experiment_spec, run_experiment
from hedgebench.errors import ConfigError, InputError


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hedgebench",
        description="Benchmark harness for regret-minimizing learners "
        "on replicated adversarial loss matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run an experiment spec and write a results CSV")
    run.add_argument("--config", required=True, help="flat key=value spec file")
    run.add_argument(
        "--workers",
        type=int,
        default=1,
        help="worker processes for independent cells (default 1)",
    )

    gen = sub.add_parser("gen", help="export a replicated loss matrix as CSV")
    gen.add_argument("--d", type=int, required=True, help="Hadamard depth (n = 2^(d+1) - 2)")
    gen.add_argument("--T", type=int, required=True, help="horizon (multiple of 2^d)")
    gen.add_argument("--k", type=int, required=True, help="number of advantaged rows")
    gen.add_argument("--adv", type=float, required=True, help="per-round advantage")
    gen.add_argument("--m", type=int, required=True, help="replication factor")
    gen.add_argument("--out", required=True, help="output CSV path")

    bound = sub.add_parser("bound", help="print the closed-form quantile-regret bound")
    bound.add_argument("--t", type=int, required=True, help="number of rounds")
    bound.add_argument("--N", type=int, required=True, help="number of actions")
    bound.add_argument("--eps", type=float, required=True, help="quantile in (0, 1]")
    bound.add_argument("--delta", type=float, required=True, help="slack in (0, 1/2]")

    return parser


def _cmd_run(args):
    logging.basicConfig(stream=sys.stderr, level=logging.INFO, format="%(message)s")
    spec = load_experiment_spec(args.config)
    records = run_experiment(spec, workers=args.workers)
    emit_csv(records, spec.output_path, spec.quantiles)
    print(f"wrote {len(records)} records to {spec.output_path}")


def _cmd_gen(args):
    matrix = replicate(
        apply_advantage(build_base(args.d, args.T), args.k, args.adv), args.m
    )
    write_matrix_csv(matrix, args.out)
    print(f"wrote {matrix.shape[0]}x{matrix.shape[1]} loss matrix to {args.out}")


def _cmd_bound(args):
    params = BoundParams(
        t=args.t, num_actions=args.N, quantile=args.eps, delta=args.delta
    )
    print(f"{theorem1_bound(params):.9g}")


def cli_main(argv=None):
    """Parse arguments and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage/help
        return 0 if not exc.code else int(exc.code)
    try:
        if args.command == "run":
            _cmd_run(args)
        elif args.command == "gen":
            _cmd_gen(args)
        else:
            _cmd_bound(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except (InputError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
