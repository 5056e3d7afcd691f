"""Command-line entry points.

    gaplab run --config cfg.json [--seed N] [--trials N] [--out DIR] [--jobs N]
    gaplab verify-kernels [--out DIR]
    gaplab report RUN_DIR [RUN_DIR ...] --out DIR

Exit codes: 0 success, 2 invalid config, 3 run marked invalid.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .experiment import ConfigError, ExperimentConfig, report, run_experiment, verify_kernels

EXIT_OK = 0
EXIT_BAD_CONFIG = 2
EXIT_INVALID_RUN = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gaplab",
                                     description="smallest eigenvalue gap experiments")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="execute a Monte Carlo experiment")
    run_p.add_argument("--config", required=True, type=Path)
    run_p.add_argument("--seed", type=int, default=None,
                       help="override master_seed")
    run_p.add_argument("--trials", type=int, default=None,
                       help="override trial count")
    run_p.add_argument("--out", type=Path, default=Path("run_out"))
    run_p.add_argument("--jobs", type=int, default=None,
                       help="override parallelism degree")

    ver_p = sub.add_parser("verify-kernels",
                           help="deterministic kernel and limit checks")
    ver_p.add_argument("--out", type=Path, default=None)

    rep_p = sub.add_parser("report", help="merge runs into summary tables")
    rep_p.add_argument("runs", nargs="+", type=Path)
    rep_p.add_argument("--out", required=True, type=Path)
    return parser


def _cmd_run(args) -> int:
    try:
        data = json.loads(args.config.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG
    try:
        config = ExperimentConfig.from_dict(data)
        if args.seed is not None:
            config.master_seed = args.seed
        if args.trials is not None:
            config.trials = args.trials
        if args.jobs is not None:
            config.parallelism = args.jobs
        run = run_experiment(config, out_dir=args.out)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG
    print(f"run complete: {config.trials} trials, "
          f"{run.summary['n_failed']} failed, out={args.out}")
    for ell, rep in run.summary.get("law_tests", {}).items():
        print(f"  tau_{ell}: KS={rep['statistic']:.4f} p={rep['p_value']:.4g}")
    if not run.valid:
        print("error: more than 1% of trials failed; run marked invalid",
              file=sys.stderr)
        return EXIT_INVALID_RUN
    return EXIT_OK


def _cmd_verify(args) -> int:
    bundle = verify_kernels(out_dir=args.out)
    for check in bundle["checks"]:
        status = "pass" if check["passed"] else "FAIL"
        print(f"[{status}] {check['name']}")
    print("all passed" if bundle["all_passed"] else "some checks FAILED")
    return EXIT_OK


def _cmd_report(args) -> int:
    try:
        result = report(args.runs, args.out)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG
    print(f"report written to {args.out}: {result['groups']} group(s), "
          f"{len(result['histograms'])} histogram file(s)")
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "run":
        code = _cmd_run(args)
    elif args.command == "verify-kernels":
        code = _cmd_verify(args)
    else:
        code = _cmd_report(args)
    return code


if __name__ == "__main__":
    sys.exit(main())
