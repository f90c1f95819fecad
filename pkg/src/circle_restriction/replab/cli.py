"""
Command-line interface.

Usage:
    circle-restriction tables --out tables/ --format csv
    circle-restriction verify crux
    circle-restriction verify thm7 --seeds 1000 --out report.json
    circle-restriction conjecture --degree 8 --trials 10000 --seed 0
    circle-restriction eval phi coefficients.txt
    circle-restriction eval norm6 coefficients.txt --dual-route
    circle-restriction convolution --r-min 0 --r-max 3 --samples 301 --out sigma3.csv
    circle-restriction cache stats

Exit codes: 0 everything passed, 1 a record failed or the explorer flagged a
finding, 2 usage or input error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from circle_restriction.errors import InvalidInputError
from circle_restriction.logfire_config import configure_logfire
from circle_restriction.model import CommandResponse
from circle_restriction.replab.commands import (
    CACHE_ACTIONS,
    EVAL_FORMS,
    cmd_cache,
    cmd_conjecture,
    cmd_convolution,
    cmd_eval,
    cmd_tables,
    cmd_verify,
)
from circle_restriction.replab.models import QUAD_FIELDS
from circle_restriction.replab.settings import apply_settings, load_settings
from circle_restriction.replab.suites import SUITE_ALIASES, suite_names

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

SETTINGS_FLAGS = QUAD_FIELDS + ("grid_size", "cache_path", "radial_cut", "workers")


def _settings_parser() -> argparse.ArgumentParser:
    """Flags shared by every subcommand; all default to None so lower layers win."""
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("-v", "--verbose", action="store_true", help="Debug logging.")
    p.add_argument("--config", type=Path, default=None, help="JSON settings file.")
    p.add_argument("--no-logfire", action="store_true", dest="no_logfire", help="Do not configure Logfire.")
    p.add_argument("--split-radius", type=float, dest="split_radius", help="Head/tail boundary R (default 200).")
    p.add_argument("--head-tol", type=float, dest="head_tol", help="Absolute head tolerance (default 1e-12).")
    p.add_argument("--tail-order", type=int, dest="tail_order", choices=(1, 2, 3), help="Tail correction terms.")
    p.add_argument("--max-panels", type=int, dest="max_panels", help="Panel budget of the head quadrature.")
    p.add_argument("--panel-width", type=float, dest="panel_width", help="Initial panel width.")
    p.add_argument("--target-error", type=float, dest="target_error", help="Largest error of one integral.")
    p.add_argument("--grid-size", type=int, dest="grid_size", help="Grid for |f| and f_sharp.")
    p.add_argument("--cache-path", type=Path, dest="cache_path", help="JSONL file for the integral cache.")
    p.add_argument("--radial-cut", type=float, dest="radial_cut", help="Radial cut of the direct route.")
    p.add_argument("--workers", type=int, help="Threads (default 1).")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _settings_parser()
    parser = argparse.ArgumentParser(
        prog="circle-restriction",
        description="Certified numerics for the Fourier extension inequality on the circle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", parents=[common], help="Reproduce the published tables.")
    p.add_argument("--out", type=Path, default=Path("tables"), help="Output directory (default: tables).")
    p.add_argument("--format", choices=("csv", "json"), default="csv", dest="fmt")

    p = sub.add_parser("verify", parents=[common], help="Run a verification suite.")
    p.add_argument("suite", choices=suite_names() + list(SUITE_ALIASES))
    p.add_argument("--seeds", type=int, default=None, help="Seeds for Monte-Carlo parts (suite default if omitted).")
    p.add_argument("--seed", type=int, default=0, help="First seed (default: 0).")
    p.add_argument("--out", type=Path, default=None, help="JSON report path (stdout if omitted).")

    p = sub.add_parser("conjecture", parents=[common], help="Explore Psi >= 0 on random functions.")
    p.add_argument("--degree", type=int, default=8)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=Path, default=None)

    p = sub.add_parser("eval", parents=[common], help="Evaluate a form on a coefficient file.")
    p.add_argument("form", choices=EVAL_FORMS)
    p.add_argument("coeff_file", type=Path)
    p.add_argument("--dual-route", action="store_true", dest="dual_route", help="Cross-check norm6 by quadrature.")

    p = sub.add_parser("convolution", parents=[common], help="Radial profile of sigma*sigma*sigma.")
    p.add_argument("--r-min", type=float, default=0.0, dest="r_min")
    p.add_argument("--r-max", type=float, default=3.0, dest="r_max")
    p.add_argument("--samples", type=int, default=301)
    p.add_argument("--out", type=Path, default=Path("sigma3.csv"))

    p = sub.add_parser("cache", parents=[common], help="Inspect or prune the integral cache.")
    p.add_argument("action", choices=CACHE_ACTIONS)
    p.add_argument("--pattern", default=None, help="Glob on comma-joined orders (clear only).")
    p.add_argument("--limit", type=int, default=None, help="Entries to list.")
    return parser


def _configure_logging(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="[%(levelname)s] %(asctime)s %(name)s - %(message)s",
        datefmt="%Y-%m-%dT%H:%M:%S",
    )


def _print_json(data) -> None:
    print(json.dumps(data, indent=2, default=str))


def _dispatch(args: argparse.Namespace, settings) -> CommandResponse:
    if args.command == "tables":
        return cmd_tables(args.out, args.fmt, settings)
    if args.command == "verify":
        return cmd_verify(args.suite, settings, seeds=args.seeds, seed=args.seed, out=args.out)
    if args.command == "conjecture":
        return cmd_conjecture(args.degree, args.trials, args.seed, settings, out=args.out)
    if args.command == "eval":
        return cmd_eval(args.form, args.coeff_file, settings, dual_route=args.dual_route)
    if args.command == "convolution":
        return cmd_convolution(args.r_min, args.r_max, args.samples, args.out)
    return cmd_cache(args.action, settings, pattern=args.pattern, limit=args.limit)


def _exit_code(args: argparse.Namespace, response: CommandResponse) -> int:
    """Report the response and map it to an exit code."""
    if not response.is_success:
        print(f"error: {response.error}", file=sys.stderr)
        return EXIT_USAGE

    result = response.result
    if args.command == "verify":
        if args.out is None:
            print(result.to_json())
        summary = result.summary()
        logger.info(f"{summary['passed']}/{summary['total']} records passed, min margin {summary['min_margin']}")
        return EXIT_OK if result.passed else EXIT_FAILED
    if args.command == "conjecture":
        if args.out is None:
            print(result.to_json())
        if result.flagged:
            print("FLAGGED: Psi below minus its error; see notes", file=sys.stderr)
            return EXIT_FAILED
        return EXIT_OK
    if args.command == "eval":
        print(result)
        record = result.extras.get("dual_route")
        if record is not None:
            _print_json(record)
            return EXIT_OK if record["passed"] else EXIT_FAILED
        return EXIT_OK
    _print_json(result)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, resolve settings and run one subcommand.

    Returns:
        Exit code (0, 1 or 2)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if not e.code else EXIT_USAGE

    _configure_logging(args.verbose)
    if not args.no_logfire:
        configure_logfire()

    overrides = {name: getattr(args, name, None) for name in SETTINGS_FLAGS}
    try:
        settings = apply_settings(load_settings(args.config, overrides))
    except InvalidInputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    logger.debug(f"running {args.command} with settings {settings.digest()}")
    return _exit_code(args, _dispatch(args, settings))


if __name__ == "__main__":
    sys.exit(main())
