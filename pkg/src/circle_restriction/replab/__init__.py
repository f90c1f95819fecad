"""
Command-line front end: settings, verification suites and reports.

Available functions:
- cmd_tables, cmd_verify, cmd_conjecture, cmd_eval, cmd_convolution, cmd_cache
- load_settings, apply_settings, get_settings: settings resolution
- main: argparse entry point returning an exit code
"""

from circle_restriction.replab.cli import build_parser, main
from circle_restriction.replab.commands import (
    cmd_cache,
    cmd_conjecture,
    cmd_convolution,
    cmd_eval,
    cmd_tables,
    cmd_verify,
)
from circle_restriction.replab.models import (
    ConjectureReport,
    EvalResult,
    Settings,
    VerificationReport,
)
from circle_restriction.replab.settings import (
    apply_settings,
    get_settings,
    load_settings,
    reset_settings,
)
from circle_restriction.replab.suites import (
    DEFAULT_SEEDS,
    SUITE_ALIASES,
    SUITE_GROUP,
    resolve_suite,
    suite_names,
)

__all__ = [
    # Models
    "Settings",
    "VerificationReport",
    "ConjectureReport",
    "EvalResult",
    # Settings
    "load_settings",
    "apply_settings",
    "get_settings",
    "reset_settings",
    # Commands
    "cmd_tables",
    "cmd_verify",
    "cmd_conjecture",
    "cmd_eval",
    "cmd_convolution",
    "cmd_cache",
    # Suites
    "SUITE_GROUP",
    "SUITE_ALIASES",
    "resolve_suite",
    "DEFAULT_SEEDS",
    "suite_names",
    # CLI
    "build_parser",
    "main",
]
