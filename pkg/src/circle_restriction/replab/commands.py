"""
Command functions behind the CLI subcommands.

Every command is registered under the "cli" group, catches library errors and
returns a CommandResponse; printing and exit codes are left to ``cli.main``.
"""

import logging
import math
from pathlib import Path
from typing import Iterable, Optional

import logfire

from circle_restriction.cache import (
    cache_stats,
    cleanup_stale_entries,
    clear_cache,
    list_cache_entries,
)
from circle_restriction.circfun import (
    dual_route_check,
    extension_norm6_spectral,
    phi_sixth,
    random_test_function,
    read_coefficients,
)
from circle_restriction.circlegeom import log_ratio_profile, radial_profile
from circle_restriction.circlegeom.checks import LOG_RATIO_EPS
from circle_restriction.errors import CircleRestrictionError, InvalidInputError
from circle_restriction.forms import psi, trilinear_T
from circle_restriction.model import CommandResponse
from circle_restriction.registry import get_command, register_command
from circle_restriction.replab.models import ConjectureReport, EvalResult, Settings
from circle_restriction.replab.suites import SUITE_GROUP, resolve_suite, suite_names
from circle_restriction.seqtab import (
    SequenceCache,
    get_sequence_cache,
    set_sequence_cache,
    write_tables,
)

logger = logging.getLogger(__name__)

CLI_GROUP = "cli"
EVAL_FORMS = ("phi", "T", "psi", "norm6")
CACHE_ACTIONS = ("stats", "list", "clear", "prune")
MAX_CONJECTURE_DEGREE = 12
SUPPORT_RADIUS = 3.0


def _sequence_cache_for(settings: Optional[Settings]) -> SequenceCache:
    """Shared sequence cache, replaced when it was built under other quadrature settings."""
    cache = get_sequence_cache()
    if settings is not None and cache.cfg != settings.quad_config():
        cache = SequenceCache(cfg=settings.quad_config())
        set_sequence_cache(cache)
    return cache


@register_command(CLI_GROUP, "tables")
def cmd_tables(
    out_dir: Path,
    fmt: str = "csv",
    settings: Optional[Settings] = None,
    cache: Optional[SequenceCache] = None,
) -> CommandResponse:
    """
    Write both published tables, values rounded half-to-even, with error columns.

    Entries are computed under the quadrature settings of ``settings``;
    ``cache`` overrides the shared sequence cache.

    Returns:
        CommandResponse with result {"paths": [...], "config": digest}
    """
    try:
        cache = cache if cache is not None else _sequence_cache_for(settings)
        with logfire.span("cli.tables", fmt=fmt, config=cache.cfg.digest()):
            paths = write_tables(Path(out_dir), fmt, cache)
        return CommandResponse(
            is_success=True,
            result={"paths": [str(p) for p in paths], "config": cache.cfg.digest()},
        )
    except (CircleRestrictionError, OSError) as e:
        return CommandResponse(is_success=False, result=None, error=f"Writing tables failed: {e}")


@register_command(CLI_GROUP, "verify")
def cmd_verify(
    suite: str,
    settings: Settings,
    seeds: Optional[int] = None,
    seed: int = 0,
    out: Optional[Path] = None,
) -> CommandResponse:
    """
    Run one verification suite and optionally write its JSON report.

    ``trilinear`` and ``local`` are accepted for ``thm7`` and ``local-cs``.

    Returns:
        CommandResponse wrapping the VerificationReport; an unknown suite or
        a negative seed count is an input error
    """
    suite = resolve_suite(suite)
    runner = get_command(SUITE_GROUP, suite)
    if runner is None:
        return CommandResponse(
            is_success=False, result=None, error=f"unknown suite {suite!r}; expected one of {suite_names()}"
        )
    if seeds is not None and seeds < 0:
        return CommandResponse(is_success=False, result=None, error=f"seeds must be >= 0, got {seeds}")

    response = runner(settings, seeds, seed)
    if response.is_success and out is not None:
        try:
            path = response.result.write(Path(out))
            logger.info(f"report written to {path}")
        except OSError as e:
            return CommandResponse(is_success=False, result=None, error=f"Writing report failed: {e}")
    return response


@register_command(CLI_GROUP, "conjecture")
def cmd_conjecture(
    degree: int,
    trials: int,
    seed: int = 0,
    settings: Optional[Settings] = None,
    out: Optional[Path] = None,
) -> CommandResponse:
    """
    Evaluate Psi on ``trials`` random nonnegative antipodal functions.

    Reports the smallest Psi found and its minimizer. A value below minus its
    error is flagged as a potential counterexample; nothing is asserted.
    """
    if degree < 0 or degree % 2 or degree > MAX_CONJECTURE_DEGREE:
        return CommandResponse(
            is_success=False,
            result=None,
            error=f"degree must be even in [0, {MAX_CONJECTURE_DEGREE}], got {degree}",
        )
    if trials < 0:
        return CommandResponse(is_success=False, result=None, error=f"trials must be >= 0, got {trials}")

    settings = settings or Settings()
    cfg = settings.quad_config()
    report = ConjectureReport(degree=degree, trials=trials, seed=seed)
    try:
        with logfire.span("cli.conjecture", degree=degree, trials=trials, seed=seed):
            for s in range(seed, seed + trials):
                h = random_test_function(degree, s, "nonneg-antipodal")
                value = psi(h, cfg, settings.workers)
                report.evaluated += 1
                if report.min_psi is None or value.value < report.min_psi:
                    report.min_psi = value.value
                    report.min_error = value.abs_error
                    report.minimizer_seed = s
                    report.minimizer = h.to_dict()
                if value.value + value.abs_error < 0:
                    report.flagged = True
                    report.notes.append(
                        f"seed {s}: Psi = {value.value:.6e} below -{value.abs_error:.1e}, potential counterexample"
                    )
                    logger.warning(f"Psi negative beyond its error at seed {s}: {value}")
        if out is not None:
            report.write(Path(out))
    except (CircleRestrictionError, OSError) as e:
        return CommandResponse(is_success=False, result=None, error=f"Conjecture exploration failed: {e}")

    if not trials:
        report.notes.append("no trials requested")
    return CommandResponse(is_success=True, result=report)


@register_command(CLI_GROUP, "eval")
def cmd_eval(
    form: str,
    coeff_file: Path,
    settings: Optional[Settings] = None,
    dual_route: bool = False,
) -> CommandResponse:
    """
    Evaluate phi, T(f,f,f), Psi(f) or ||f^sigma||_6^6 for a coefficient file.

    ``dual_route`` adds the planar quadrature cross check to norm6.
    """
    if form not in EVAL_FORMS:
        return CommandResponse(is_success=False, result=None, error=f"unknown form {form!r}; expected one of {EVAL_FORMS}")

    settings = settings or Settings()
    cfg = settings.quad_config()
    try:
        with logfire.span("cli.eval", form=form, source=str(coeff_file)):
            f = read_coefficients(Path(coeff_file))
            extras = {}
            if form == "phi":
                sixth = phi_sixth(f, cfg, settings.workers)
                value = max(sixth.value, 0.0) ** (1 / 6)
                # d(x^(1/6)) = x^(-5/6) dx / 6
                error = sixth.abs_error / (6 * max(sixth.value, 1e-300) ** (5 / 6))
                extras["phi6"] = sixth.to_dict()
            else:
                if form == "T":
                    result = trilinear_T(f, f, f, cfg, settings.workers)
                elif form == "psi":
                    result = psi(f, cfg, settings.workers)
                else:
                    result = extension_norm6_spectral(f, cfg, settings.workers)
                value, error = result.value, result.abs_error

            if dual_route:
                if form != "norm6":
                    raise InvalidInputError("--dual-route applies to norm6 only")
                record = dual_route_check(f, cfg=cfg, radial_cut=settings.radial_cut, workers=settings.workers)
                extras["dual_route"] = record.to_dict()
    except (CircleRestrictionError, OSError) as e:
        return CommandResponse(is_success=False, result=None, error=str(e))

    return CommandResponse(
        is_success=True,
        result=EvalResult(form=form, value=value, abs_error=error, source=str(coeff_file), extras=extras),
    )


@register_command(CLI_GROUP, "convolution")
def cmd_convolution(
    r_min: float,
    r_max: float,
    samples: int,
    out: Path,
    eps_list: Iterable[float] = LOG_RATIO_EPS,
) -> CommandResponse:
    """
    sigma*sigma*sigma on a radial grid as ``r,sigma3`` CSV, plus the
    log-ratio sweep near the ring as ``<out stem>_log_ratio.csv``.
    """
    try:
        if r_max > SUPPORT_RADIUS:
            raise InvalidInputError(f"r_max must be at most {SUPPORT_RADIUS}, got {r_max}")
        with logfire.span("cli.convolution", r_min=r_min, r_max=r_max, samples=samples):
            out = Path(out)
            out.parent.mkdir(parents=True, exist_ok=True)
            profile = radial_profile(r_min, r_max, samples)
            profile.to_csv(out)
            ratios = log_ratio_profile(eps_list)
            ratio_path = out.with_name(f"{out.stem}_log_ratio.csv")
            ratios.to_csv(ratio_path)
    except (CircleRestrictionError, OSError) as e:
        return CommandResponse(is_success=False, result=None, error=f"Convolution profile failed: {e}")

    spread = ratios.ratio_spread()
    return CommandResponse(
        is_success=True,
        result={
            "profile": str(out),
            "log_ratio": str(ratio_path),
            "samples": len(profile.radii),
            "notes": profile.notes,
            "log_ratio_spread": spread if math.isfinite(spread) else None,
        },
    )


@register_command(CLI_GROUP, "cache")
def cmd_cache(
    action: str,
    settings: Optional[Settings] = None,
    pattern: Optional[str] = None,
    limit: Optional[int] = None,
) -> CommandResponse:
    """
    Inspect or prune the integral cache.

    Actions: stats, list (newest first), clear (optionally by glob on the
    orders), prune (entries computed under other quadrature settings).
    """
    settings = settings or Settings()
    digest = settings.quad_config().digest()
    if action == "stats":
        return CommandResponse(is_success=True, result=cache_stats(digest))
    if action == "list":
        return CommandResponse(is_success=True, result=list_cache_entries(limit))
    if action == "clear":
        return CommandResponse(is_success=True, result={"cleared": clear_cache(pattern)})
    if action == "prune":
        return CommandResponse(is_success=True, result={"removed": cleanup_stale_entries(digest)})
    return CommandResponse(
        is_success=False, result=None, error=f"unknown cache action {action!r}; expected one of {CACHE_ACTIONS}"
    )
