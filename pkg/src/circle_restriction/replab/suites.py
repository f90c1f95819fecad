"""
Verification suites.

Each suite is registered under the "verify" group and returns a
CommandResponse wrapping a VerificationReport. Monte-Carlo suites draw one
test function per seed from ``random_test_function`` and spread the seeds
over ``settings.workers`` threads; results come back in seed order.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional

import logfire

from circle_restriction.circfun import (
    dual_route_check,
    invariance_check,
    monotonicity_chain_check,
    plancherel_check,
    random_test_function,
)
from circle_restriction.circlegeom import (
    convolution_mass_check,
    log_ratio_check,
    sigma2_oracle_check,
    sigma3_oracle_check,
)
from circle_restriction.errors import CircleRestrictionError
from circle_restriction.forms import (
    alpha_dominance_check,
    bracket_check,
    cn_sweep,
    decomposition_check,
    evaluation_e_check,
    geometric_identity_check,
    hardy_check,
    local_extremizer_check,
    local_psi_check,
    psi_expansion_check,
    spectral_budget_check,
    trilinear_gpart_check,
    trilinear_maximum_check,
)
from circle_restriction.model import CommandResponse, VerificationRecord
from circle_restriction.registry import get_group_commands, register_command
from circle_restriction.replab.models import Settings, VerificationReport
from circle_restriction.seqtab import (
    alpha_asymptotic_check,
    beta_asymptotic_check,
    beta_corollary_check,
    delta_corollary_check,
    gamma_asymptotic_check,
    get_sequence_cache,
    sequence_invariants_check,
    table_reproduction_check,
)

logger = logging.getLogger(__name__)

SUITE_GROUP = "verify"

DEFAULT_SEEDS = {
    "thm7": 1000,
    "local-cs": 100,
    "geometry": 20,
    "dual_route": 50,
    "budget": 200,
}

ALPHA_RANGE = range(7, 201)
BETA_RANGE = range(2, 201, 2)
BETA_ASYMPTOTIC_RANGE = range(12, 201, 2)
PAIR_MAX = 100
CROSS_CHECK_SEEDS = 20

# Alternative spellings accepted on the command line
SUITE_ALIASES = {"trilinear": "thm7", "local": "local-cs"}

PerSeed = Callable[[int], List[VerificationRecord]]


def seed_list(seed: int, count: int) -> List[int]:
    return list(range(seed, seed + count))


def map_seeds(func: PerSeed, seeds: List[int], workers: int = 1) -> List[VerificationRecord]:
    """Run ``func`` per seed, threaded when workers > 1, records in seed order."""
    if workers <= 1 or len(seeds) <= 1:
        batches = [func(s) for s in seeds]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(func, seeds))
    return [record for batch in batches for record in batch]


def run_suite(
    name: str, settings: Settings, build: Callable[[], List[VerificationRecord]], seeds: Optional[List[int]] = None
) -> CommandResponse:
    """Time ``build`` inside a logfire span and wrap its records into a report."""
    start = time.perf_counter()
    try:
        with logfire.span(f"verify.{name}", suite=name, seeds=len(seeds or [])):
            records = build()
    except CircleRestrictionError as e:
        logger.error(f"suite {name} aborted: {e}")
        return CommandResponse(is_success=False, result=None, error=str(e))

    report = VerificationReport(
        suite=name,
        records=records,
        config_digest=settings.digest(),
        wall_clock=round(time.perf_counter() - start, 3),
        seeds=seeds or [],
    )
    summary = report.summary()
    logger.info(f"suite {name}: {summary['passed']}/{summary['total']} passed")
    return CommandResponse(is_success=True, result=report)


@register_command(SUITE_GROUP, "tables")
def verify_tables(settings: Settings, seeds: Optional[int] = None, seed: int = 0) -> CommandResponse:
    """Both published tables and the sign and ordering invariants of the sequences."""

    def build():
        cache = get_sequence_cache()
        return [table_reproduction_check(cache), sequence_invariants_check(cache=cache)]

    return run_suite("tables", settings, build)


@register_command(SUITE_GROUP, "asymptotics")
def verify_asymptotics(settings: Settings, seeds: Optional[int] = None, seed: int = 0) -> CommandResponse:
    """Companion bounds on alpha, beta, gamma and delta over their stated ranges."""

    def build():
        cache = get_sequence_cache()
        records = [alpha_asymptotic_check(n, cache) for n in ALPHA_RANGE]
        records += [beta_corollary_check(n, cache) for n in BETA_RANGE]
        records += [beta_asymptotic_check(n, cache) for n in BETA_ASYMPTOTIC_RANGE]
        for n in range(6, PAIR_MAX + 1, 2):
            records += [gamma_asymptotic_check(n, m, cache) for m in range(2, n + 1, 2)]
        for n in range(2, PAIR_MAX + 1, 2):
            records += [delta_corollary_check(n, m, cache) for m in range(2, n + 1, 2)]
        return records

    return run_suite("asymptotics", settings, build)


@register_command(SUITE_GROUP, "crux")
def verify_crux(settings: Settings, seeds: Optional[int] = None, seed: int = 0) -> CommandResponse:
    """5 alpha_n < alpha_0 for even n up to 400."""
    return run_suite("crux", settings, lambda: [alpha_dominance_check(400, get_sequence_cache())])


@register_command(SUITE_GROUP, "cn")
def verify_cn(settings: Settings, seeds: Optional[int] = None, seed: int = 0) -> CommandResponse:
    return run_suite("cn", settings, lambda: [cn_sweep(200, get_sequence_cache())])


@register_command(SUITE_GROUP, "thm7")
def verify_trilinear(settings: Settings, seeds: Optional[int] = None, seed: int = 0) -> CommandResponse:
    """
    T(h,h,h) <= T(c,c,c) on random nonnegative antipodal h of degree 2..10,
    plus the decomposition and the delta double sum on the first seeds.
    """
    cfg = settings.quad_config()
    chosen = seed_list(seed, DEFAULT_SEEDS["thm7"] if seeds is None else seeds)

    def per_seed(s: int) -> List[VerificationRecord]:
        h = random_test_function(2 + 2 * (s % 5), s, "nonneg-antipodal")
        return [trilinear_maximum_check(h, cfg)]

    def cross_checks(s: int) -> List[VerificationRecord]:
        h = random_test_function(2 + 2 * (s % 4), s, "nonneg-antipodal")
        g = random_test_function(2 + 2 * (s % 3), s, "real-even-meanzero")
        return [
            decomposition_check(h, cfg),
            trilinear_gpart_check(g, cfg, get_sequence_cache()),
        ]

    def build():
        records = map_seeds(per_seed, chosen, settings.workers)
        records += map_seeds(cross_checks, chosen[:CROSS_CHECK_SEEDS], settings.workers)
        return records

    return run_suite("thm7", settings, build, chosen)


@register_command(SUITE_GROUP, "local-cs")
def verify_local(settings: Settings, seeds: Optional[int] = None, seed: int = 0) -> CommandResponse:
    """Local extremizer and Psi checks around the constant function."""
    cfg = settings.quad_config()
    chosen = seed_list(seed, DEFAULT_SEEDS["local-cs"] if seeds is None else seeds)

    def per_seed(s: int) -> List[VerificationRecord]:
        g = random_test_function(2 + 2 * (s % 2), s, "real-meanzero")
        records = [local_extremizer_check(g, cfg=cfg), local_psi_check(g, cfg=cfg)]
        if s - seed < CROSS_CHECK_SEEDS:
            records += [psi_expansion_check(g, cfg, get_sequence_cache()), evaluation_e_check(g, cfg)]
        return records

    return run_suite("local-cs", settings, lambda: map_seeds(per_seed, chosen, settings.workers), chosen)


@register_command(SUITE_GROUP, "geometry")
def verify_geometry(settings: Settings, seeds: Optional[int] = None, seed: int = 0) -> CommandResponse:
    """
    Geometric identity on random real even f, spectral against direct route
    on random real f, Phi invariances and monotonicity, and the convolution
    formulas.
    """
    cfg = settings.quad_config()
    count = DEFAULT_SEEDS["geometry"] if seeds is None else seeds
    chosen = seed_list(seed, count)
    dual = seed_list(seed, DEFAULT_SEEDS["dual_route"] if seeds is None else seeds)

    def identity(s: int) -> List[VerificationRecord]:
        f = random_test_function(2 + 2 * (s % 4), s, "real-even")
        return [geometric_identity_check(f, cfg), plancherel_check(f)]

    def dual_route(s: int) -> List[VerificationRecord]:
        f = random_test_function(2 + 2 * (s % 4), s, "real")
        return [dual_route_check(f, cfg=cfg, radial_cut=settings.radial_cut)]

    def build():
        records = map_seeds(identity, chosen, settings.workers)
        records += map_seeds(dual_route, dual, settings.workers)
        if chosen:
            f = random_test_function(2, seed, "real")
            records += [
                invariance_check(f, cfg=cfg, workers=settings.workers),
                monotonicity_chain_check(f, cfg, settings.grid_size, settings.workers),
            ]
        records += [
            sigma2_oracle_check(),
            sigma3_oracle_check(),
            convolution_mass_check(),
            log_ratio_check(),
        ]
        return records

    return run_suite("geometry", settings, build, chosen)


@register_command(SUITE_GROUP, "budget")
def verify_budget(settings: Settings, seeds: Optional[int] = None, seed: int = 0) -> CommandResponse:
    """Bracket constant, Hardy quotient and the budget on random h."""
    chosen = seed_list(seed, DEFAULT_SEEDS["budget"] if seeds is None else seeds)

    def per_seed(s: int) -> List[VerificationRecord]:
        h = random_test_function(2 + 2 * (s % 10), s, "nonneg-antipodal")
        return [spectral_budget_check(h, get_sequence_cache())]

    def build():
        records = [bracket_check(), hardy_check(trials=100, seed=seed)]
        return records + map_seeds(per_seed, chosen, settings.workers)

    return run_suite("budget", settings, build, chosen)


@register_command(SUITE_GROUP, "all")
def verify_all(settings: Settings, seeds: Optional[int] = None, seed: int = 0) -> CommandResponse:
    """Every other suite in registration order, concatenated."""
    start = time.perf_counter()
    records: List[VerificationRecord] = []
    used: List[int] = []
    with logfire.span("verify.all"):
        for name, suite in get_group_commands(SUITE_GROUP).items():
            if name == "all":
                continue
            response = suite(settings, seeds, seed)
            if not response.is_success:
                return CommandResponse(is_success=False, result=None, error=f"{name}: {response.error}")
            records += response.result.records
            used = sorted(set(used) | set(response.result.seeds))

    report = VerificationReport(
        suite="all",
        records=records,
        config_digest=settings.digest(),
        wall_clock=round(time.perf_counter() - start, 3),
        seeds=used,
    )
    return CommandResponse(is_success=True, result=report)


def suite_names() -> List[str]:
    return list(get_group_commands(SUITE_GROUP))


def resolve_suite(name: str) -> str:
    """Registered suite name for ``name`` or one of its aliases."""
    return SUITE_ALIASES.get(name, name)
