"""
Pointwise checks of the companion asymptotic bounds.

Each check evaluates the sequences with certified errors and decides with the
error band on the losing side: a bound |x - a| <= b passes only when
|x.value - a| + x.abs_error <= b.
"""

import logging
import math
from typing import Dict, List, Optional

from circle_restriction.errors import InvalidInputError
from circle_restriction.model import VerificationRecord
from circle_restriction.oscint import CertifiedValue
from circle_restriction.seqtab.models import SequenceCache, get_sequence_cache
from circle_restriction.seqtab.sequences import (
    alpha,
    alpha_tilde,
    beta,
    delta,
    gamma,
    gamma_tilde,
)

logger = logging.getLogger(__name__)

_PI2 = math.pi**2


def _distance_record(
    claim: str,
    anchor: str,
    inputs: Dict,
    value: CertifiedValue,
    approximant: float,
    bound: float,
    notes: Optional[List[str]] = None,
) -> VerificationRecord:
    lhs = abs(value.value - approximant)
    margin = bound - lhs - value.abs_error
    return VerificationRecord(
        claim=claim,
        anchor=anchor,
        inputs=inputs,
        values={
            "value": value.value,
            "approximant": approximant,
            "lhs": lhs,
            "rhs": bound,
        },
        error_budget=value.abs_error,
        margin=margin,
        passed=margin >= 0,
        notes=notes or [],
    )


def _merge(claim: str, anchor: str, inputs: Dict, parts: List[VerificationRecord]) -> VerificationRecord:
    """Combine sub-records; passes iff all do, margin is the smallest."""
    return VerificationRecord(
        claim=claim,
        anchor=anchor,
        inputs=inputs,
        values={p.claim: p.values for p in parts},
        error_budget=sum(p.error_budget for p in parts),
        margin=min(p.margin for p in parts),
        passed=all(p.passed for p in parts),
        notes=[note for p in parts for note in p.notes],
    )


def _require_even(n: int, minimum: int, name: str = "n"):
    if n < minimum or n % 2:
        raise InvalidInputError(f"{name} must be even and >= {minimum}, got {n}")


def alpha_asymptotic_check(n: int, cache: Optional[SequenceCache] = None) -> VerificationRecord:
    """
    |alpha_n - 3/(4 pi^2 n) + 3/(32 pi^2 (n-1)n(n+1))| <= 1/(500 n^4), and the
    companion bound for alpha_tilde_n, for n >= 7.

    Raises:
        InvalidInputError: If n < 7
    """
    if n < 7:
        raise InvalidInputError(f"asymptotic bound holds for n >= 7, got {n}")
    cache = cache if cache is not None else get_sequence_cache()
    cubic = 3 / (32 * _PI2 * (n - 1) * n * (n + 1))
    bound = 1 / (500 * n**4)

    parts = [
        _distance_record(
            "alpha",
            "alpha_n within 1/(500 n^4) of its two-term approximant",
            {"n": n},
            alpha(n, cache),
            3 / (4 * _PI2 * n) - cubic,
            bound,
        ),
        _distance_record(
            "alpha_tilde",
            "alpha_tilde_n within 1/(500 n^4) of its two-term approximant",
            {"n": n},
            alpha_tilde(n, cache),
            1 / (4 * _PI2 * n) + cubic,
            bound,
        ),
    ]
    return _merge(
        "alpha_asymptotic",
        "two-term asymptotics of alpha_n and alpha_tilde_n with error 1/(500 n^4)",
        {"n": n},
        parts,
    )


def beta_corollary_check(n: int, cache: Optional[SequenceCache] = None) -> VerificationRecord:
    """
    |beta_n - c0/n^3| < epsilon_1 c0/n^3 for even n >= 2.

    The record's values include the relative deviation; n = 2 is flagged as
    the tightest case.
    """
    _require_even(n, 2)
    cache = cache if cache is not None else get_sequence_cache()
    leading = cache.c0 / n**3
    record = _distance_record(
        "beta_corollary",
        "beta_n = c0/n^3 up to a relative error epsilon_1 = 0.03",
        {"n": n, "epsilon_1": cache.epsilon_1},
        beta(n, cache),
        leading,
        cache.epsilon_1 * leading,
        notes=["tightest"] if n == 2 else [],
    )
    record.values["relative_deviation"] = record.values["lhs"] / leading
    # strict inequality in the claim
    record.passed = record.margin > 0
    return record


def beta_asymptotic_check(n: int, cache: Optional[SequenceCache] = None) -> VerificationRecord:
    """|beta_n - c0/((n-1)n(n+1))| <= 1/(125 n^4) for n >= 12."""
    if n < 12:
        raise InvalidInputError(f"beta asymptotics are stated for n >= 12, got {n}")
    cache = cache if cache is not None else get_sequence_cache()
    return _distance_record(
        "beta_asymptotic",
        "beta_n within 1/(125 n^4) of c0/((n-1)n(n+1))",
        {"n": n},
        beta(n, cache),
        cache.c0 / ((n - 1) * n * (n + 1)),
        1 / (125 * n**4),
    )


def gamma_asymptotic_check(
    n: int, m: int, cache: Optional[SequenceCache] = None
) -> VerificationRecord:
    """
    Companion bounds on gamma_{n,m} and gamma_tilde_{n,m}.

    m = 2, n >= 6:  two-term approximants 15/(64 pi^2 n(n+1)(n+2)) and 9/(...),
                    error 1/(500 n^4)
    m = 4, n >= 6:  1557/(1024 pi^2 n(n+1)...(n+4)) and 855/(...), error 3/(2000 n^4)
    n >= m >= 6:    |gamma|, |gamma_tilde| <= 3/(2000 n^4)

    Raises:
        InvalidInputError: Outside these ranges or odd indices
    """
    _require_even(n, 6)
    _require_even(m, 2, "m")
    if m > n:
        raise InvalidInputError(f"need n >= m, got n={n}, m={m}")
    cache = cache if cache is not None else get_sequence_cache()
    inputs = {"n": n, "m": m}

    if m == 2:
        denominator = 64 * _PI2 * n * (n + 1) * (n + 2)
        approximants, bound, case = (15 / denominator, 9 / denominator), 1 / (500 * n**4), "m=2"
    elif m == 4:
        denominator = 1024 * _PI2 * math.prod(range(n, n + 5))
        approximants, bound, case = (1557 / denominator, 855 / denominator), 3 / (2000 * n**4), "m=4"
    else:
        approximants, bound, case = (0.0, 0.0), 3 / (2000 * n**4), "m>=6"

    parts = [
        _distance_record("gamma", f"gamma case {case}", inputs, gamma(n, m, cache), approximants[0], bound),
        _distance_record(
            "gamma_tilde", f"gamma_tilde case {case}", inputs, gamma_tilde(n, m, cache), approximants[1], bound
        ),
    ]
    record = _merge("gamma_asymptotic", f"companion bounds on gamma_(n,m), case {case}", inputs, parts)
    record.notes.append(case)
    return record


def delta_corollary_check(
    n: int, m: int, cache: Optional[SequenceCache] = None
) -> VerificationRecord:
    """
    The three cases of the delta_{n,m} bounds.

    (i)   m = 2, n >= 2:  |delta| <= (1 + epsilon_2) c0 / (2 n^1.5 (n+2)^1.5)
    (ii)  m = 4, n >= 4:  |delta - 21 c0/(8 n(n+1)...(n+4))| <= gamma_3 c0/(8 n^4)
    (iii) n >= m >= 6:    |delta| <= gamma_3 c0/(8 n^4)
    """
    _require_even(m, 2, "m")
    _require_even(n, m)
    cache = cache if cache is not None else get_sequence_cache()
    value = delta(n, m, cache)
    inputs = {"n": n, "m": m}

    if m == 2:
        bound = (1 + cache.epsilon_2) * cache.c0 / (2 * n**1.5 * (n + 2) ** 1.5)
        return _distance_record(
            "delta_corollary",
            "case (i): |delta_(n,2)| <= (1 + epsilon_2) c0 / (2 n^(3/2) (n+2)^(3/2))",
            inputs,
            value,
            0.0,
            bound,
            notes=["case (i)"] + (["tightest"] if n == 2 else []),
        )
    if m == 4:
        center = 21 * cache.c0 / (8 * math.prod(range(n, n + 5)))
        return _distance_record(
            "delta_corollary",
            "case (ii): delta_(n,4) within gamma_3 c0/(8 n^4) of 21 c0/(8 n(n+1)...(n+4))",
            inputs,
            value,
            center,
            cache.gamma_3 * cache.c0 / (8 * n**4),
            notes=["case (ii)"],
        )
    return _distance_record(
        "delta_corollary",
        "case (iii): |delta_(n,m)| <= gamma_3 c0/(8 n^4)",
        inputs,
        value,
        0.0,
        cache.gamma_3 * cache.c0 / (8 * n**4),
        notes=["case (iii)"],
    )


def alpha_one_identity_check(cache: Optional[SequenceCache] = None) -> VerificationRecord:
    """|5 alpha_1 - alpha_0| within the combined error."""
    cache = cache if cache is not None else get_sequence_cache()
    difference = 5 * alpha(1, cache) - alpha(0, cache)
    # an exact identity is confirmed up to the error band and rounding of the table
    margin = difference.abs_error - abs(difference.value)
    return VerificationRecord(
        claim="alpha_one_identity",
        anchor="5 alpha_1 = alpha_0",
        inputs={},
        values={"five_alpha_1": 5 * alpha(1, cache).value, "alpha_0": alpha(0, cache).value},
        error_budget=difference.abs_error,
        margin=margin,
        passed=margin >= 0,
    )


def sequence_invariants_check(
    n_max: int = 10, pair_max: int = 10, cache: Optional[SequenceCache] = None
) -> VerificationRecord:
    """
    Sign and ordering invariants of the cached sequences.

    beta_0 < 0, beta_n > 0 for even n >= 2, alpha_n strictly decreasing for
    0 <= n <= n_max and gamma_{n,m} > 0 for even 2 <= m <= n <= pair_max, each
    resolved outside the error band. beta and delta are defined as the
    combinations 3 alpha_tilde - alpha and 3 gamma_tilde - gamma, and the pair
    sequences are stored under a canonical (n >= m) key, so neither the
    linear identities nor the symmetry are checked here.
    """
    cache = cache if cache is not None else get_sequence_cache()
    failures: List[str] = []
    budget = 0.0
    margin = math.inf

    def tally(name: str, slack: float, error: float):
        nonlocal budget, margin
        budget += error
        margin = min(margin, slack)
        if slack < 0:
            failures.append(name)

    for n in range(1, n_max + 1):
        previous, current = alpha(n - 1, cache), alpha(n, cache)
        tally(f"alpha_{n} < alpha_{n - 1}", previous.lower - current.upper, current.abs_error)

    for n in range(2, pair_max + 1, 2):
        for m in range(2, n + 1, 2):
            g = gamma(n, m, cache)
            tally(f"gamma_{n},{m} > 0", g.lower, g.abs_error)

    b0 = beta(0, cache)
    tally("beta_0 < 0", -b0.upper, b0.abs_error)
    for n in range(2, n_max + 1, 2):
        b = beta(n, cache)
        tally(f"beta_{n} > 0", b.lower, b.abs_error)

    if failures:
        logger.warning(f"sequence invariants failed: {failures}")
    return VerificationRecord(
        claim="sequence_invariants",
        anchor="signs and ordering of the named sequences",
        inputs={"n_max": n_max, "pair_max": pair_max},
        values={"failures": failures},
        error_budget=budget,
        margin=margin,
        passed=not failures,
    )
