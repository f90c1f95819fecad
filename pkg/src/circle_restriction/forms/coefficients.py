"""
Sign checks on the coefficient sequences behind the local estimates.

    c_n = alpha_0 + 2 (-1)^n alpha_n - 3 alpha_tilde_0 - 12 (-1)^n alpha_tilde_n

The second-order term of Psi(1 + eps g) is 12 (2 pi)^5 sum |g^(n)|^2 c_n, and
the quadratic term of Phi(1 + eps g)^6 for even g is negative iff
5 alpha_n < alpha_0.
"""

import logging
import math
from typing import Optional

from circle_restriction.errors import InvalidInputError
from circle_restriction.model import VerificationRecord
from circle_restriction.oscint import MAX_ORDER, CertifiedValue
from circle_restriction.seqtab.checks import alpha_one_identity_check
from circle_restriction.seqtab.models import SequenceCache, get_sequence_cache
from circle_restriction.seqtab.sequences import alpha, alpha_tilde

logger = logging.getLogger(__name__)

# c_n >= (alpha_0 - 3 alpha_tilde_0) - 2 |6 alpha_tilde_n - alpha_n| > 0.134 - 0.024
CN_TAIL_FLOOR = 0.110
CN_TAIL_START = 7
ALPHA_CEILING = 1.0 / 50
ALPHA_CEILING_START = 10
MAX_DOMINANCE_INDEX = 2 * MAX_ORDER


def cn_coefficient(n: int, cache: Optional[SequenceCache] = None) -> CertifiedValue:
    """
    c_n with its certified error.

    Raises:
        InvalidInputError: Unless 1 <= n <= 256
    """
    if not 1 <= n <= MAX_ORDER:
        raise InvalidInputError(f"n must lie in [1, {MAX_ORDER}], got {n}")
    cache = cache if cache is not None else get_sequence_cache()
    sign = -1 if n % 2 else 1
    return (
        alpha(0, cache)
        + alpha(n, cache) * (2 * sign)
        - alpha_tilde(0, cache) * 3
        - alpha_tilde(n, cache) * (12 * sign)
    )


def cn_positivity_check(n: int, cache: Optional[SequenceCache] = None) -> VerificationRecord:
    """c_n - error > 0; for n >= 7 also c_n - error > 0.110."""
    value = cn_coefficient(n, cache)
    floor = CN_TAIL_FLOOR if n >= CN_TAIL_START else 0.0
    margin = value.lower - floor
    return VerificationRecord(
        claim="cn_positivity",
        anchor="c_n > 0" if not floor else "c_n > 0.134 - 0.024",
        inputs={"n": n},
        values={"c_n": value.value, "floor": floor},
        error_budget=value.abs_error,
        margin=margin,
        passed=margin > 0,
    )


def cn_sweep(n_max: int = 200, cache: Optional[SequenceCache] = None) -> VerificationRecord:
    """
    c_n positivity for 1 <= n <= n_max; the smallest c_n is reported as eta.

    The record fails when any certified lower bound is not above its floor.
    """
    cache = cache if cache is not None else get_sequence_cache()
    parts = [cn_positivity_check(n, cache) for n in range(1, n_max + 1)]
    worst = min(parts, key=lambda p: p.margin)
    eta = min(p.values["c_n"] for p in parts)
    failed = [p.inputs["n"] for p in parts if not p.passed]
    if failed:
        logger.warning(f"c_n positivity fails at n = {failed}")
    return VerificationRecord(
        claim="cn_sweep",
        anchor="c_n > eta > 0 for all n",
        inputs={"n_max": n_max},
        values={
            "eta": eta,
            "argmin": min(parts, key=lambda p: p.values["c_n"]).inputs["n"],
            "c_1": parts[0].values["c_n"],
            "c_2": parts[1].values["c_n"] if n_max >= 2 else None,
            "failed": failed,
        },
        error_budget=max(p.error_budget for p in parts),
        margin=worst.margin,
        passed=not failed,
    )


def alpha_upper_bound(n: int) -> float:
    """alpha_n <= 3/(4 pi^2 n) + 3/(32 pi^2 (n-1) n (n+1)) + 1/(500 n^4), n >= 2."""
    if n < 2:
        raise InvalidInputError(f"the bound needs n >= 2, got {n}")
    pi2 = math.pi**2
    return 3 / (4 * pi2 * n) + 3 / (32 * pi2 * (n - 1) * n * (n + 1)) + 1 / (500 * n**4)


def alpha_dominance_check(n_max: int = 400, cache: Optional[SequenceCache] = None) -> VerificationRecord:
    """
    5 alpha_n < alpha_0 for every even 2 <= n <= n_max.

    Computed alpha_n (upper end of the error band) are used up to index 256,
    the asymptotic upper bound beyond. Also checks alpha_n <= 1/50 for
    n >= 10 and the identity 5 alpha_1 = alpha_0.

    Raises:
        InvalidInputError: If n_max is odd, below 2 or above 512
    """
    if n_max < 2 or n_max % 2 or n_max > MAX_DOMINANCE_INDEX:
        raise InvalidInputError(f"n_max must be even in [2, {MAX_DOMINANCE_INDEX}], got {n_max}")
    cache = cache if cache is not None else get_sequence_cache()
    alpha_0 = alpha(0, cache)

    worst_margin = math.inf
    worst_n = None
    ceiling_margin = math.inf
    failed = []
    for n in range(2, n_max + 1, 2):
        if n <= MAX_ORDER:
            upper = alpha(n, cache).upper
        else:
            upper = alpha_upper_bound(n)
        margin = alpha_0.lower - 5 * upper
        if margin < worst_margin:
            worst_margin, worst_n = margin, n
        if margin <= 0:
            failed.append(n)
        if n >= ALPHA_CEILING_START:
            ceiling_margin = min(ceiling_margin, ALPHA_CEILING - upper)

    identity = alpha_one_identity_check(cache)
    notes = []
    if n_max > MAX_ORDER:
        notes.append(f"asymptotic upper bound used for n > {MAX_ORDER}")
    if not identity.passed:
        notes.append("5 alpha_1 = alpha_0 not confirmed within the error band")
    passed = not failed and ceiling_margin >= 0 and identity.passed
    return VerificationRecord(
        claim="alpha_dominance",
        anchor="5 alpha_n < alpha_0 for all even n != 0",
        inputs={"n_max": n_max},
        values={
            "alpha_0": alpha_0.value,
            "tightest_n": worst_n,
            "alpha_ceiling_margin": ceiling_margin if math.isfinite(ceiling_margin) else None,
            "alpha_one_identity": identity.values,
            "failed": failed,
        },
        error_budget=alpha_0.abs_error + identity.error_budget,
        margin=min(worst_margin, ceiling_margin),
        passed=passed,
        notes=notes,
    )
