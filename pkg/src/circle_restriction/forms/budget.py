"""
Instance-level budget of the bound that lets the bilinear term control the
trilinear one for nonnegative antipodal h:

    |sum_{n,m >= 2 even} h^(n) h^(m) conj(h^(n+m)) delta_{n,m}|
        <= ||h^||_inf sum_{n >= 2 even} |h^(n)|^2 beta_n
"""

import logging
import math
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from circle_restriction.circfun.models import TrigPoly
from circle_restriction.errors import PreconditionError
from circle_restriction.forms.models import BRACKET_CEILING, SpectralBudget
from circle_restriction.model import VerificationRecord
from circle_restriction.oscint import CertifiedValue
from circle_restriction.seqtab.models import (
    C0,
    EPSILON_1,
    EPSILON_2,
    GAMMA_3,
    SequenceCache,
    get_sequence_cache,
)
from circle_restriction.seqtab.sequences import beta, delta

logger = logging.getLogger(__name__)

HARDY_CONSTANT = 4.0


def bracket_constant(
    epsilon_1: float = EPSILON_1, epsilon_2: float = EPSILON_2, gamma_3: float = GAMMA_3
) -> float:
    """[0.08 + (1 + eps_2) 0.486 + gamma_3 / 4] / (1 - eps_1), about 0.97367."""
    return (0.08 + (1 + epsilon_2) * 0.486 + gamma_3 / 4) / (1 - epsilon_1)


def eta_n4(n: int) -> float:
    """Main part 21 c_0 / (8 n (n+1)(n+2)(n+3)(n+4)) of delta_{n,4}."""
    return 21 * C0 / (8 * n * (n + 1) * (n + 2) * (n + 3) * (n + 4))


def hardy_ratio(sequence: Sequence[float]) -> float:
    """
    sum_n ((a_1 + ... + a_n) / n)^2 / sum_n a_n^2 for a nonnegative sequence.

    Returns 0 for an all-zero sequence.
    """
    a = np.abs(np.asarray(sequence, dtype=float))
    denominator = float(np.sum(a**2))
    if denominator == 0:
        return 0.0
    averages = np.cumsum(a) / np.arange(1, a.size + 1)
    return float(np.sum(averages**2)) / denominator


def hardy_check(trials: int = 100, length: int = 64, seed: int = 0) -> VerificationRecord:
    """Hardy quotient <= 4 on seeded random nonnegative sequences."""
    rng = np.random.default_rng(seed)
    ratios = [
        hardy_ratio(rng.exponential(size=length) * rng.random(size=length) ** 3)
        for _ in range(trials)
    ]
    worst = max(ratios, default=0.0)
    return VerificationRecord(
        claim="hardy_inequality",
        anchor="sum ((a_1 + ... + a_n)/n)^2 <= 4 sum a_n^2",
        inputs={"trials": trials, "length": length, "seed": seed},
        values={"max_ratio": worst},
        error_budget=0.0,
        margin=HARDY_CONSTANT - worst,
        passed=worst <= HARDY_CONSTANT,
    )


def bracket_check() -> VerificationRecord:
    bracket = bracket_constant()
    return VerificationRecord(
        claim="bracket_constant",
        anchor="[0.08 + (1 + eps_2)(0.486) + gamma_3/4] / (1 - eps_1) < 0.974",
        inputs={"epsilon_1": EPSILON_1, "epsilon_2": EPSILON_2, "gamma_3": GAMMA_3},
        values={"bracket": bracket},
        error_budget=0.0,
        margin=BRACKET_CEILING - bracket,
        passed=bracket < BRACKET_CEILING,
    )


def require_nonnegative_antipodal(h: TrigPoly, tol: float = 1e-12):
    """
    Raises PreconditionError unless h is real, even, nonnegative on a fine grid
    and h^(0) = max |h^(n)|.
    """
    if not h.is_antipodal(tol) or not h.is_real(tol):
        raise PreconditionError("h must be real with even frequencies only")
    scale = max(abs(h.mean), 1.0)
    grid = 1 << max(6, int(math.ceil(math.log2(64 * (h.degree + 1)))))
    if float(h.sample(grid).real.min()) < -tol * scale:
        raise PreconditionError("h takes negative values")
    largest = max((abs(c) for _, c in h.terms), default=0.0)
    if abs(h.mean) < largest - tol * scale or h.mean.real < 0:
        raise PreconditionError("h^(0) must equal ||h^||_inf for nonnegative h")


def _pair_terms(a: Dict[int, complex], cache: SequenceCache) -> Dict[Tuple[int, int], Tuple[complex, CertifiedValue]]:
    """(n, m) -> (a(n) a(m) conj a(n+m), delta_{max, min}) over n, m >= 2 with a(n+m) != 0."""
    terms = {}
    for n in a:
        for m in a:
            c = a.get(n + m)
            if c is None:
                continue
            terms[(n, m)] = (a[n] * a[m] * c.conjugate(), delta(n, m, cache))
    return terms


def spectral_budget(h: TrigPoly, cache: Optional[SequenceCache] = None) -> SpectralBudget:
    """
    Evaluate both sides of the bound and the six partial sums for one h.

    The partial sums split the index pairs (n, m) as: m = 2 (s1); n = 2,
    m > 2 (s2); the eta_{n,4} part of m = 4 (s3) and of n = 4, m > 4 (s4);
    the remainder delta - eta for min(n, m) >= 4 with m <= n (s5) and with
    m > n (s6). Together they reproduce the left-hand side exactly.

    Raises:
        PreconditionError: If h is not nonnegative antipodal
    """
    require_nonnegative_antipodal(h)
    cache = cache if cache is not None else get_sequence_cache()
    sup = h.mean.real
    a = {n: c for n, c in h.terms if n >= 2}

    terms = _pair_terms(a, cache)
    partial = [0j] * 6
    lhs_sum = 0j
    lhs_error = 0.0
    for (n, m), (weight, d) in terms.items():
        lhs_sum += weight * d.value
        lhs_error += abs(weight) * d.abs_error
        if m == 2:
            partial[0] += weight * d.value
        elif n == 2:
            partial[1] += weight * d.value
        else:
            eta = eta_n4(max(n, m)) if min(n, m) == 4 else 0.0
            if m == 4:
                partial[2] += weight * eta
            elif n == 4:
                partial[3] += weight * eta
            if m <= n:
                partial[4] += weight * (d.value - eta)
            else:
                partial[5] += weight * (d.value - eta)

    rhs = CertifiedValue.exact(0.0)
    for n, c in a.items():
        rhs = rhs + beta(n, cache) * (abs(c) ** 2)
    rhs = rhs * sup

    hardy_sequence = [
        abs(a.get(n, 0j)) * math.sqrt(max(beta(n, cache).value, 0.0))
        for n in range(4, h.degree + 1, 2)
    ]
    bracket = bracket_constant()
    s = [abs(p) for p in partial]

    notes = []
    if rhs.value > 0 and sum(s) > bracket * rhs.value:
        notes.append(f"partial sums {sum(s):.3e} exceed bracket * rhs {bracket * rhs.value:.3e}")
    logger.debug(f"budget: lhs {abs(lhs_sum):.6e}, rhs {rhs}, partial sums {s}")
    return SpectralBudget(
        *s,
        lhs=abs(lhs_sum),
        rhs=rhs.value,
        error_budget=lhs_error + rhs.abs_error,
        bracket=bracket,
        hardy_ratio=hardy_ratio(hardy_sequence),
        notes=notes,
    )


def spectral_budget_check(h: TrigPoly, cache: Optional[SequenceCache] = None) -> VerificationRecord:
    return spectral_budget(h, cache).to_record({"h": h.to_dict()})
