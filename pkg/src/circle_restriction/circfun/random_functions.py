"""Seeded random test functions for the Monte-Carlo suites."""

import math
from typing import Dict

import numpy as np

from circle_restriction.circfun.models import TrigPoly
from circle_restriction.errors import InvalidInputError

MAX_RANDOM_DEGREE = 64
NONNEGATIVE_FLOOR = 0.01

RANDOM_KINDS = (
    "nonneg-antipodal",
    "real-meanzero",
    "real",
    "real-even",
    "real-even-meanzero",
)


def _real_coefficients(rng: np.random.Generator, frequencies) -> Dict[int, complex]:
    coeffs: Dict[int, complex] = {}
    for n in frequencies:
        if n == 0:
            coeffs[0] = complex(rng.normal())
        else:
            c = complex(rng.normal(), rng.normal()) / math.sqrt(2)
            coeffs[n] = c
            coeffs[-n] = c.conjugate()
    return coeffs


def random_test_function(degree: int, seed: int, kind: str = "real") -> TrigPoly:
    """
    Deterministic random trigonometric polynomial.

    Kinds:
        nonneg-antipodal:    h = |g|^2 + floor with g supported on one parity
                             class, so h >= floor > 0 and only even
                             frequencies occur; normalized to mean 1
        real:                real f, ||f||_2 = 1
        real-meanzero:       real g, g^(0) = 0, ||g||_2 = 1
        real-even:           real, even frequencies only, ||f||_2 = 1
        real-even-meanzero:  as real-even with zero mean

    Args:
        degree: Even degree, 0 <= degree <= 64
        seed: Seed for ``np.random.default_rng``
        kind: One of RANDOM_KINDS

    Raises:
        InvalidInputError: Odd or out-of-range degree, unknown kind, or a
            mean-zero kind with degree 0
    """
    if degree < 0 or degree % 2 or degree > MAX_RANDOM_DEGREE:
        raise InvalidInputError(f"degree must be even in [0, {MAX_RANDOM_DEGREE}], got {degree}")
    if kind not in RANDOM_KINDS:
        raise InvalidInputError(f"unknown kind {kind!r}; expected one of {RANDOM_KINDS}")
    if kind.endswith("meanzero") and degree == 0:
        raise InvalidInputError("a mean-zero function needs degree >= 2")

    rng = np.random.default_rng(seed)

    if kind == "nonneg-antipodal":
        half = degree // 2
        frequencies = range(-half, half + 1, 2)
        g = TrigPoly.from_coeffs({n: complex(rng.normal(), rng.normal()) for n in frequencies})
        h = g * g.conj() + NONNEGATIVE_FLOOR
        return h / h.mean.real

    step = 2 if "even" in kind else 1
    start = step if kind.endswith("meanzero") else 0
    coeffs = _real_coefficients(rng, range(start, degree + 1, step))
    f = TrigPoly.from_coeffs(coeffs)
    return f / f.l2_norm()
