"""
Bessel functions J_n of integer order on [0, inf).

Negative orders are folded onto nonnegative ones once, here, using
J_{-n} = (-1)^n J_n; everything downstream indexes n >= 0.
"""

import logging
from typing import Union

import mpmath
import numpy as np
from scipy import special

from circle_restriction.errors import InvalidInputError

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]


def parity_sign(n: int) -> int:
    """Sign picked up when J_n is rewritten as a nonnegative order."""
    return -1 if n < 0 and n % 2 else 1


def _check_radius(r: ArrayLike, strictly_positive: bool = False) -> np.ndarray:
    values = np.asarray(r, dtype=float)
    if not np.all(np.isfinite(values)):
        raise InvalidInputError(f"radius must be finite, got {r!r}")
    if strictly_positive and np.any(values <= 0):
        raise InvalidInputError(f"radius must be positive, got {r!r}")
    if np.any(values < 0):
        raise InvalidInputError(f"radius must be nonnegative, got {r!r}")
    return values


def _as_output(values: np.ndarray, r: ArrayLike) -> ArrayLike:
    if np.ndim(r) == 0:
        return float(values)
    return values


def bessel_j(n: int, r: ArrayLike) -> ArrayLike:
    """
    Evaluate J_n(r) for integer n and r >= 0.

    Args:
        n: Integer order (any sign)
        r: Nonnegative radius, scalar or numpy array

    Returns:
        J_n(r) as float (scalar input) or ndarray

    Raises:
        InvalidInputError: If r is negative or not finite

    Example:
        >>> bessel_j(0, 0.0)
        1.0
        >>> bessel_j(-1, 2.0) == -bessel_j(1, 2.0)
        True
    """
    n = int(n)
    radius = _check_radius(r)
    values = special.jv(abs(n), radius)
    if parity_sign(n) < 0:
        values = -values
    return _as_output(values, r)


def bessel_j_mp(n: int, r: float, dps: int = 30) -> mpmath.mpf:
    """J_n(r) in extended precision (``dps`` significant digits)."""
    n = int(n)
    _check_radius(r)
    with mpmath.workdps(dps):
        value = mpmath.besselj(abs(n), mpmath.mpf(r))
        return -value if parity_sign(n) < 0 else +value


def j0_asymptotic_defect(r: ArrayLike) -> ArrayLike:
    """
    Distance of J_0 from its leading large-r cosine form.

    Returns |J_0(r) - sqrt(2/(pi r)) cos(r - pi/4)|; the classical bound
    says this is at most r^(-3/2).

    Raises:
        InvalidInputError: If r <= 0 or not finite
    """
    radius = _check_radius(r, strictly_positive=True)
    leading = np.sqrt(2.0 / (np.pi * radius)) * np.cos(radius - np.pi / 4)
    return _as_output(np.abs(special.j0(radius) - leading), r)


def hankel_coefficients(n: int, count: int, scale: float = 1.0) -> np.ndarray:
    """
    Scaled Hankel expansion coefficients a_k(n) / scale^k for k < count.

    a_k(n) = prod_{j=1..k} (4n^2 - (2j-1)^2) / (k! 8^k). With t = scale/r,
    J_n(r) ~ sqrt(2/(pi r)) Re[(sum_k i^k b_k t^k) exp(i(r - n pi/2 - pi/4))]
    where b_k are the returned values.
    """
    if count < 1:
        raise InvalidInputError(f"count must be positive, got {count}")
    mu = 4.0 * float(n) * float(n)
    coefficients = np.empty(count, dtype=float)
    coefficients[0] = 1.0
    for k in range(1, count):
        odd = 2 * k - 1
        coefficients[k] = coefficients[k - 1] * (mu - odd * odd) / (8.0 * k * scale)
    return coefficients
