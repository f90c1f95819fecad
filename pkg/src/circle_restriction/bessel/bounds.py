"""Explicit envelope bounds for |J_n| used by the tail estimates."""

import numpy as np
from scipy import special

from circle_restriction.bessel.bessel_j import ArrayLike, _as_output, _check_radius
from circle_restriction.errors import InvalidInputError


def envelope_bound(n: int, r: ArrayLike) -> ArrayLike:
    """
    Upper bound for |J_n(r)|: min(r^(-1/3), r^n / (2^n n!)).

    Args:
        n: Nonnegative integer order
        r: Positive radius, scalar or array

    Returns:
        The bound, same shape as r

    Raises:
        InvalidInputError: If n < 0 or r <= 0

    Example:
        >>> envelope_bound(0, 8.0)
        0.5
    """
    n = int(n)
    if n < 0:
        raise InvalidInputError(f"envelope bound needs n >= 0, got {n}")
    radius = _check_radius(r, strictly_positive=True)

    decay = radius ** (-1.0 / 3.0)
    # log form keeps r^n / (2^n n!) finite for large n
    small_argument = np.exp(n * np.log(radius / 2.0) - special.gammaln(n + 1.0))
    return _as_output(np.minimum(decay, small_argument), r)
