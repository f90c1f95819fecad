"""
Symmetrizations used to reduce to nonnegative antipodal functions.

|f| and f_sharp are not trigonometric polynomials; both are represented by
their interpolant on an equispaced grid, truncated to a quarter of the grid,
with the discarded L^2 mass reported in ``residual``.
"""

import logging
from typing import Optional

import numpy as np

from circle_restriction.circfun.models import TrigPoly
from circle_restriction.errors import InvalidInputError

logger = logging.getLogger(__name__)


def default_grid_size(f: TrigPoly) -> int:
    """Smallest power of two >= 8 (degree + 1)."""
    return 1 << max(3, int(np.ceil(np.log2(8 * (f.degree + 1)))))


def _check_grid(f: TrigPoly, grid_size: Optional[int]) -> int:
    if grid_size is None:
        return default_grid_size(f)
    if grid_size < 8 * (f.degree + 1) or grid_size & (grid_size - 1):
        raise InvalidInputError(
            f"grid_size must be a power of two >= {8 * (f.degree + 1)}, got {grid_size}"
        )
    return grid_size


def antipodal_rearrangement(f: TrigPoly, grid_size: Optional[int] = None) -> TrigPoly:
    """
    f_sharp = sqrt((|f|^2 + |f_star|^2) / 2) as a grid interpolant.

    The result is nonnegative on the grid, has only even frequencies (up to
    rounding) and the same L^2 norm as f up to ``residual``.

    Args:
        f: Input polynomial
        grid_size: Power of two >= 8 (degree + 1); default the smallest one

    Returns:
        TrigPoly with bandwidth grid_size / 4
    """
    grid_size = _check_grid(f, grid_size)
    values = np.abs(f.sample(grid_size)) ** 2
    reflected = np.abs(f.conj_reflect().sample(grid_size)) ** 2
    sharp = np.sqrt((values + reflected) / 2)

    result = TrigPoly.from_samples(sharp, bandwidth=grid_size // 4)
    logger.debug(f"f_sharp on {grid_size} points, residual {result.residual:.2e}")
    return result


def modulus_interpolant(f: TrigPoly, grid_size: Optional[int] = None) -> TrigPoly:
    """|f| as a grid interpolant with bandwidth grid_size / 4."""
    grid_size = _check_grid(f, grid_size)
    return TrigPoly.from_samples(np.abs(f.sample(grid_size)), bandwidth=grid_size // 4)
