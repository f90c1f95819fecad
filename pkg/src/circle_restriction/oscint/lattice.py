"""
Lattice sums of sixfold integrals.

    S(a_1, ..., a_6) = sum over n_1 + ... + n_6 = 0 of
                       a_1(n_1) ... a_6(n_6) I_{n_1..n_6}

Every spectral formula (sixfold forms, the L^6 norm of the extension, the
weighted forms T, C and Psi) reduces to one of these sums over the finite
support of six coefficient maps.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Optional, Sequence, Tuple

import numpy as np

from circle_restriction.errors import InvalidInputError
from circle_restriction.oscint.models import MAX_ORDER, CertifiedValue, QuadConfig
from circle_restriction.oscint.sixfold import integral_table

logger = logging.getLogger(__name__)

_EPS = np.finfo(float).eps
_BASE = MAX_ORDER + 1

Support = Tuple[int, ...]


@dataclass(frozen=True)
class LatticePlan:
    """
    Enumerated lattice points of six supports.

    Attributes:
        index: (points, 6) positions into each sorted support
        sign: Parity sign of each point relative to its canonical tuple
        keys: Distinct canonical orders, as tuples
        inverse: For each point, its position in ``keys``
    """

    index: np.ndarray
    sign: np.ndarray
    keys: Tuple[Tuple[int, ...], ...]
    inverse: np.ndarray

    @property
    def size(self) -> int:
        return int(self.index.shape[0])


def _encode(orders: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Canonical base-257 key and parity sign for each row of signed orders."""
    negative_odd = ((orders < 0) & (orders % 2 == 1)).sum(axis=1)
    sign = np.where(negative_odd % 2, -1, 1).astype(np.int8)
    canonical = -np.sort(-np.abs(orders), axis=1)
    key = np.zeros(orders.shape[0], dtype=np.int64)
    for column in range(6):
        key = key * _BASE + canonical[:, column]
    return key, sign


def _decode(key: int) -> Tuple[int, ...]:
    digits = []
    for _ in range(6):
        key, digit = divmod(int(key), _BASE)
        digits.append(digit)
    return tuple(reversed(digits))


@lru_cache(maxsize=32)
def lattice_plan(supports: Tuple[Support, ...]) -> LatticePlan:
    """
    Enumerate all (n_1..n_6) with n_j in supports[j] and sum zero.

    The first slot is looped over; the middle four are a meshgrid; the sixth
    is solved for and kept when it lies in its support.
    """
    arrays = [np.asarray(s, dtype=np.int64) for s in supports]
    last = arrays[5]

    grids = np.meshgrid(*[np.arange(a.size) for a in arrays[1:5]], indexing="ij")
    middle_index = np.stack([g.ravel() for g in grids], axis=1)
    middle_sum = sum(arrays[j + 1][middle_index[:, j]] for j in range(4))

    chunks = []
    for i0, n0 in enumerate(arrays[0]):
        n6 = -(n0 + middle_sum)
        mask = np.isin(n6, last)
        if not mask.any():
            continue
        i6 = np.searchsorted(last, n6[mask])
        rows = np.empty((int(mask.sum()), 6), dtype=np.int32)
        rows[:, 0] = i0
        rows[:, 1:5] = middle_index[mask]
        rows[:, 5] = i6
        chunks.append(rows)

    if not chunks:
        empty = np.zeros((0, 6), dtype=np.int32)
        return LatticePlan(empty, np.zeros(0, dtype=np.int8), (), np.zeros(0, dtype=np.int64))

    index = np.concatenate(chunks)
    orders = np.stack([arrays[j][index[:, j]] for j in range(6)], axis=1)
    key, sign = _encode(orders)
    unique, inverse = np.unique(key, return_inverse=True)
    logger.debug(f"lattice plan: {index.shape[0]} points, {unique.size} distinct integrals")

    for array in (index, sign, inverse):
        array.setflags(write=False)
    return LatticePlan(index, sign, tuple(_decode(k) for k in unique), inverse)


def lattice_sum(
    coefficient_maps: Sequence[Mapping[int, complex]],
    cfg: Optional[QuadConfig] = None,
    workers: int = 1,
) -> Tuple[CertifiedValue, CertifiedValue]:
    """
    Evaluate the lattice sum of six coefficient maps.

    Args:
        coefficient_maps: Six mappings frequency -> coefficient (zero
            coefficients may be omitted)
        cfg: Quadrature settings for the integrals
        workers: Threads used to compute missing integrals

    Returns:
        (real part, imaginary part) as CertifiedValues

    Raises:
        InvalidInputError: Not six maps, or a frequency above 256
        RefusedError: A lattice point with total order above 512
    """
    if len(coefficient_maps) != 6:
        raise InvalidInputError(f"expected six coefficient maps, got {len(coefficient_maps)}")
    cfg = cfg or QuadConfig()

    supports = []
    coefficients = []
    for mapping in coefficient_maps:
        items = sorted((int(n), complex(c)) for n, c in mapping.items() if c != 0)
        if any(abs(n) > MAX_ORDER for n, _ in items):
            raise InvalidInputError(f"frequencies must satisfy |n| <= {MAX_ORDER}")
        supports.append(tuple(n for n, _ in items))
        coefficients.append(np.array([c for _, c in items], dtype=complex))

    if any(not s for s in supports):
        return CertifiedValue.exact(0.0), CertifiedValue.exact(0.0)

    plan = lattice_plan(tuple(supports))
    if plan.size == 0:
        return CertifiedValue.exact(0.0), CertifiedValue.exact(0.0)

    table = integral_table(plan.keys, cfg, workers)
    values = np.array([table[k].value for k in plan.keys])
    errors = np.array([table[k].abs_error for k in plan.keys])

    product = np.ones(plan.size, dtype=complex)
    for j in range(6):
        product *= coefficients[j][plan.index[:, j]]
    weights = product * plan.sign

    terms = weights * values[plan.inverse]
    total = terms.sum()
    magnitude = float(np.abs(terms).sum())
    rounding = (np.log2(plan.size) + 8) * _EPS * magnitude
    error = float(np.abs(weights) @ errors[plan.inverse]) + rounding

    return CertifiedValue(float(total.real), error), CertifiedValue(float(total.imag), error)
