"""
Analytic tails of sixfold Bessel integrals.

On [R, inf) each factor is written in Hankel form

    J_n(r) = sqrt(2/(pi r)) * (Re[A_n(t) exp(i(r - theta_n))] + rho_n(r)),

with t = R/r, A_n(t) = sum_{j < 2l} b_j (i t)^j and |rho_n| bounded by the
first neglected terms. Multiplying six factors gives a Laurent polynomial in
exp(ir) whose coefficients are polynomials in t. Every monomial integrates in
closed form,

    int_R^inf r^-2 t^j exp(ikr) dr = E_{2+j}(-ikR) / R,

so nothing oscillatory is left to quadrature. The remainder bound multiplies
out the envelopes of kept and neglected parts.
"""

import logging
from functools import lru_cache
from typing import Tuple

import mpmath
import numpy as np
from scipy import signal

from circle_restriction.bessel import hankel_coefficients
from circle_restriction.errors import InvalidInputError
from circle_restriction.oscint.models import CertifiedValue, OrderTuple

logger = logging.getLogger(__name__)

_EPS = np.finfo(float).eps
_PREFACTOR = (2.0 / np.pi) ** 3
# polynomial columns below this (relative) size are dropped and bounded instead
_COLUMN_CUTOFF = 1e-30
EXPINT_DPS = 30


def amplitude_terms(n: int, tail_order: int) -> int:
    """Number l of terms kept in each of the P and Q Hankel sums."""
    return n + tail_order + 2


@lru_cache(maxsize=1024)
def hankel_factor(n: int, R: float, tail_order: int) -> Tuple[np.ndarray, float, float]:
    """
    Scaled Hankel amplitude of J_n on [R, inf).

    Returns:
        (coefficients of A_n(t) as complex array, envelope M = sum |b_j|,
         remainder bound e = |b_2l| + |b_2l+1|), all for t in (0, 1]
    """
    terms = amplitude_terms(n, tail_order)
    b = hankel_coefficients(n, 2 * terms + 2, scale=R)
    kept = b[: 2 * terms]
    powers = np.array([1, 1j, -1, -1j])[np.arange(2 * terms) % 4]
    amplitude = kept * powers
    amplitude.setflags(write=False)
    return amplitude, float(np.abs(kept).sum()), float(abs(b[2 * terms]) + abs(b[2 * terms + 1]))


@lru_cache(maxsize=None)
def scaled_expint(p: int, k: int, R: float) -> complex:
    """
    E_p(-ikR), i.e. int_1^inf s^-p exp(ikRs) ds, for integer p >= 2.

    k = 0 gives 1/(p-1). Evaluated with mpmath at EXPINT_DPS digits.
    """
    if k == 0:
        return 1.0 / (p - 1)
    if k < 0:
        return scaled_expint(p, -k, R).conjugate()
    with mpmath.workdps(EXPINT_DPS):
        value = mpmath.expint(p, mpmath.mpc(0, -k * mpmath.mpf(R)))
        return complex(value)


def laurent_product(orders: Tuple[int, ...], R: float, tail_order: int) -> Tuple[np.ndarray, float, float]:
    """
    Expand prod_i Re[A_i(t) exp(i(r - theta_i))] as a Laurent polynomial.

    Returns:
        (coefficients L of shape (2m+1, degree+1) where row k+m multiplies
         exp(ikr) and column j multiplies t^j, product of envelopes,
         product of envelopes-plus-remainders)
    """
    laurent = np.ones((1, 1), dtype=complex)
    envelope, padded = 1.0, 1.0
    for n in orders:
        amplitude, bound, remainder = hankel_factor(n, R, tail_order)
        theta = n * np.pi / 2 + np.pi / 4
        kernel = np.zeros((3, amplitude.size), dtype=complex)
        kernel[0] = 0.5 * np.exp(1j * theta) * amplitude.conj()
        kernel[2] = 0.5 * np.exp(-1j * theta) * amplitude
        laurent = signal.convolve2d(laurent, kernel)
        envelope *= bound
        padded *= bound + remainder
    return laurent, envelope, padded


def tail_bound(t: OrderTuple, R: float, order: int = 2) -> CertifiedValue:
    """
    Certified value of the integral of the six-Bessel product over [R, inf).

    DC terms are integrated in closed form and oscillatory terms exactly via
    generalized exponential integrals; the abs_error collects the Hankel
    remainders, dropped negligible columns and rounding.

    Args:
        t: Canonical order tuple (sign applied to the result)
        R: Lower limit, R >= 20
        order: Asymptotic correction order (1, 2 or 3)

    Returns:
        CertifiedValue for sign * integral_R^inf prod J_{n_i}(r) r dr

    Raises:
        InvalidInputError: If R < 20 or order not in {1, 2, 3}
    """
    if not np.isfinite(R) or R < 20:
        raise InvalidInputError(f"tail radius must be >= 20, got {R}")
    if order not in (1, 2, 3):
        raise InvalidInputError(f"tail order must be 1, 2 or 3, got {order}")

    R = float(R)
    laurent, envelope, padded = laurent_product(t.orders, R, order)
    rows, columns = laurent.shape
    m = (rows - 1) // 2

    column_size = np.abs(laurent).max(axis=0)
    scale = float(column_size.max())
    keep = np.nonzero(column_size > _COLUMN_CUTOFF * scale)[0]
    last = int(keep[-1]) + 1 if keep.size else 1
    dropped = sum(float(np.abs(laurent[:, j]).sum()) / (1 + j) for j in range(last, columns))

    total = 0.0 + 0.0j
    magnitude = 0.0
    for row in range(rows):
        k = row - m
        coefficients = laurent[row, :last]
        if not np.any(coefficients):
            continue
        integrals = np.array([scaled_expint(2 + j, k, R) for j in range(last)])
        terms = coefficients * integrals
        total += terms.sum()
        magnitude += float(np.abs(terms).sum())

    value = _PREFACTOR * total.real / R
    remainder = _PREFACTOR * (padded - envelope) / R
    rounding = _PREFACTOR * (64 * _EPS * magnitude + dropped) / R
    if not (np.isfinite(value) and np.isfinite(remainder + rounding)):
        # expansion diverges: orders far too large for this radius
        logger.warning(f"tail {t.orders} at R={R:g}: expansion overflowed, no bound available")
        return CertifiedValue(0.0, float("inf"))
    if abs(total.imag) > 1e-8 * max(magnitude, 1e-300):
        logger.warning(f"tail {t.orders}: imaginary residue {total.imag:.3e} (expected 0)")

    result = CertifiedValue(value, remainder + rounding)
    return result if t.sign > 0 else -result
