"""
Multilinear forms on (S^1)^6 through lattice sums of sixfold integrals.

    F(f_1..f_6)        = int prod f_j(omega_j) d Sigma
                       = (2 pi)^5 sum_{n_1+..+n_6=0} prod f_j^(n_j) I_{n_1..n_6}
    W(f_1..f_6)        = int prod f_j (|omega_4 + omega_5 + omega_6|^2 - 1) d Sigma
    T(h_1, h_2, h_3)   = W(h_1, h_2, h_3, 1, 1, 1)
    C(f)               = W(f, f, f, f, f, f)
    Psi(f)             = 2 [T(f^2, f^2, f^2) - C(f)]

The weight is 2(1 + omega_4.omega_5 + omega_5.omega_6 + omega_6.omega_4) and
omega_a.omega_b = (e_1(omega_a) e_-1(omega_b) + e_-1(omega_a) e_1(omega_b)) / 2,
so every weighted form is a combination of plain ones with shifted inputs.
"""

import logging
import math
from typing import Optional, Sequence

from circle_restriction.circfun.models import TrigPoly
from circle_restriction.errors import InvalidInputError, PreconditionError, RefusedError
from circle_restriction.oscint import CertifiedValue, QuadConfig, certified_sum, lattice_sum
from circle_restriction.seqtab.models import SequenceCache
from circle_restriction.seqtab.sequences import delta

logger = logging.getLogger(__name__)

MAX_DEGREE_SUM = 96
FORM_SCALE = (2 * math.pi) ** 5
WEIGHT_PAIRS = ((3, 4), (4, 5), (5, 3))

_ONE = TrigPoly.constant(1.0)


def _check_degrees(polys: Sequence[TrigPoly]):
    if len(polys) != 6:
        raise InvalidInputError(f"expected six functions, got {len(polys)}")
    total = sum(p.degree for p in polys)
    if total > MAX_DEGREE_SUM:
        raise RefusedError(f"sum of degrees {total} above {MAX_DEGREE_SUM}")


def _plain_form(polys: Sequence[TrigPoly], cfg: Optional[QuadConfig], workers: int) -> CertifiedValue:
    real, imag = lattice_sum([p.coeffs for p in polys], cfg, workers)
    if abs(imag.value) > imag.abs_error + 1e-12 * abs(real.value):
        logger.warning(f"form has imaginary part {imag.value:.3e}; only the real part is returned")
    return real * FORM_SCALE


def sixfold_form(
    *polys: TrigPoly, cfg: Optional[QuadConfig] = None, workers: int = 1
) -> CertifiedValue:
    """
    int_{(S^1)^6} f_1(omega_1) ... f_6(omega_6) d Sigma.

    Args:
        *polys: Six TrigPolys
        cfg: Quadrature settings for the integrals
        workers: Threads for missing integrals

    Returns:
        The real part as a CertifiedValue (real for conjugate-symmetric inputs)

    Raises:
        RefusedError: If the degrees add up to more than 96
    """
    _check_degrees(polys)
    return _plain_form(polys, cfg, workers)


def dot_form(
    polys: Sequence[TrigPoly],
    a: int,
    b: int,
    cfg: Optional[QuadConfig] = None,
    workers: int = 1,
) -> CertifiedValue:
    """int prod f_j (omega_a . omega_b) d Sigma, with 0-based slots a != b."""
    _check_degrees(polys)
    if a == b or not (0 <= a < 6 and 0 <= b < 6):
        raise InvalidInputError(f"slots must be distinct in 0..5, got {a}, {b}")
    total = CertifiedValue.exact(0.0)
    for k in (1, -1):
        shifted = list(polys)
        shifted[a] = polys[a].shift(k)
        shifted[b] = polys[b].shift(-k)
        total = total + _plain_form(shifted, cfg, workers)
    return total * 0.5


def weighted_form(
    *polys: TrigPoly, cfg: Optional[QuadConfig] = None, workers: int = 1
) -> CertifiedValue:
    """
    int prod f_j(omega_j) (|omega_4 + omega_5 + omega_6|^2 - 1) d Sigma.

    Raises:
        RefusedError: If the degrees add up to more than 96
    """
    _check_degrees(polys)
    parts = [_plain_form(polys, cfg, workers)]
    parts += [dot_form(polys, a, b, cfg, workers) for a, b in WEIGHT_PAIRS]
    return certified_sum(parts) * 2


def trilinear_T(
    h1: TrigPoly, h2: TrigPoly, h3: TrigPoly, cfg: Optional[QuadConfig] = None, workers: int = 1
) -> CertifiedValue:
    """
    T(h_1, h_2, h_3) = int h_1 h_2 h_3 (|omega_4 + omega_5 + omega_6|^2 - 1) d Sigma.

    Example:
        >>> trilinear_T(one, one, one).value    # -2 (2 pi)^5 beta_0
        2638.8...
    """
    return weighted_form(h1, h2, h3, _ONE, _ONE, _ONE, cfg=cfg, workers=workers)


def cubic_form(f: TrigPoly, cfg: Optional[QuadConfig] = None, workers: int = 1) -> CertifiedValue:
    """C(f) = int f(omega_1) ... f(omega_6) (|omega_4 + omega_5 + omega_6|^2 - 1) d Sigma."""
    return weighted_form(*([f] * 6), cfg=cfg, workers=workers)


def psi(f: TrigPoly, cfg: Optional[QuadConfig] = None, workers: int = 1) -> CertifiedValue:
    """
    Psi(f) = int (f_1 f_2 f_3 - f_4 f_5 f_6)^2 (|omega_4 + omega_5 + omega_6|^2 - 1) d Sigma.

    Evaluated as 2 [T(f^2, f^2, f^2) - C(f)].

    Raises:
        InvalidInputError: If f is not real
    """
    if not f.is_real():
        raise InvalidInputError("Psi is defined for real f")
    square = f * f
    return (trilinear_T(square, square, square, cfg, workers) - cubic_form(f, cfg, workers)) * 2


def _require_even_real_meanzero(g: TrigPoly, tol: float = 1e-12):
    if abs(g.mean) > tol:
        raise PreconditionError(f"g must have mean zero, got g^(0) = {g.mean}")
    if not g.is_antipodal(tol):
        raise PreconditionError("g must have even frequencies only")
    if not g.is_real(tol):
        raise PreconditionError("g must be real")


def _delta_index(n: int, m: int) -> tuple:
    """delta for signed even (n, m): the two smaller of |n|, |m|, |n + m|."""
    small = sorted((abs(n), abs(m), abs(n + m)))
    return small[1], small[0]


def trilinear_T_spectral_gpart(
    g: TrigPoly, cache: Optional[SequenceCache] = None
) -> CertifiedValue:
    """
    T(g, g, g) = -2 (2 pi)^5 sum_{n, m} g^(n) g^(m) conj(g^(n+m)) delta_{n,m}.

    For even frequencies all parity signs are +1, so the integral attached
    to (n, m, -(n+m)) only depends on the unsigned triple, which always has
    the shape (p, q, p + q).

    Raises:
        PreconditionError: If g is not real, even and mean-zero
    """
    _require_even_real_meanzero(g)
    coeffs = g.coeffs
    total = CertifiedValue.exact(0.0)
    for n, a in g.terms:
        for m, b in g.terms:
            c = coeffs.get(n + m)
            if c is None:
                continue
            weight = (a * b * c.conjugate()).real
            if weight:
                total = total + delta(*_delta_index(n, m), cache) * weight
    return total * (-2 * FORM_SCALE)
