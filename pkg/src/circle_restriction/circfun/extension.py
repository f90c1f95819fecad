"""
The extension transform F = f^sigma and its L^6 norm.

    F(r, theta) = sum_n c_n J_n(r) exp(i n theta),  c_n = 2 pi (-i)^n f^(n)

Two independent routes to ||F||_6^6:

* spectral: (2 pi)^7 times the lattice sum of f, f, f, f_star, f_star, f_star
  against the sixfold integrals (the (-i)^n phases cancel on sum n = 0);
* direct: equispaced angular quadrature (exact for the finite bandwidth)
  and adaptive radial panels on [0, radial_cut], plus the leading and
  first-correction large-r terms of F integrated in closed form.
"""

import logging
import math
from typing import Optional

import numpy as np

from circle_restriction.bessel import bessel_j, hankel_coefficients
from circle_restriction.circfun.models import TrigPoly
from circle_restriction.errors import InvalidInputError, RefusedError
from circle_restriction.oscint import CertifiedValue, QuadConfig, integrate_panels, lattice_sum
from circle_restriction.oscint.tail import scaled_expint

logger = logging.getLogger(__name__)

MAX_SPECTRAL_DEGREE = 16
DEFAULT_RADIAL_CUT = 1000.0
_TWO_PI = 2 * math.pi
_PSI_SAMPLES = 16


def extension_norm6_spectral(
    f: TrigPoly, cfg: Optional[QuadConfig] = None, workers: int = 1
) -> CertifiedValue:
    """
    ||f^sigma||_{L^6(R^2)}^6 through sixfold integrals.

    Args:
        f: Polynomial of degree <= 16
        cfg: Quadrature settings for the integrals
        workers: Threads for missing integrals

    Returns:
        CertifiedValue, real and nonnegative up to its error

    Raises:
        RefusedError: If the degree exceeds 16
    """
    if f.degree > MAX_SPECTRAL_DEGREE:
        raise RefusedError(f"degree {f.degree} above {MAX_SPECTRAL_DEGREE} for the spectral route")
    if f.is_zero():
        return CertifiedValue.exact(0.0)

    star = f.conj_reflect()
    real, imag = lattice_sum([f.coeffs] * 3 + [star.coeffs] * 3, cfg, workers)
    if abs(imag.value) > imag.abs_error:
        logger.warning(f"norm6 imaginary residue {imag.value:.3e} exceeds its error {imag.abs_error:.1e}")
    return real * _TWO_PI**7


def _field_coefficients(f: TrigPoly):
    frequencies = np.array(f.frequencies, dtype=int)
    coefficients = np.array([c for _, c in f.terms], dtype=complex)
    return frequencies, _TWO_PI * coefficients * (-1j) ** (frequencies % 4)


def angular_points(f: TrigPoly) -> int:
    """Power of two above the angular bandwidth 6 * 2 * degree of |F|^6."""
    return 1 << max(0, int(math.ceil(math.log2(12 * f.degree + 1))))


def _far_field_tail(f: TrigPoly, R: float) -> CertifiedValue:
    """
    int_R^inf int |F|^6 dtheta r dr from the first two Hankel terms.

    With psi = r - pi/4, F = sqrt(2/(pi r)) (F0 + F1/r + ...), where
    F0 = sum c_n cos(psi - n pi/2) e_n and F1 = -sum c_n a_1(n) sin(psi - n pi/2) e_n.
    The angular integrals of |F0|^6 and 6|F0|^4 Re(F0 conj F1) are
    trigonometric polynomials of degree 6 in psi; each Fourier mode k then
    integrates exactly through E_2(-ikR)/R and E_3(-ikR)/R^2. The error is
    the size of the next order.
    """
    frequencies, c = _field_coefficients(f)
    a1 = np.array([hankel_coefficients(int(n), 2)[1] for n in frequencies])
    points = angular_points(f)
    theta = _TWO_PI * np.arange(points) / points
    modes = np.exp(1j * np.outer(frequencies, theta))
    psi = _TWO_PI * np.arange(_PSI_SAMPLES) / _PSI_SAMPLES

    phase = psi[:, None] - frequencies[None, :] * math.pi / 2
    f0 = (np.cos(phase) * c) @ modes
    f1 = -(np.sin(phase) * (c * a1)) @ modes
    weight = _TWO_PI / points
    g0 = weight * (np.abs(f0) ** 6).sum(axis=1)
    g1 = weight * (6 * np.abs(f0) ** 4 * np.real(f0 * np.conj(f1))).sum(axis=1)

    spectrum0 = np.fft.fft(g0) / _PSI_SAMPLES
    spectrum1 = np.fft.fft(g1) / _PSI_SAMPLES
    total = 0j
    for k in range(-6, 7):
        shift = complex(np.exp(-1j * k * math.pi / 4))
        total += shift * (
            spectrum0[k] * scaled_expint(2, k, R) / R
            + spectrum1[k] * scaled_expint(3, k, R) / R**2
        )

    prefactor = (2 / math.pi) ** 3
    sup = float(np.abs(c).sum())
    order = max(1.0, float(np.abs(a1).max()))
    next_order = prefactor * _TWO_PI * sup**6 * 15 * order**2 / (3 * R**3)
    return CertifiedValue(prefactor * total.real, next_order)


def extension_norm6_direct(
    f: TrigPoly,
    radial_cut: float = DEFAULT_RADIAL_CUT,
    tol: Optional[float] = None,
    max_panels: int = 400_000,
) -> CertifiedValue:
    """
    ||f^sigma||_{L^6(R^2)}^6 by direct integration of |F|^6 over the plane.

    Args:
        f: Any polynomial
        radial_cut: Head/tail boundary, >= 100
        tol: Absolute tolerance of the radial head (default 1e-12 relative
            to 2 pi (sum |c_n|)^6)
        max_panels: Panel budget of the radial head

    Returns:
        CertifiedValue; the tail part of the error is a next-order estimate

    Raises:
        InvalidInputError: If radial_cut < 100
    """
    if not math.isfinite(radial_cut) or radial_cut < 100:
        raise InvalidInputError(f"radial_cut must be >= 100, got {radial_cut}")
    if f.is_zero():
        return CertifiedValue.exact(0.0)

    frequencies, c = _field_coefficients(f)
    points = angular_points(f)
    theta = _TWO_PI * np.arange(points) / points
    modes = np.exp(1j * np.outer(frequencies, theta))
    weight = _TWO_PI / points
    if tol is None:
        tol = 1e-12 * _TWO_PI * float(np.abs(c).sum()) ** 6

    def integrand(r: np.ndarray) -> np.ndarray:
        bessel = np.stack([bessel_j(int(n), r) for n in frequencies], axis=-1)
        field = (bessel * c) @ modes
        return r * weight * (np.abs(field) ** 6).sum(axis=-1)

    edges = np.linspace(0.0, radial_cut, int(math.ceil(2 * radial_cut)) + 1)
    head = integrate_panels(integrand, edges, tol, max_panels)
    tail = _far_field_tail(f, radial_cut)
    logger.debug(f"direct norm6: head {head}, tail {tail}, {points} angles")
    return head + tail


def phi_sixth(f: TrigPoly, cfg: Optional[QuadConfig] = None, workers: int = 1) -> CertifiedValue:
    """Phi(f)^6 = ||f^sigma||_6^6 / ||f||_2^6."""
    norm = f.l2_norm()
    if norm == 0:
        raise InvalidInputError("Phi is undefined for f = 0")
    return extension_norm6_spectral(f, cfg, workers) / norm**6


def phi(f: TrigPoly, cfg: Optional[QuadConfig] = None, workers: int = 1) -> float:
    """
    Phi(f) = ||f^sigma||_{L^6} / ||f||_{L^2}.

    Raises:
        InvalidInputError: If f = 0
    """
    return max(phi_sixth(f, cfg, workers).value, 0.0) ** (1 / 6)
