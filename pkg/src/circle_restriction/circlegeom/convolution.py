"""
Autoconvolutions of arc-length measure on the unit circle.

    sigma*sigma(x)       = 4 / (r sqrt(4 - r^2)),  0 < r = |x| < 2
    sigma*sigma*sigma(x) = (4/r) int_{A(r)}^1 du / (sqrt(1-u^2)
                             sqrt(a + 1 - u) sqrt(b + 1 + u))

with a = (1-r)^2/(2r), b = (3+r)(1-r)/(2r), A(r) = -1 + max(0, -b). The
triple convolution is supported on |x| <= 3 and has a logarithmic
singularity on the ring |x| = 1.
"""

import logging
import math
from typing import Iterable, List, Tuple

import numpy as np
from scipy import integrate

from circle_restriction.circlegeom.models import SINGULAR_RADIUS, RadialProfile
from circle_restriction.errors import DomainError, InvalidInputError, NearSingularityError
from circle_restriction.oscint.models import CertifiedValue

logger = logging.getLogger(__name__)

SINGULAR_GAP = 1e-8
SMALL_RADIUS = 1e-4
SUPPORT_RADIUS = 3.0
SIGMA3_AT_ORIGIN = 8 * math.pi / math.sqrt(3)

_QUAD_OPTIONS = {"epsabs": 0.0, "epsrel": 1e-11, "limit": 400}


def _check_finite(r: float) -> float:
    r = float(r)
    if not math.isfinite(r):
        raise InvalidInputError(f"radius must be finite, got {r}")
    return r


def sigma2(r: float) -> float:
    """
    sigma*sigma at |x| = r.

    Raises:
        DomainError: If r <= 0 or r >= 2
    """
    r = _check_finite(r)
    if not 0 < r < 2:
        raise DomainError(f"sigma*sigma is evaluated on 0 < r < 2, got {r}")
    return 4.0 / (r * math.sqrt(4.0 - r * r))


def sigma2_oracle(r: float) -> float:
    """
    sigma*sigma at |x| = r from the two solutions of omega_1 + omega_2 = x.

    Each pair contributes 1/|det| of the map (theta_1, theta_2) -> omega_1 + omega_2.
    """
    r = _check_finite(r)
    if not 0 < r < 2:
        raise DomainError(f"sigma*sigma is evaluated on 0 < r < 2, got {r}")
    x = np.array([r, 0.0])
    height = math.sqrt(1.0 - r * r / 4.0)
    total = 0.0
    for side in (1.0, -1.0):
        omega_1 = x / 2 + side * np.array([0.0, height])
        omega_2 = x - omega_1
        # columns are d omega / d theta = (-sin, cos)
        tangent_1 = np.array([-omega_1[1], omega_1[0]])
        tangent_2 = np.array([-omega_2[1], omega_2[0]])
        total += 1.0 / abs(np.linalg.det(np.column_stack([tangent_1, tangent_2])))
    return total


def _breakpoints(start: float, scale: float, end: float, toward: int = 1) -> List[float]:
    """Geometric points start + toward * scale * 10^k inside the interval."""
    points = []
    step = scale
    while step < abs(end - start) / 2:
        points.append(start + toward * step)
        step *= 10
    return points


def _coefficients(r: float) -> Tuple[float, float]:
    a = (1 - r) ** 2 / (2 * r)
    b = (3 + r) * (1 - r) / (2 * r)
    return a, b


def sigma3(r: float) -> float:
    """
    sigma*sigma*sigma at |x| = r.

    With u = cos(theta) the integral becomes
    int_0^theta_A dtheta / (sqrt(a + 2 sin^2(theta/2)) sqrt(b + 2 cos^2(theta/2))).
    For r > 1 the upper endpoint is an inverse square-root singularity,
    removed by theta = theta_A - v^2.

    Args:
        r: Radius, 0 <= r

    Returns:
        The density value; 0 for r >= 3

    Raises:
        InvalidInputError: If r < 0 or not finite
        NearSingularityError: If |r - 1| < 1e-8
    """
    r = _check_finite(r)
    if r < 0:
        raise InvalidInputError(f"radius must be >= 0, got {r}")
    if r >= SUPPORT_RADIUS:
        return 0.0
    if abs(r - SINGULAR_RADIUS) < SINGULAR_GAP:
        raise NearSingularityError(f"r = {r} is within {SINGULAR_GAP:g} of the singular ring")
    if r < SMALL_RADIUS:
        return SIGMA3_AT_ORIGIN

    a, b = _coefficients(r)

    def side_a(theta):
        return math.sqrt(a + 2 * math.sin(theta / 2) ** 2)

    if r < 1:

        def integrand(theta):
            return 1.0 / (side_a(theta) * math.sqrt(b + 2 * math.cos(theta / 2) ** 2))

        points = _breakpoints(0.0, math.sqrt(a), math.pi) + _breakpoints(
            math.pi, math.sqrt(b), 0.0, toward=-1
        )
        value, abserr = integrate.quad(integrand, 0.0, math.pi, points=sorted(points) or None, **_QUAD_OPTIONS)
    else:
        theta_a = math.acos(max(-1.0, -1.0 - b))
        v_max = math.sqrt(theta_a)

        def integrand(v):
            theta = theta_a - v * v
            edge = math.sin(theta_a - v * v / 2) * np.sinc(v * v / (2 * math.pi))
            return 2.0 / (math.sqrt(edge) * side_a(theta))

        # sin(theta_a - v^2/2) is small near v = 0 when theta_a is close to pi
        near_edge = math.sqrt(max(math.pi - theta_a, 1e-300))
        near_zero = math.sqrt(a) / (2 * v_max)
        points = _breakpoints(0.0, near_edge, v_max) + _breakpoints(
            v_max, near_zero, 0.0, toward=-1
        )
        value, abserr = integrate.quad(integrand, 0.0, v_max, points=sorted(points) or None, **_QUAD_OPTIONS)

    if abserr > 1e-8 * abs(value):
        logger.warning(f"sigma3({r}): quadrature error {abserr:.2e} on value {value:.6g}")
    return 4.0 / r * value


def sigma3_oracle(r: float) -> float:
    """
    sigma*sigma*sigma at |x| = r as int_{S^1} sigma*sigma(|x - omega|) d sigma_omega.

    d^2 = r^2 + 1 - 2r cos(phi); sigma*sigma is supported where d < 2, i.e.
    cos(phi) > (r^2 - 3)/(2r). When that cut lies inside (0, pi) the inverse
    square-root edge is removed by phi = phi_max - v^2.
    """
    r = _check_finite(r)
    if r < 0:
        raise InvalidInputError(f"radius must be >= 0, got {r}")
    if r >= SUPPORT_RADIUS:
        return 0.0
    if abs(r - SINGULAR_RADIUS) < SINGULAR_GAP:
        raise NearSingularityError(f"r = {r} is within {SINGULAR_GAP:g} of the singular ring")

    def distance(phi):
        return math.sqrt(max(r * r + 1 - 2 * r * math.cos(phi), 0.0))

    cut = (r * r - 3) / (2 * r) if r > 0 else -math.inf
    if cut <= -1:
        value, _ = integrate.quad(lambda phi: sigma2(distance(phi)), 0.0, math.pi, **_QUAD_OPTIONS)
        return 2 * value

    phi_max = math.acos(cut)

    def integrand(v):
        phi = phi_max - v * v
        edge = 2 * r * math.sin(phi_max - v * v / 2) * np.sinc(v * v / (2 * math.pi))
        return 16.0 / (distance(phi) * math.sqrt(edge))

    value, _ = integrate.quad(integrand, 0.0, math.sqrt(phi_max), **_QUAD_OPTIONS)
    return value


def convolution_mass(ring_gap: float = 1e-6) -> CertifiedValue:
    """
    Total mass 2 pi int_0^3 sigma3(r) r dr, which equals (2 pi)^3.

    The band |r - 1| < ring_gap is excised; its contribution is estimated
    from the logarithmic growth A log(1/s) + B fitted at s = gap and 10 gap,
    and the estimate is also reported as its own error.
    """

    def weighted(r):
        return sigma3(r) * r

    inner, inner_err = integrate.quad(
        weighted, 0.0, 1 - ring_gap, points=_breakpoints(1.0, 10 * ring_gap, 0.0, toward=-1), limit=400
    )
    outer, outer_err = integrate.quad(
        weighted, 1 + ring_gap, SUPPORT_RADIUS, points=_breakpoints(1.0, 10 * ring_gap, 3.0), limit=400
    )

    band = 0.0
    for side in (-1, 1):
        near = sigma3(1 + side * ring_gap)
        far = sigma3(1 + side * 10 * ring_gap)
        slope = max((near - far) / math.log(10), 0.0)
        band += ring_gap * (near + slope)

    total = 2 * math.pi * (inner + outer + band)
    error = 2 * math.pi * (inner_err + outer_err + band)
    logger.debug(f"convolution mass {total:.10g} (band {2 * math.pi * band:.2e})")
    return CertifiedValue(total, error)


def log_ratio_profile(eps_list: Iterable[float]) -> RadialProfile:
    """
    sigma3(1 -+ eps) / |log eps| for each eps in [1e-7, 1e-2].

    Returns:
        RadialProfile with label "log_ratio", two radii per eps
    """
    samples = {}
    for eps in eps_list:
        eps = float(eps)
        if not 1e-7 <= eps <= 1e-2:
            raise InvalidInputError(f"eps must lie in [1e-7, 1e-2], got {eps}")
        scale = abs(math.log(eps))
        for r in (1 - eps, 1 + eps):
            samples[r] = sigma3(r) / scale
    radii = sorted(samples)
    return RadialProfile(radii, [samples[r] for r in radii], label="log_ratio")


def radial_profile(r_min: float = 0.0, r_max: float = 3.0, samples: int = 301) -> RadialProfile:
    """
    sigma3 on an equispaced grid, skipping points within 1e-8 of the ring.
    """
    if not 0 <= r_min < r_max:
        raise InvalidInputError(f"need 0 <= r_min < r_max, got {r_min}, {r_max}")
    if samples < 2:
        raise InvalidInputError(f"need at least two samples, got {samples}")
    radii = [float(r) for r in np.linspace(r_min, r_max, samples) if abs(r - SINGULAR_RADIUS) >= SINGULAR_GAP]
    notes = [] if len(radii) == samples else ["singular radius skipped"]
    return RadialProfile(radii, [sigma3(r) for r in radii], notes=notes)
