"""Consistency checks for functions on the circle and the L^6 extension norm."""

import logging
import math
from typing import Optional

import numpy as np

from circle_restriction.circfun.extension import (
    DEFAULT_RADIAL_CUT,
    MAX_SPECTRAL_DEGREE,
    extension_norm6_direct,
    extension_norm6_spectral,
    phi_sixth,
)
from circle_restriction.circfun.models import TrigPoly
from circle_restriction.circfun.rearrangement import antipodal_rearrangement, modulus_interpolant
from circle_restriction.model import VerificationRecord
from circle_restriction.oscint import QuadConfig

logger = logging.getLogger(__name__)

# Phi(1), used to turn an L^2 truncation residual into a change of Phi
PHI_ONE = ((2 * math.pi) ** 4 * 0.3368280) ** (1 / 6)


def plancherel_check(f: TrigPoly, grid_size: int = 4096, tol: float = 1e-10) -> VerificationRecord:
    """2 pi sum |f^(n)|^2 against the grid quadrature of |f|^2."""
    from_coefficients = f.l2_norm() ** 2
    from_grid = 2 * math.pi * float(np.mean(np.abs(f.sample(grid_size)) ** 2))
    scale = max(from_coefficients, 1.0)
    deviation = abs(from_coefficients - from_grid) / scale
    return VerificationRecord(
        claim="plancherel",
        anchor="||f||_2^2 = 2 pi sum |f^(n)|^2",
        inputs={"f": f.to_dict(), "grid_size": grid_size},
        values={"coefficients": from_coefficients, "grid": from_grid},
        error_budget=tol,
        margin=tol - deviation,
        passed=deviation <= tol,
    )


def dual_route_check(
    f: TrigPoly,
    rel_tol: float = 1e-4,
    cfg: Optional[QuadConfig] = None,
    radial_cut: float = DEFAULT_RADIAL_CUT,
    workers: int = 1,
) -> VerificationRecord:
    """
    Spectral and direct evaluations of ||f^sigma||_6^6 agree.

    Passes when |spectral - direct| <= rel_tol * |spectral| plus both error
    bounds.
    """
    spectral = extension_norm6_spectral(f, cfg, workers)
    direct = extension_norm6_direct(f, radial_cut=radial_cut)
    allowed = rel_tol * abs(spectral.value) + spectral.abs_error + direct.abs_error
    deviation = abs(spectral.value - direct.value)
    logger.info(f"dual route: spectral {spectral}, direct {direct}")
    return VerificationRecord(
        claim="dual_route",
        anchor="spectral and planar quadrature routes to ||f^sigma||_6^6 agree",
        inputs={"f": f.to_dict(), "rel_tol": rel_tol, "radial_cut": radial_cut},
        values={
            "spectral": spectral.to_dict(),
            "direct": direct.to_dict(),
            "relative_deviation": deviation / max(abs(spectral.value), 1e-300),
        },
        error_budget=spectral.abs_error + direct.abs_error,
        margin=allowed - deviation,
        passed=deviation <= allowed,
        notes=["direct-route tail error is a next-order estimate"],
    )


def monotonicity_chain_check(
    f: TrigPoly,
    cfg: Optional[QuadConfig] = None,
    grid_size: Optional[int] = None,
    workers: int = 1,
) -> VerificationRecord:
    """
    Phi(f) <= Phi(|f|) <= Phi(f_sharp).

    |f| and f_sharp are grid interpolants truncated to the spectral degree
    limit; their L^2 residuals are converted into a tolerance on Phi with
    the constant Phi(1).
    """
    modulus = modulus_interpolant(f, grid_size)
    sharp = antipodal_rearrangement(f, grid_size)
    modulus = modulus.truncate(MAX_SPECTRAL_DEGREE)
    sharp = sharp.truncate(MAX_SPECTRAL_DEGREE)

    norm = f.l2_norm()
    values = {}
    slack = {}
    for name, g in (("f", f), ("modulus", modulus), ("sharp", sharp)):
        sixth = phi_sixth(g, cfg, workers)
        value = max(sixth.value, 0.0) ** (1 / 6)
        # d(x^(1/6)) = x^(-5/6) dx / 6
        certified = sixth.abs_error / (6 * max(sixth.value, 1e-300) ** (5 / 6))
        values[name] = value
        slack[name] = certified + 2 * PHI_ONE * g.residual / norm

    first = values["modulus"] - values["f"] + slack["f"] + slack["modulus"]
    second = values["sharp"] - values["modulus"] + slack["modulus"] + slack["sharp"]
    notes = []
    if modulus.residual or sharp.residual:
        notes.append(
            f"truncation residuals {modulus.residual:.2e} (|f|), {sharp.residual:.2e} (f_sharp)"
        )
    return VerificationRecord(
        claim="monotonicity_chain",
        anchor="Phi(f) <= Phi(|f|) <= Phi(f_sharp)",
        inputs={"f": f.to_dict(), "grid_size": grid_size},
        values={"phi": values, "slack": slack},
        error_budget=sum(slack.values()),
        margin=min(first, second),
        passed=first >= 0 and second >= 0,
        notes=notes,
    )


def invariance_check(
    f: TrigPoly,
    scale: float = 3.7,
    angle: float = 0.9,
    cfg: Optional[QuadConfig] = None,
    workers: int = 1,
) -> VerificationRecord:
    """Phi(lambda f) = Phi(f) within 1e-12 and Phi(f o R_angle) = Phi(f) within error."""
    base = phi_sixth(f, cfg, workers)
    scaled = phi_sixth(f * scale, cfg, workers)
    rotated = phi_sixth(f.rotate(angle), cfg, workers)

    scale_deviation = abs(scaled.value - base.value) / base.value
    rotation_allowed = base.abs_error + rotated.abs_error + 1e-12 * base.value
    rotation_deviation = abs(rotated.value - base.value)
    margin = min(1e-12 - scale_deviation, (rotation_allowed - rotation_deviation) / base.value)
    return VerificationRecord(
        claim="phi_invariance",
        anchor="Phi is invariant under scaling and rotation",
        inputs={"f": f.to_dict(), "scale": scale, "angle": angle},
        values={
            "phi6": base.value,
            "phi6_scaled": scaled.value,
            "phi6_rotated": rotated.value,
        },
        error_budget=rotation_allowed,
        margin=margin,
        passed=scale_deviation <= 1e-12 and rotation_deviation <= rotation_allowed,
    )
