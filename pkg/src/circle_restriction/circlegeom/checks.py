"""Cross-checks of the convolution formulas against independent oracles."""

import math
from typing import Iterable, Sequence

from circle_restriction.circlegeom.convolution import (
    convolution_mass,
    log_ratio_profile,
    sigma2,
    sigma2_oracle,
    sigma3,
    sigma3_oracle,
)
from circle_restriction.model import VerificationRecord

SIGMA2_RADII = (0.1, 0.5, 1.0, 1.5, 1.9)
SIGMA3_RADII = (0.0, 0.5, 1.5, 2.5)
LOG_RATIO_EPS = (1e-3, 1e-4, 1e-5)


def sigma2_oracle_check(radii: Sequence[float] = SIGMA2_RADII, tol: float = 1e-8) -> VerificationRecord:
    """Closed form of sigma*sigma against the intersection-point oracle."""
    deviations = {str(r): abs(sigma2(r) - sigma2_oracle(r)) for r in radii}
    worst = max(deviations.values())
    return VerificationRecord(
        claim="sigma2_oracle",
        anchor="sigma*sigma(x) = 4/(|x| sqrt(4 - |x|^2))",
        inputs={"radii": list(radii), "tol": tol},
        values={"deviations": deviations},
        error_budget=tol,
        margin=tol - worst,
        passed=worst <= tol,
    )


def sigma3_oracle_check(radii: Sequence[float] = SIGMA3_RADII, rel_tol: float = 1e-5) -> VerificationRecord:
    """One-dimensional formula of sigma*sigma*sigma against the angular oracle."""
    deviations = {}
    for r in radii:
        direct, oracle = sigma3(r), sigma3_oracle(r)
        deviations[str(r)] = abs(direct - oracle) / abs(oracle)
    worst = max(deviations.values())
    return VerificationRecord(
        claim="sigma3_oracle",
        anchor="sigma*sigma*sigma = int sigma*sigma(|x - omega|) d sigma_omega",
        inputs={"radii": list(radii), "rel_tol": rel_tol},
        values={"relative_deviations": deviations},
        error_budget=rel_tol,
        margin=rel_tol - worst,
        passed=worst <= rel_tol,
    )


def convolution_mass_check(rel_tol: float = 1e-3) -> VerificationRecord:
    """Total mass of sigma*sigma*sigma equals (2 pi)^3."""
    mass = convolution_mass()
    expected = (2 * math.pi) ** 3
    deviation = abs(mass.value - expected) / expected
    return VerificationRecord(
        claim="convolution_mass",
        anchor="mass of sigma*sigma*sigma is (2 pi)^3",
        inputs={"rel_tol": rel_tol},
        values={"mass": mass.value, "expected": expected, "relative_deviation": deviation},
        error_budget=mass.abs_error / expected,
        margin=rel_tol - deviation,
        passed=deviation <= rel_tol,
    )


def log_ratio_check(eps_list: Iterable[float] = LOG_RATIO_EPS, max_spread: float = 4.0) -> VerificationRecord:
    """sigma3(1 -+ eps)/|log eps| stays positive and within a bounded factor."""
    eps_list = list(eps_list)
    profile = log_ratio_profile(eps_list)
    spread = profile.ratio_spread()
    return VerificationRecord(
        claim="log_ratio",
        anchor="c <= sigma*sigma*sigma(x)/|log||x| - 1|| <= C near the ring",
        inputs={"eps": eps_list, "max_spread": max_spread},
        values={"radii": profile.radii, "ratios": profile.values, "spread": spread},
        error_budget=0.0,
        margin=max_spread - spread,
        passed=spread <= max_spread,
        notes=["empirical ratio range; c and C are not given numerically"],
    )
