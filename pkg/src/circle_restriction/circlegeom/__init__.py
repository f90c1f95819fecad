"""
Convolutions of arc-length measure on the unit circle.

Available functions:
- sigma2, sigma2_oracle: sigma*sigma and its intersection-point oracle
- sigma3, sigma3_oracle: sigma*sigma*sigma and its angular oracle
- convolution_mass: total mass of sigma*sigma*sigma
- log_ratio_profile, radial_profile: RadialProfile samples
- sigma2_oracle_check, sigma3_oracle_check, convolution_mass_check,
  log_ratio_check: verification records
"""

from circle_restriction.circlegeom.checks import (
    convolution_mass_check,
    log_ratio_check,
    sigma2_oracle_check,
    sigma3_oracle_check,
)
from circle_restriction.circlegeom.convolution import (
    SIGMA3_AT_ORIGIN,
    convolution_mass,
    log_ratio_profile,
    radial_profile,
    sigma2,
    sigma2_oracle,
    sigma3,
    sigma3_oracle,
)
from circle_restriction.circlegeom.models import SINGULAR_RADIUS, RadialProfile

__all__ = [
    "RadialProfile",
    "SINGULAR_RADIUS",
    "SIGMA3_AT_ORIGIN",
    "sigma2",
    "sigma2_oracle",
    "sigma3",
    "sigma3_oracle",
    "convolution_mass",
    "log_ratio_profile",
    "radial_profile",
    "sigma2_oracle_check",
    "sigma3_oracle_check",
    "convolution_mass_check",
    "log_ratio_check",
]
