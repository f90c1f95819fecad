"""
Functions on the unit circle and the extension transform.

Available functions:
- TrigPoly: immutable trigonometric polynomial with algebra and sampling
- antipodal_rearrangement, modulus_interpolant: f_sharp and |f| on a grid
- random_test_function: seeded test functions of several kinds
- extension_norm6_spectral, extension_norm6_direct: ||f^sigma||_6^6 two ways
- phi, phi_sixth: the restriction quotient
- read_coefficients, write_coefficients: the "n re im" file format
- plancherel_check, dual_route_check, monotonicity_chain_check,
  invariance_check: verification records
"""

from circle_restriction.circfun.checks import (
    dual_route_check,
    invariance_check,
    monotonicity_chain_check,
    plancherel_check,
)
from circle_restriction.circfun.coeff_io import (
    parse_coefficients,
    read_coefficients,
    write_coefficients,
)
from circle_restriction.circfun.extension import (
    DEFAULT_RADIAL_CUT,
    MAX_SPECTRAL_DEGREE,
    extension_norm6_direct,
    extension_norm6_spectral,
    phi,
    phi_sixth,
)
from circle_restriction.circfun.models import TrigPoly, trig_sum
from circle_restriction.circfun.random_functions import RANDOM_KINDS, random_test_function
from circle_restriction.circfun.rearrangement import (
    antipodal_rearrangement,
    default_grid_size,
    modulus_interpolant,
)

__all__ = [
    "TrigPoly",
    "trig_sum",
    "antipodal_rearrangement",
    "modulus_interpolant",
    "default_grid_size",
    "RANDOM_KINDS",
    "random_test_function",
    "DEFAULT_RADIAL_CUT",
    "MAX_SPECTRAL_DEGREE",
    "extension_norm6_spectral",
    "extension_norm6_direct",
    "phi",
    "phi_sixth",
    "parse_coefficients",
    "read_coefficients",
    "write_coefficients",
    "plancherel_check",
    "dual_route_check",
    "monotonicity_chain_check",
    "invariance_check",
]
