"""
Bessel functions of integer order.

Available functions:
- bessel_j: J_n(r), vectorized, parity handled at the interface
- bessel_j_mp: extended-precision J_n(r)
- j0_asymptotic_defect: |J_0 - leading cosine form|
- envelope_bound: min(r^(-1/3), r^n/(2^n n!))
- hankel_coefficients: scaled large-r expansion coefficients
"""

from circle_restriction.bessel.bessel_j import (
    bessel_j,
    bessel_j_mp,
    hankel_coefficients,
    j0_asymptotic_defect,
    parity_sign,
)
from circle_restriction.bessel.bounds import envelope_bound

__all__ = [
    "bessel_j",
    "bessel_j_mp",
    "envelope_bound",
    "hankel_coefficients",
    "j0_asymptotic_defect",
    "parity_sign",
]
