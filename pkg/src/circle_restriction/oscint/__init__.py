"""
Certified oscillatory integrals of six Bessel functions.

Available functions:
- sixfold_integral: I_{n1..n6} = int_0^inf prod J_{n_i}(r) r dr, cached
- head_integral: adaptive Gauss-Kronrod quadrature on [0, R]
- tail_bound: analytic tail on [R, inf) with a rigorous remainder bound
- integral_table: many integrals at once, optionally threaded
- lattice_sum: sums of integrals weighted by six coefficient maps
"""

from circle_restriction.oscint.lattice import LatticePlan, lattice_plan, lattice_sum
from circle_restriction.oscint.models import (
    MAX_ORDER,
    MAX_TOTAL_ORDER,
    SPLIT_CEILING,
    CertifiedValue,
    OrderTuple,
    QuadConfig,
    certified_sum,
)
from circle_restriction.oscint.panels import head_integral, integrate_panels
from circle_restriction.oscint.sixfold import (
    as_order_tuple,
    effective_split,
    integral_table,
    sixfold_integral,
)
from circle_restriction.oscint.tail import tail_bound

__all__ = [
    # Models
    "CertifiedValue",
    "OrderTuple",
    "QuadConfig",
    "certified_sum",
    "MAX_ORDER",
    "MAX_TOTAL_ORDER",
    "SPLIT_CEILING",
    # Integrals
    "sixfold_integral",
    "head_integral",
    "tail_bound",
    "integrate_panels",
    "integral_table",
    "as_order_tuple",
    "effective_split",
    # Lattice sums
    "LatticePlan",
    "lattice_plan",
    "lattice_sum",
]
