"""
Multilinear forms on (S^1)^6 and the checks built on them.

Available functions:
- sixfold_form, dot_form, weighted_form: plain and weighted sixfold forms
- trilinear_T, cubic_form, psi: T, C and Psi
- trilinear_T_spectral_gpart: T(g,g,g) from the delta sequence
- cn_coefficient, cn_positivity_check, cn_sweep: second-order coefficients of Psi
- alpha_dominance_check, alpha_upper_bound: 5 alpha_n < alpha_0
- spectral_budget, bracket_constant, hardy_ratio: the trilinear bound budget
- geometric_identity_check, trilinear_maximum_check, decomposition_check,
  trilinear_gpart_check, evaluation_e_check, psi_expansion_check,
  psi_nonnegativity_check, local_extremizer_check, local_psi_check
"""

from circle_restriction.forms.budget import (
    bracket_check,
    bracket_constant,
    eta_n4,
    hardy_check,
    hardy_ratio,
    require_nonnegative_antipodal,
    spectral_budget,
    spectral_budget_check,
)
from circle_restriction.forms.checks import (
    decomposition_check,
    evaluation_e_check,
    geometric_identity_check,
    local_extremizer_check,
    local_psi_check,
    psi_expansion_check,
    psi_nonnegativity_check,
    psi_second_order,
    quadratic_model,
    trilinear_gpart_check,
    trilinear_maximum_check,
)
from circle_restriction.forms.coefficients import (
    alpha_dominance_check,
    alpha_upper_bound,
    cn_coefficient,
    cn_positivity_check,
    cn_sweep,
)
from circle_restriction.forms.models import BRACKET_CEILING, SpectralBudget
from circle_restriction.forms.spectral import (
    FORM_SCALE,
    MAX_DEGREE_SUM,
    cubic_form,
    dot_form,
    psi,
    sixfold_form,
    trilinear_T,
    trilinear_T_spectral_gpart,
    weighted_form,
)

__all__ = [
    # Models
    "SpectralBudget",
    "BRACKET_CEILING",
    "FORM_SCALE",
    "MAX_DEGREE_SUM",
    # Forms
    "sixfold_form",
    "dot_form",
    "weighted_form",
    "trilinear_T",
    "cubic_form",
    "psi",
    "trilinear_T_spectral_gpart",
    "psi_second_order",
    "quadratic_model",
    # Coefficients
    "cn_coefficient",
    "cn_positivity_check",
    "cn_sweep",
    "alpha_dominance_check",
    "alpha_upper_bound",
    # Budget
    "spectral_budget",
    "spectral_budget_check",
    "bracket_constant",
    "bracket_check",
    "eta_n4",
    "hardy_ratio",
    "hardy_check",
    "require_nonnegative_antipodal",
    # Checks
    "geometric_identity_check",
    "trilinear_maximum_check",
    "decomposition_check",
    "trilinear_gpart_check",
    "evaluation_e_check",
    "psi_expansion_check",
    "psi_nonnegativity_check",
    "local_extremizer_check",
    "local_psi_check",
]
