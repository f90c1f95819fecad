"""
Named sequences of sixfold Bessel integrals.

Available functions:
- alpha, alpha_tilde, beta: single-index sequences
- gamma, gamma_tilde, delta: two-index sequences
- alpha_asymptotic_check, beta_corollary_check, beta_asymptotic_check,
  gamma_asymptotic_check, delta_corollary_check, alpha_one_identity_check,
  sequence_invariants_check: pointwise checks of the companion bounds
- table_one, table_two, write_tables, table_reproduction_check: published tables
"""

from circle_restriction.seqtab.checks import (
    alpha_asymptotic_check,
    alpha_one_identity_check,
    beta_asymptotic_check,
    beta_corollary_check,
    delta_corollary_check,
    gamma_asymptotic_check,
    sequence_invariants_check,
)
from circle_restriction.seqtab.models import (
    C0,
    EPSILON_1,
    EPSILON_2,
    GAMMA_3,
    SequenceCache,
    get_sequence_cache,
    set_sequence_cache,
)
from circle_restriction.seqtab.sequences import (
    alpha,
    alpha_tilde,
    beta,
    delta,
    gamma,
    gamma_tilde,
    warm,
)
from circle_restriction.seqtab.tables import (
    TABLE_ONE_REFERENCE,
    TABLE_TWO_REFERENCE,
    format_tables,
    round_half_even,
    table_one,
    table_reproduction_check,
    table_two,
    write_tables,
)

__all__ = [
    # Cache and constants
    "SequenceCache",
    "get_sequence_cache",
    "set_sequence_cache",
    "C0",
    "EPSILON_1",
    "EPSILON_2",
    "GAMMA_3",
    # Sequences
    "alpha",
    "alpha_tilde",
    "beta",
    "gamma",
    "gamma_tilde",
    "delta",
    "warm",
    # Checks
    "alpha_asymptotic_check",
    "alpha_one_identity_check",
    "beta_asymptotic_check",
    "beta_corollary_check",
    "delta_corollary_check",
    "gamma_asymptotic_check",
    "sequence_invariants_check",
    # Tables
    "TABLE_ONE_REFERENCE",
    "TABLE_TWO_REFERENCE",
    "format_tables",
    "round_half_even",
    "table_one",
    "table_two",
    "table_reproduction_check",
    "write_tables",
]
