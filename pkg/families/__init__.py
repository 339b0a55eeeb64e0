"""Sun, Franel and Apery families and their congruences."""
from families.checks import (
    IdentityKind,
    RemarkKind,
    identity_check,
    mao_split_congruence_check,
    mao_split_identity_check,
    mao_split_terms,
    mao_telescope_check,
    mao_u,
    multi_sum_identity_check,
    remark_conjecture_check,
    single_sum_check,
    single_sum_rewrite_check,
    thm1_first_check,
    thm1_second_check,
)
from families.polynomials import (
    SSeq,
    family_poly,
    family_value,
    first_weighted_sum,
    s_sequence,
    s_value,
    second_weighted_sum,
)

__all__ = [
    "IdentityKind",
    "RemarkKind",
    "SSeq",
    "family_poly",
    "family_value",
    "first_weighted_sum",
    "identity_check",
    "mao_split_congruence_check",
    "mao_split_identity_check",
    "mao_split_terms",
    "mao_telescope_check",
    "mao_u",
    "multi_sum_identity_check",
    "remark_conjecture_check",
    "s_sequence",
    "s_value",
    "second_weighted_sum",
    "single_sum_check",
    "single_sum_rewrite_check",
    "thm1_first_check",
    "thm1_second_check",
]
