"""The S_n recurrence battery and the closing conjecture."""
from recurrence.conjecture import conj61_check, conj61_prime_check, t_value
from recurrence.s_recurrence import (
    RECURRENCE,
    RecurrenceCoeffs,
    SModKind,
    multisum3_check,
    rec1_case_steps,
    rec1_cases_check,
    rec1_combination,
    rewrite_identity_check,
    s_mod_check,
    s_rec_check,
    weighted_s_sum,
)

__all__ = [
    "RECURRENCE",
    "RecurrenceCoeffs",
    "SModKind",
    "conj61_check",
    "conj61_prime_check",
    "multisum3_check",
    "rec1_case_steps",
    "rec1_cases_check",
    "rec1_combination",
    "rewrite_identity_check",
    "s_mod_check",
    "s_rec_check",
    "t_value",
    "weighted_s_sum",
]
