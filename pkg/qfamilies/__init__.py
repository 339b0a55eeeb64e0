"""q-Sun polynomials and their cyclotomic congruences."""
from qfamilies.sun_q import (
    Thm5Kind,
    g_q,
    modulus,
    phi_at_one,
    q1_specialization_check,
    thm5_check,
    thm5_sum,
)

__all__ = [
    "Thm5Kind",
    "g_q",
    "modulus",
    "phi_at_one",
    "q1_specialization_check",
    "thm5_check",
    "thm5_sum",
]
