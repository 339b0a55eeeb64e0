"""q-arithmetic: Gaussian binomials, cyclotomic polynomials and their congruences."""
from qcore.congruences import (
    inverse_power_congruence_check,
    phi_square_divisibility_check,
    q_chu_check,
    q_chu_report,
    q_lucas_check,
    vanishing_qbinom_check,
)
from qcore.cyclotomic import cyclotomic, fold_mod_qn_minus_one, mod_phi_reduce, reduce_mod
from qcore.ledger import (
    ledger_product,
    phi_exponent_ledger,
    q_analog_product,
    q_analog_quotient,
    thm_q_analog_check,
)
from qcore.qbinomials import q_binom, q_int, q_substitute_power, qbinom_row
from qcore.shape import lemma_product_check, lemma_product_report, rsw_check, shape_check

__all__ = [
    "cyclotomic",
    "fold_mod_qn_minus_one",
    "inverse_power_congruence_check",
    "ledger_product",
    "lemma_product_check",
    "lemma_product_report",
    "mod_phi_reduce",
    "phi_exponent_ledger",
    "phi_square_divisibility_check",
    "q_analog_product",
    "q_analog_quotient",
    "q_binom",
    "q_chu_check",
    "q_chu_report",
    "q_int",
    "q_lucas_check",
    "q_substitute_power",
    "qbinom_row",
    "reduce_mod",
    "rsw_check",
    "shape_check",
    "thm_q_analog_check",
    "vanishing_qbinom_check",
]
