"""Binomial coefficients and the purely binomial lemmas."""
from comb.binomials import BinomialPolynomial, binom, binom_poly, binom_row, central_binom
from comb.lemmas import (
    catalan_check,
    gessel_check,
    lemma_one_check,
    lemma_one_report,
    lemma_three_check,
    lemma_three_vacuity_witness,
    lemma_two_check,
    lemma_two_report,
    theorem2_check,
    theorem2_product,
)

__all__ = [
    "BinomialPolynomial",
    "binom",
    "binom_poly",
    "binom_row",
    "central_binom",
    "catalan_check",
    "gessel_check",
    "lemma_one_check",
    "lemma_one_report",
    "lemma_three_check",
    "lemma_three_vacuity_witness",
    "lemma_two_check",
    "lemma_two_report",
    "theorem2_check",
    "theorem2_product",
]
