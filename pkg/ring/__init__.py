"""Exact arithmetic kernel."""
from ring.unipoly import (
    UniPoly,
    poly_divrem,
    poly_eval,
    poly_exact_quotient,
    poly_first_difference,
    poly_first_indivisible,
    poly_int_divisible,
    poly_product,
)
from ring.xqpoly import XQPoly

__all__ = [
    "UniPoly",
    "XQPoly",
    "poly_divrem",
    "poly_eval",
    "poly_exact_quotient",
    "poly_first_difference",
    "poly_first_indivisible",
    "poly_int_divisible",
    "poly_product",
]
