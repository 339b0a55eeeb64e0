"""Cyclotomic polynomials and reduction modulo them."""
from typing import Any, List

from sympy import divisors

from memory.memo_cache import memo_cache
from models.errors import DomainError, InexactDivisionError
from ring.unipoly import UniPoly, poly_divrem


def _build_cyclotomic(d: int) -> UniPoly:
    quotient = UniPoly.monomial(d) - 1
    for e in divisors(d)[:-1]:
        quotient, rem = poly_divrem(quotient, cyclotomic(e))
        if not rem.is_zero:
            raise InexactDivisionError(f"Phi_{e} does not divide q^{d}-1 exactly")
    return quotient


def cyclotomic(d: int) -> UniPoly:
    """Phi_d(q) by exact division of q^d - 1 by the smaller cyclotomic factors."""
    if d < 1:
        raise DomainError(f"cyclotomic index must be positive, got {d}")
    return memo_cache.get_or_compute("cyclotomic", d, lambda: _build_cyclotomic(d))


def fold_mod_qn_minus_one(p: UniPoly, n: int) -> UniPoly:
    """Remainder of p modulo q^n - 1, using q^n = 1."""
    if n < 1:
        raise DomainError(f"fold period must be positive, got {n}")
    if len(p) <= n:
        return p
    out: List[Any] = [0] * n
    for i, c in enumerate(p.coeffs):
        if c:
            out[i % n] = out[i % n] + c
    return UniPoly(out)


def mod_phi_reduce(p: UniPoly, d: int) -> UniPoly:
    """Remainder of p modulo Phi_d(q), of degree below phi(d)."""
    _, rem = poly_divrem(fold_mod_qn_minus_one(p, d), cyclotomic(d))
    return rem


def reduce_mod(p: UniPoly, modulus: UniPoly, period: int) -> UniPoly:
    """Remainder modulo a divisor of q^period - 1."""
    _, rem = poly_divrem(fold_mod_qn_minus_one(p, period), modulus)
    return rem
