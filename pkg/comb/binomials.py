"""Binomial coefficients and binomial polynomials."""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from config import settings
from memory.memo_cache import memo_cache
from models.errors import DomainError
from ring.unipoly import UniPoly, poly_eval
from loguru import logger


def _multiplicative_row(n: int) -> Tuple[int, ...]:
    row = [1] * (n + 1)
    for k in range(n):
        row[k + 1] = row[k] * (n - k) // (k + 1)
    return tuple(row)


def binom_row(n: int) -> Tuple[int, ...]:
    """Row n of Pascal's triangle, memoized up to settings.binom_cache_rows."""
    if n < 0:
        raise DomainError(f"binomial row index must be non-negative, got {n}")
    if n > settings.binom_cache_rows:
        return _multiplicative_row(n)
    row = memo_cache.get("binom_row", n)
    if row is not None:
        return row
    # Walk down to the nearest cached row, then extend by Pascal's rule
    start = n
    while start > 0 and memo_cache.get("binom_row", start - 1) is None:
        start -= 1
    prev = memo_cache.get("binom_row", start - 1) if start > 0 else None
    for r in range(start, n + 1):
        if prev is None:
            current: Tuple[int, ...] = (1,)
        else:
            current = (1,) + tuple(prev[i] + prev[i + 1] for i in range(len(prev) - 1)) + (1,)
        prev = memo_cache.set("binom_row", r, current)
    logger.debug(f"Pascal cache extended to row {n}")
    return prev


def binom(n: int, k: int) -> int:
    """C(n, k) for n >= 0, zero when k is outside [0, n]."""
    if n < 0:
        raise DomainError(f"binomial upper index must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    if n > settings.binom_cache_rows:
        return math.comb(n, k)
    return binom_row(n)[k]


def central_binom(k: int) -> int:
    """C(2k, k)."""
    return binom(2 * k, k)


@dataclass(frozen=True)
class BinomialPolynomial:
    """C(x, n) = x(x-1)...(x-n+1)/n! as a rational polynomial."""
    n: int
    poly: UniPoly

    def evaluate(self, x) -> Fraction:
        return poly_eval(self.poly, x)


def _falling_factorial(n: int) -> UniPoly:
    result = UniPoly.one()
    for i in range(n):
        result = result * UniPoly((-i, 1))
    return result


def binom_poly(n: int) -> BinomialPolynomial:
    """The binomial polynomial C(x, n) with exact rational coefficients."""
    if n < 0:
        raise DomainError(f"binomial polynomial degree must be non-negative, got {n}")

    def build() -> BinomialPolynomial:
        scale = Fraction(1, math.factorial(n))
        return BinomialPolynomial(n=n, poly=_falling_factorial(n) * scale)

    return memo_cache.get_or_compute("binom_poly", n, build)
