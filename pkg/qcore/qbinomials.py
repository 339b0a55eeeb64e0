"""q-integers and Gaussian binomial coefficients."""
from typing import Tuple

from config import settings
from memory.memo_cache import memo_cache
from models.errors import DomainError
from ring.unipoly import UniPoly, poly_divrem
from loguru import logger


def q_int(n: int) -> UniPoly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise DomainError(f"q-integer index must be non-negative, got {n}")
    return UniPoly([1] * n)


def q_substitute_power(p: UniPoly, e: int) -> UniPoly:
    """p(q) -> p(q^e)."""
    return p.substitute_power(e)


def _one_minus_q_power(e: int) -> UniPoly:
    return UniPoly.one() - UniPoly.monomial(e)


def _qbinom_by_product(n: int, k: int) -> UniPoly:
    # Every partial product is itself a Gaussian binomial, so each division is exact
    k = min(k, n - k)
    acc = UniPoly.one()
    for i in range(1, k + 1):
        acc, rem = poly_divrem(acc * _one_minus_q_power(n - k + i), _one_minus_q_power(i))
        if not rem.is_zero:
            raise DomainError(f"inexact step building [{n},{k}]_q at i={i}")
    return acc


def qbinom_row(n: int) -> Tuple[UniPoly, ...]:
    """[n,0]_q .. [n,n]_q by [n,k] = [n-1,k-1] + q^k [n-1,k]."""
    if n < 0:
        raise DomainError(f"q-binomial row index must be non-negative, got {n}")
    row = memo_cache.get("qbinom_row", n)
    if row is not None:
        return row
    start = n
    while start > 0 and memo_cache.get("qbinom_row", start - 1) is None:
        start -= 1
    prev = memo_cache.get("qbinom_row", start - 1) if start > 0 else None
    for r in range(start, n + 1):
        if prev is None:
            current: Tuple[UniPoly, ...] = (UniPoly.one(),)
        else:
            middle = tuple(prev[k - 1] + prev[k].shift(k) for k in range(1, r))
            current = (UniPoly.one(),) + middle + (UniPoly.one(),)
        prev = memo_cache.set("qbinom_row", r, current)
    logger.debug(f"q-Pascal cache extended to row {n}")
    return prev


def q_binom(n: int, k: int) -> UniPoly:
    """Gaussian binomial [n, k]_q; zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return UniPoly()
    if n > settings.qbinom_cache_rows:
        return _qbinom_by_product(n, k)
    return qbinom_row(n)[k]
