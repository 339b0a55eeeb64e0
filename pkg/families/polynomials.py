"""Sun, Franel and Apery polynomials and the S sequence."""
import threading
from typing import Callable, List, Union

from comb.binomials import binom, binom_row, central_binom
from config import settings
from memory.memo_cache import memo_cache
from models.errors import ConsistencyError, DomainError
from models.schemas import FamilyId
from ring.unipoly import UniPoly, poly_eval
from loguru import logger


def _family(id: Union[FamilyId, str]) -> FamilyId:
    try:
        return FamilyId(id)
    except ValueError:
        raise DomainError(f"unknown family: {id}")


def _coefficients(family: FamilyId, n: int) -> List[int]:
    row = binom_row(n)
    if family == FamilyId.SUN:
        return [row[k] * row[k] * central_binom(k) for k in range(n + 1)]
    if family == FamilyId.FRANEL:
        return [row[k] * row[k] * binom(2 * k, n) for k in range(n + 1)]
    return [(row[k] * binom(n + k, k)) ** 2 for k in range(n + 1)]


def family_poly(id: Union[FamilyId, str], n: int) -> UniPoly:
    """Coefficient vector of g_n(x), f_n(x) or A_n(x)."""
    family = _family(id)
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if n > settings.family_cache_max_n:
        return UniPoly(_coefficients(family, n))
    return memo_cache.get_or_compute(
        "family_poly", (family.value, n), lambda: UniPoly(_coefficients(family, n))
    )


def family_value(id: Union[FamilyId, str], n: int, x: int) -> int:
    """Exact value of a family polynomial at an integer point."""
    family = _family(id)
    return memo_cache.get_or_compute(
        "family_value", (family.value, n, x), lambda: poly_eval(family_poly(family, n), x)
    )


def prefix_sum(namespace: str, n: int, term: Callable[[int], object]):
    """sum_{k<n} term(k), memoized as a prefix sequence."""
    cached = memo_cache.get(namespace, n)
    if cached is not None:
        return cached
    start = n
    while start > 0 and memo_cache.get(namespace, start) is None:
        start -= 1
    total = memo_cache.get(namespace, start) if start > 0 else 0
    for k in range(start, n):
        total = total + term(k)
        memo_cache.set(namespace, k + 1, total)
    return total


def first_weighted_sum(n: int) -> UniPoly:
    """sum_{k<n} (4k+3) g_k(x)."""
    total = prefix_sum("sum_linear_g", n, lambda k: family_poly(FamilyId.SUN, k) * (4 * k + 3))
    return total if isinstance(total, UniPoly) else UniPoly.constant(total)


def second_weighted_sum(n: int) -> int:
    """sum_{k<n} (8k^2+12k+5) g_k(-1)."""
    return prefix_sum(
        "sum_quadratic_g_minus_one",
        n,
        lambda k: (8 * k * k + 12 * k + 5) * family_value(FamilyId.SUN, k, -1),
    )


def _s_direct(n: int) -> int:
    """S_n from its defining sum, stepping through consecutive terms exactly."""
    m = n - 3
    if m < 0:
        return 0
    # C(k, m-k) vanishes below k0
    k = (m + 1) // 2
    term = (-1) ** k * central_binom(k) * binom(m, k) * binom(k, m - k)
    total = term
    while k < m:
        numerator = -term * 2 * (2 * k + 1) * (m - k) ** 2
        denominator = (k + 1) * (2 * k + 2 - m) * (2 * k + 1 - m)
        term, rem = divmod(numerator, denominator)
        if rem:
            raise ConsistencyError(f"non-integral term in S_{n} at k={k + 1}")
        total += term
        k += 1
    return total


class SSeq:
    """Prefix S_0, S_1, ... extended on demand by a single writer."""

    def __init__(self):
        """Initialize empty sequence."""
        self._values: List[int] = []
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def extend(self, n: int):
        """Make sure S_0..S_n are available."""
        if n < len(self._values):
            return
        with self._lock:
            start = len(self._values)
            for i in range(start, n + 1):
                self._values.append(_s_direct(i))
        logger.debug(f"S sequence extended to n={n}")

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise DomainError(f"S index must be non-negative, got {n}")
        self.extend(n)
        return self._values[n]


s_sequence = SSeq()


def s_value(n: int, cross_check: bool = False) -> int:
    """S_n = f_{n-3}(-1), zero for n < 3."""
    value = s_sequence[n]
    if cross_check and n >= 3:
        franel = family_value(FamilyId.FRANEL, n - 3, -1)
        if franel != value:
            raise ConsistencyError(f"S_{n}={value} but f_{n - 3}(-1)={franel}")
    return value
