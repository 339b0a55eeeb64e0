"""Binomial lemmas and the central divisibility theorem."""
from typing import Optional, Tuple

from comb.binomials import binom, binom_poly, central_binom
from models.errors import DomainError
from models.schemas import CheckReport
from ring.unipoly import UniPoly, poly_first_difference
from loguru import logger


def _lemma_one_mismatch(n: int) -> Optional[str]:
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    base = binom_poly(n).poly
    lhs = base * base
    rhs = UniPoly()
    for k in range(n + 1):
        rhs = rhs + binom_poly(n + k).poly * (binom(n + k, k) * binom(n, k))
    diff = poly_first_difference(lhs, rhs)
    if diff is None:
        return None
    i, left, right = diff
    return f"x^{i}: C(x,n)^2 has {left}, the expansion has {right}"


def lemma_one_check(n: int) -> bool:
    """C(x,n)^2 = sum_k C(x,n+k) C(n+k,k) C(n,k) as rational polynomials."""
    return _lemma_one_mismatch(n) is None


def lemma_one_report(n: int) -> CheckReport:
    mismatch = _lemma_one_mismatch(n)
    return CheckReport.outcome("lemma_one", {"n": n}, mismatch is None, witness=mismatch)


def _lemma_two_mismatch(n: int, k: int) -> Optional[str]:
    if n < 1 or not 0 <= k <= n:
        raise DomainError(f"need n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    linear = sum((4 * m + 3) * binom(m, k) for m in range(k, n))
    quadratic = sum((8 * m * m + 12 * m + 5) * binom(m, k) for m in range(k, n))
    linear_closed = (4 * n - 1) * binom(n, k + 1) - 4 * binom(n, k + 2)
    quadratic_closed = (
        (8 * n * n - 4 * n + 1) * binom(n, k + 1)
        - (16 * n - 12) * binom(n, k + 2)
        + 16 * binom(n, k + 3)
    )
    if linear != linear_closed:
        return f"linear sum {linear} != closed form {linear_closed}"
    if quadratic != quadratic_closed:
        return f"quadratic sum {quadratic} != closed form {quadratic_closed}"
    return None


def lemma_two_check(n: int, k: int) -> bool:
    """Closed forms of the linear and quadratic weighted column sums."""
    return _lemma_two_mismatch(n, k) is None


def lemma_two_report(n: int, k: int) -> CheckReport:
    mismatch = _lemma_two_mismatch(n, k)
    return CheckReport.outcome("lemma_two", {"n": n, "k": k}, mismatch is None, witness=mismatch)


def theorem2_product(m: int, n: int) -> int:
    """C(m+n-2, m-1) C(n, m) C(2n, n)."""
    return binom(m + n - 2, m - 1) * binom(n, m) * central_binom(n)


def theorem2_check(m: int, n: int) -> CheckReport:
    """(m+n) divides C(m+n-2, m-1) C(n, m) C(2n, n)."""
    if m < 1 or n < 1:
        raise DomainError(f"need m, n >= 1, got m={m}, n={n}")
    product = theorem2_product(m, n)
    modulus = m + n
    residue = product % modulus
    return CheckReport.outcome(
        "theorem2",
        {"m": m, "n": n},
        residue == 0,
        witness=f"product={product} residue={residue} modulus={modulus}",
        detail={"product": product, "modulus": modulus},
    )


def gessel_check(m: int, n: int) -> CheckReport:
    """(m+n) divides m C(2m, m) C(2n, n) / 2."""
    if m < 1 or n < 1:
        raise DomainError(f"need m, n >= 1, got m={m}, n={n}")
    doubled = m * central_binom(m) * central_binom(n)
    if doubled % 2:
        raise DomainError(f"m*C(2m,m)*C(2n,n) is odd at m={m}, n={n}")
    value = doubled // 2
    modulus = m + n
    residue = value % modulus
    return CheckReport.outcome(
        "gessel",
        {"m": m, "n": n},
        residue == 0,
        witness=f"value={value} residue={residue} modulus={modulus}",
        detail={"value": value, "modulus": modulus},
    )


def _lemma_three_holds(m: int, n: int, with_weight: bool = True) -> Tuple[bool, str]:
    weight = 3 * m * m + n * n + m + n if with_weight else 1
    e = binom(m + n, m) * binom(n + 1, m) * central_binom(n) * weight
    denominator = (m + n) * (n + 1)
    if e % denominator:
        return False, f"E={e} not divisible by (m+n)(n+1)={denominator}"
    quotient = e // denominator
    if quotient % (m + n + 1):
        return False, f"E/((m+n)(n+1))={quotient} residue {quotient % (m + n + 1)} mod {m + n + 1}"
    return True, ""


def lemma_three_check(m: int, n: int) -> CheckReport:
    """C(m+n,m) C(n+1,m) C(2n,n) (3m^2+n^2+m+n) / ((m+n)(n+1)) = 0 mod (m+n+1)."""
    if m < 0 or n < 0:
        raise DomainError(f"need m, n >= 0, got m={m}, n={n}")
    if m == 0 and n == 0:
        raise DomainError("(m, n) = (0, 0) makes the denominator (m+n)(n+1) vanish")
    holds, witness = _lemma_three_holds(m, n)
    return CheckReport.outcome("lemma_three", {"m": m, "n": n}, holds, witness=witness)


def lemma_three_vacuity_witness(limit: int) -> Optional[Tuple[int, int]]:
    """First (m, n) where the statement breaks once the quadratic weight is dropped."""
    for m in range(limit + 1):
        for n in range(limit + 1):
            if m == 0 and n == 0:
                continue
            holds, _ = _lemma_three_holds(m, n, with_weight=False)
            if not holds:
                logger.debug(f"Unweighted divisibility breaks at m={m}, n={n}")
                return m, n
    return None


def catalan_check(n: int) -> CheckReport:
    """C(2n,n)/(n+1) is an integer equal to C(2n,n) - C(2n,n-1)."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    central = central_binom(n)
    difference = central - binom(2 * n, n - 1)
    holds = central % (n + 1) == 0 and central // (n + 1) == difference
    return CheckReport.outcome(
        "catalan",
        {"n": n},
        holds,
        witness=f"C(2n,n)={central} C(2n,n)-C(2n,n-1)={difference}",
        detail={"catalan": difference},
    )
