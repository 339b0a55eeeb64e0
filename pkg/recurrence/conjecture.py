"""The open congruence for T_n = sum_k (-1)^k (S_{k+2} + 12 S_{k+1} + 16 S_k) / k."""
from sympy import isprime

from memory.memo_cache import memo_cache
from models.errors import DomainError, NonIntegralTermError
from models.schemas import CheckReport
from recurrence.s_recurrence import rec1_combination
from loguru import logger


def _t_term(k: int) -> int:
    combination = rec1_combination(k)
    term, rem = divmod(combination, k)
    if rem:
        raise NonIntegralTermError(f"S_{k + 2}+12S_{k + 1}+16S_{k}={combination} is not divisible by {k}")
    return -term if k % 2 else term


def t_value(n: int) -> int:
    """T_n, each term checked integral before it is added."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    cached = memo_cache.get("t_value", n)
    if cached is not None:
        return cached
    start = n
    while start > 0 and memo_cache.get("t_value", start) is None:
        start -= 1
    total = memo_cache.get("t_value", start) if start > 0 else 0
    for k in range(start + 1, n + 1):
        total += _t_term(k)
        memo_cache.set("t_value", k, total)
    return total


def conj61_check(n: int) -> CheckReport:
    """T_n = 0 mod n."""
    value = t_value(n)
    holds = value % n == 0
    if not holds:
        logger.warning(f"conj61: counterexample at n={n}, T_n={value}")
    return CheckReport.outcome(
        "conj61",
        {"n": n},
        holds,
        witness=f"T_{n}={value} residue {value % n} mod {n}",
        conjecture=True,
        detail={"t": value},
    )


def conj61_prime_check(p: int) -> CheckReport:
    """T_p = 2p (-1)^((p+1)/2) mod p^2 for odd primes p."""
    if p == 2 or not isprime(p):
        raise DomainError(f"{p} is not an odd prime")
    value = t_value(p)
    target = 2 * p * (-1) ** ((p + 1) // 2)
    modulus = p * p
    holds = (value - target) % modulus == 0
    if not holds:
        logger.warning(f"conj61_prime: counterexample at p={p}, T_p={value}")
    return CheckReport.outcome(
        "conj61_prime",
        {"p": p},
        holds,
        witness=f"T_{p}={value} residue {value % modulus}, expected {target % modulus} mod {modulus}",
        conjecture=True,
        detail={"t": value},
    )
