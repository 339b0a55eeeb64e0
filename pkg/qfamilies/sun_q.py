"""q-analogues of the Sun polynomials and their cyclotomic congruences."""
from enum import Enum
from typing import List, Tuple, Union

from sympy import divisors, factorint

from families.polynomials import first_weighted_sum, family_poly
from memory.memo_cache import memo_cache
from models.errors import ConsistencyError, DomainError
from models.schemas import CheckReport, FamilyId, ModulusClass
from qcore.cyclotomic import cyclotomic, reduce_mod
from qcore.qbinomials import q_binom, q_int, q_substitute_power
from ring.unipoly import UniPoly, poly_eval, poly_first_indivisible
from ring.xqpoly import XQPoly
from loguru import logger


class Thm5Kind(str, Enum):
    """The three congruences for sums of q-Sun polynomials."""
    ODDCONG = "oddcong"
    EVENCONG1 = "evencong1"
    EVENCONG2 = "evencong2"


def _sun_qslices(n: int, squared: bool) -> Tuple[UniPoly, ...]:
    def build() -> Tuple[UniPoly, ...]:
        slices = []
        for k in range(n + 1):
            b = q_binom(n, k)
            s = b * b * q_binom(2 * k, k)
            slices.append(q_substitute_power(s, 2) if squared else s)
        return tuple(slices)

    return memo_cache.get_or_compute("sun_qslice", (n, squared), build)


def g_q(n: int, squared: bool = False) -> XQPoly:
    """g_n(x;q) = sum_k [n,k]_q^2 [2k,k]_q x^k, or g_n(x;q^2) when squared."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    return XQPoly.from_x_slices(_sun_qslices(n, squared))


def _in_class(d: int, cls: ModulusClass) -> bool:
    if cls == ModulusClass.ODD_GT1:
        return d > 1 and d % 2 == 1
    if cls == ModulusClass.EVEN:
        return d % 2 == 0
    return d > 2 and d % 2 == 0


def modulus(n: int, cls: Union[ModulusClass, str]) -> UniPoly:
    """Product of Phi_d(q) over the divisors d of n in the given class."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    try:
        cls = ModulusClass(cls)
    except ValueError:
        raise DomainError(f"unknown modulus class: {cls}")
    result = UniPoly.one()
    for d in divisors(n):
        if _in_class(d, cls):
            result = result * cyclotomic(d)
    return result


def _accumulate(slices: List[UniPoly], j: int, value: UniPoly):
    while len(slices) <= j:
        slices.append(UniPoly())
    slices[j] = slices[j] + value


def thm5_sum(kind: Union[Thm5Kind, str], n: int) -> Tuple[List[UniPoly], ModulusClass]:
    """x-slices of the left-hand side and the class of its modulus."""
    kind = Thm5Kind(kind)
    q = UniPoly.variable()
    slices: List[UniPoly] = []
    if kind == Thm5Kind.ODDCONG:
        one_plus_q_sq = (1 + q) * (1 + q)
        for k in range(n):
            weight = (one_plus_q_sq * q_substitute_power(q_int(k + 1), 2) - 1).shift(2 * k)
            for j, s in enumerate(_sun_qslices(k, True)):
                _accumulate(slices, j, weight * s)
        return slices, ModulusClass.ODD_GT1
    if kind == Thm5Kind.EVENCONG1:
        for k in range(n):
            for j, s in enumerate(_sun_qslices(k, False)):
                _accumulate(slices, j, s.shift(k))
        return slices, ModulusClass.EVEN
    for j in range(n):
        inner = UniPoly()
        for k in range(j, n):
            inner = inner + (q_binom(k, j) * q_binom(k + 1, j + 1)).shift(k)
        slices.append(q_substitute_power(q_int(j + 1), 2) * q_binom(2 * j, j) * inner)
    return slices, ModulusClass.EVEN_GT2


def thm5_check(which: Union[Thm5Kind, str], n: int) -> CheckReport:
    """Every x-slice of the q-sum is divisible by the matching cyclotomic product."""
    try:
        kind = Thm5Kind(which)
    except ValueError:
        raise DomainError(f"unknown congruence: {which}")
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    slices, cls = thm5_sum(kind, n)
    mod = modulus(n, cls)
    for j, s in enumerate(slices):
        rem = reduce_mod(s, mod, n)
        if not rem.is_zero:
            logger.warning(f"thm5 {kind.value}: x^{j} slice not divisible at n={n}")
            return CheckReport.outcome(
                f"thm5_{kind.value}", {"n": n}, False,
                witness=f"x^{j} slice remainder {rem!r}",
            )
    return CheckReport.outcome(f"thm5_{kind.value}", {"n": n}, True)


def phi_at_one(d: int) -> int:
    """Phi_d(1): p when d is a power of the prime p, otherwise 1."""
    if d < 2:
        raise DomainError(f"d must be at least 2, got {d}")
    factors = factorint(d)
    value = next(iter(factors)) if len(factors) == 1 else 1
    evaluated = poly_eval(cyclotomic(d), 1)
    if evaluated != value:
        raise ConsistencyError(f"Phi_{d}(1) evaluates to {evaluated}, expected {value}")
    return value


def q1_specialization_check(n: int) -> CheckReport:
    """The q -> 1 consequences: mod n1 for the weighted sum, mod 2^r for the plain sums."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    r = (n & -n).bit_length() - 1
    n1, two_r = n >> r, 1 << r
    params = {"n": n}

    plain, weighted_k = UniPoly(), UniPoly()
    for k in range(n):
        g = family_poly(FamilyId.SUN, k)
        plain = plain + g
        weighted_k = weighted_k + g * k
    candidates = [
        ("sum (4k+3) g_k", first_weighted_sum(n), n1),
        ("sum g_k", plain, two_r),
        ("2 sum k g_k", weighted_k * 2, two_r),
        ("2 sum k g_k - sum g_k", weighted_k * 2 - plain, two_r),
    ]
    for label, poly, m in candidates:
        bad = poly_first_indivisible(poly, m)
        if bad is not None:
            return CheckReport.outcome(
                "q1_specialization", params, False,
                witness=f"{label}: x^{bad[0]} residue {bad[1]} mod {m}",
            )

    odd_product, even_product = 1, 1
    for d in divisors(n):
        if d > 1 and d % 2:
            odd_product *= phi_at_one(d)
        elif d % 2 == 0:
            even_product *= phi_at_one(d)
    return CheckReport.outcome(
        "q1_specialization",
        params,
        odd_product == n1 and even_product == two_r,
        witness=f"prod Phi_d(1) odd={odd_product} (n1={n1}) even={even_product} (2^r={two_r})",
    )
