"""Weighted-sum congruences, the quoted identities and the certificate checks for the Sun family."""
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Tuple, Union

from sympy import isprime

from comb.binomials import binom, central_binom
from comb.lemmas import lemma_three_check
from families.polynomials import (
    family_poly,
    family_value,
    first_weighted_sum,
    second_weighted_sum,
)
from models.errors import DomainError
from models.schemas import CheckReport, FamilyId
from ring.unipoly import UniPoly, poly_exact_quotient, poly_first_difference, poly_first_indivisible
from loguru import logger


class RemarkKind(str, Enum):
    """Strengthenings of the quadratic-weight congruence."""
    MOD_2N2 = "mod2n2"
    PRIME_MOD_P3 = "prime_mod_p3"
    PRIME_MOD_P2 = "prime_mod_p2"


class IdentityKind(str, Enum):
    """Quoted identities and congruences for the family polynomials."""
    SUM2_7 = "sum2_7"
    SUM2_11 = "sum2_11"
    SUN_NORM = "sun_norm"
    SUN_KGK = "sun_kgk"


def _require_positive(name: str, value: int):
    if value < 1:
        raise DomainError(f"{name} must be positive, got {value}")


def thm1_first_check(n: int) -> CheckReport:
    """n divides every coefficient of sum_{k<n} (4k+3) g_k(x)."""
    _require_positive("n", n)
    total = first_weighted_sum(n)
    bad = poly_first_indivisible(total, n)
    detail = {"sum": total}
    if bad is None:
        detail["quotient"] = poly_exact_quotient(total, n)
    else:
        logger.warning(f"thm1_first: coefficient of x^{bad[0]} is {bad[1]} mod {n}")
    return CheckReport.outcome(
        "thm1_first",
        {"n": n},
        bad is None,
        witness=None if bad is None else f"x^{bad[0]} coefficient residue {bad[1]} mod {n}",
        detail=detail,
    )


def thm1_second_check(n: int) -> CheckReport:
    """sum_{k<n} (8k^2+12k+5) g_k(-1) = 0 mod n."""
    _require_positive("n", n)
    total = second_weighted_sum(n)
    return CheckReport.outcome(
        "thm1_second",
        {"n": n},
        total % n == 0,
        witness=f"sum={total} residue={total % n} mod {n}",
        detail={"sum": total},
    )


def remark_conjecture_check(kind: Union[RemarkKind, str], n_or_p: int) -> CheckReport:
    """Conjectured strengthenings of the quadratic-weight congruence."""
    try:
        kind = RemarkKind(kind)
    except ValueError:
        raise DomainError(f"unknown remark conjecture: {kind}")
    _require_positive("n", n_or_p)
    total = second_weighted_sum(n_or_p)
    if kind == RemarkKind.MOD_2N2:
        n = n_or_p
        modulus, target, params = 2 * n * n, n * n, {"n": n}
    else:
        p = n_or_p
        if not isprime(p):
            raise DomainError(f"{p} is not prime")
        params = {"p": p}
        if kind == RemarkKind.PRIME_MOD_P3:
            modulus, target = p ** 3, 3 * p * p
        else:
            modulus, target = p * p, 0
    holds = (total - target) % modulus == 0
    return CheckReport.outcome(
        f"remark_{kind.value}",
        params,
        holds,
        witness=f"sum={total} residue={total % modulus} expected {target % modulus} mod {modulus}",
        conjecture=True,
        detail={"sum": total, "modulus": modulus},
    )


def _sum2_7(n: int) -> UniPoly:
    total = UniPoly()
    for k in range(n + 1):
        total = total + family_poly(FamilyId.FRANEL, k) * binom(n, k)
    return total


def _sum2_11(n: int) -> UniPoly:
    total = UniPoly()
    for k in range(n + 1):
        sign = -1 if (n - k) % 2 else 1
        total = total + family_poly(FamilyId.SUN, k) * (sign * binom(n, k) * binom(n + k, k))
    return total


def identity_check(kind: Union[IdentityKind, str], n_or_p: int) -> CheckReport:
    """Binomial-transform identities and the two quoted results on g_k = g_k(1)."""
    try:
        kind = IdentityKind(kind)
    except ValueError:
        raise DomainError(f"unknown identity: {kind}")
    _require_positive("n", n_or_p)
    check_id = f"identity_{kind.value}"

    if kind == IdentityKind.SUM2_7:
        n = n_or_p
        lhs, rhs = _sum2_7(n), family_poly(FamilyId.SUN, n)
        return CheckReport.outcome(check_id, {"n": n}, lhs == rhs,
                                   witness=f"lhs={lhs!r} rhs={rhs!r}",
                                   detail={"lhs": lhs, "rhs": rhs})

    if kind == IdentityKind.SUM2_11:
        n = n_or_p
        lhs, rhs = _sum2_11(n), family_poly(FamilyId.APERY, n)
        return CheckReport.outcome(check_id, {"n": n}, lhs == rhs,
                                   witness=f"lhs={lhs!r} rhs={rhs!r}",
                                   detail={"lhs": lhs, "rhs": rhs})

    if kind == IdentityKind.SUN_NORM:
        n = n_or_p
        weighted = sum((4 * k + 3) * family_value(FamilyId.SUN, k, 1) for k in range(n))
        lhs = Fraction(weighted, 3 * n * n)
        rhs = sum(
            (Fraction(central_binom(k) * binom(n - 1, k) ** 2, k + 1) for k in range(n)),
            Fraction(0),
        )
        return CheckReport.outcome(check_id, {"n": n}, lhs == rhs,
                                   witness=f"lhs={lhs} rhs={rhs}",
                                   detail={"lhs": lhs, "rhs": rhs})

    p = n_or_p
    if p == 2 or not isprime(p):
        raise DomainError(f"{p} is not an odd prime")
    total = sum(k * family_value(FamilyId.SUN, k, 1) for k in range(p))
    cleared = 4 * total + 3
    return CheckReport.outcome(
        check_id,
        {"p": p},
        cleared % (p * p) == 0,
        witness=f"sum={total} 4*sum+3 residue {cleared % (p * p)} mod {p * p}",
        detail={"sum": total},
    )


def single_sum_value(n: int, k: int) -> int:
    """C(2k,k) sum_{i<=k} (C(n,k+i+1) + 4C(n,k+i+2)) C(k+i,i) C(k,i)."""
    inner = sum(
        (binom(n, k + i + 1) + 4 * binom(n, k + i + 2)) * binom(k + i, i) * binom(k, i)
        for i in range(k + 1)
    )
    return central_binom(k) * inner


def _require_triangle(n: int, k: int, name: str = "k"):
    if n < 1 or not 0 <= k <= n - 1:
        raise DomainError(f"need n >= 1 and 0 <= {name} <= n-1, got n={n}, {name}={k}")


def single_sum_check(n: int, k: int) -> CheckReport:
    """The x^k coefficient certificate is divisible by n."""
    _require_triangle(n, k)
    value = single_sum_value(n, k)
    return CheckReport.outcome(
        "single_sum",
        {"n": n, "k": k},
        value % n == 0,
        witness=f"value={value} residue={value % n} mod {n}",
        detail={"value": value},
    )


def single_sum_rewrite_check(n: int, k: int) -> CheckReport:
    """Regrouped form of the single sum, each regrouped term a multiple of k+i+1."""
    _require_triangle(n, k)
    params = {"n": n, "k": k}
    lhs = single_sum_value(n, k)
    central = central_binom(k)
    rhs = 0
    for i in range(k + 2):
        bracket = binom(k + i, i) * binom(k, i)
        if i >= 1:
            bracket += 4 * binom(k + i - 1, i - 1) * binom(k, i - 1)
        rhs += binom(n, k + i + 1) * bracket * central
        if k == 0 and i == 0:
            continue
        closed = Fraction(
            binom(k + i, i) * binom(k + 1, i) * central * (k * k + 3 * i * i + k + i),
            (k + i) * (k + 1),
        )
        if closed != bracket * central:
            return CheckReport.outcome("single_sum_rewrite", params, False,
                                       witness=f"term i={i}: {bracket * central} != {closed}")
        if not lemma_three_check(i, k).passed:
            return CheckReport.outcome("single_sum_rewrite", params, False,
                                       witness=f"term i={i} is not a multiple of {k + i + 1}")
    return CheckReport.outcome("single_sum_rewrite", params, lhs == rhs,
                               witness=f"lhs={lhs} regrouped={rhs}")


def mao_u(n: int, j: int) -> int:
    """u_j = C(2j,j) sum_{k=j}^{n-1} (4k+3) C(k,j)^2."""
    return central_binom(j) * sum((4 * k + 3) * binom(k, j) ** 2 for k in range(j, n))


def mao_difference(n: int, j: int) -> Fraction:
    """Closed form of u_{j+1} - u_j."""
    numerator = (9 * j + 6) * (j + 1) * n ** 2 + (12 * j * j - 8 * j * n - 4 * n + 14 * j + 4) * n ** 3
    return Fraction(
        -central_binom(j) * binom(n - 1, j) ** 2 * numerator,
        (j + 1) ** 3 * (j + 2),
    )


def mao_telescope_check(n: int, j: int) -> CheckReport:
    """u_j = 0 mod n and the telescoping certificate for u_{j+1} - u_j."""
    _require_triangle(n, j, name="j")
    u_j, u_next = mao_u(n, j), mao_u(n, j + 1)
    closed = mao_difference(n, j)
    params = {"n": n, "j": j}
    detail = {"u_j": u_j, "u_next": u_next, "difference": closed}
    if u_j % n:
        return CheckReport.outcome("mao_telescope", params, False,
                                   witness=f"u_{j}={u_j} residue {u_j % n} mod {n}", detail=detail)
    return CheckReport.outcome(
        "mao_telescope",
        params,
        u_next - u_j == closed,
        witness=f"u_{j + 1}-u_{j}={u_next - u_j} closed form={closed}",
        detail=detail,
    )


def _multi_sum_linear_rhs(n: int) -> UniPoly:
    coeffs = []
    for k in range(n):
        inner = sum(
            ((4 * n - 1) * binom(n, k + i + 1) - 4 * binom(n, k + i + 2)) * binom(k + i, i) * binom(k, i)
            for i in range(k + 1)
        )
        coeffs.append(central_binom(k) * inner)
    return UniPoly(coeffs)


def _multi_sum_quadratic_rhs(n: int) -> int:
    total = 0
    for k in range(n):
        inner = sum(
            (
                (8 * n * n - 4 * n + 1) * binom(n, k + i + 1)
                - (16 * n - 12) * binom(n, k + i + 2)
                + 16 * binom(n, k + i + 3)
            ) * binom(k + i, i) * binom(k, i)
            for i in range(k + 1)
        )
        total += (-1) ** k * central_binom(k) * inner
    return total


def multi_sum_identity_check(n: int) -> CheckReport:
    """Both weighted sums equal their regrouped triple-sum forms."""
    _require_positive("n", n)
    linear_lhs, linear_rhs = first_weighted_sum(n), _multi_sum_linear_rhs(n)
    quadratic_lhs, quadratic_rhs = second_weighted_sum(n), _multi_sum_quadratic_rhs(n)
    mismatch = poly_first_difference(linear_lhs, linear_rhs)
    if mismatch is not None:
        i, lhs, rhs = mismatch
        return CheckReport.outcome("multi_sum_identity", {"n": n}, False,
                                   witness=f"linear form differs at x^{i}: {lhs} != {rhs}")
    return CheckReport.outcome(
        "multi_sum_identity",
        {"n": n},
        quadratic_lhs == quadratic_rhs,
        witness=f"quadratic form {quadratic_lhs} != {quadratic_rhs}",
    )


def mao_split_terms(n: int, j: int) -> Tuple[Fraction, Fraction]:
    """The two terms of the split form of u_{j+1} - u_j, each over (j+1)(n+1)."""
    front = central_binom(j) * binom(n + 1, j + 1) * n * n
    first = Fraction(-front * binom(n - 1, j) * (9 * j + 6), (j + 1) * (n + 1))
    second = Fraction(
        -front * binom(n, j + 1) * (12 * j * j - 8 * j * n - 4 * n + 14 * j + 4),
        (j + 1) * (n + 1),
    )
    return first, second


def mao_split_congruence_check(n: int, j: int) -> CheckReport:
    """Each split term is n-integral and divisible by n."""
    _require_triangle(n, j, name="j")
    params = {"n": n, "j": j}
    for label, term in zip(("first", "second"), mao_split_terms(n, j)):
        if gcd(term.denominator, n) != 1 or term.numerator % n:
            return CheckReport.outcome("mao_split_congruence", params, False,
                                       witness=f"{label} term {term} is not 0 mod {n}")
    return CheckReport.outcome("mao_split_congruence", params, True)


def mao_split_identity_check(n: int, j: int) -> CheckReport:
    """The split form equals n(j+2)/(n-j) times the closed form of u_{j+1} - u_j."""
    _require_triangle(n, j, name="j")
    split = sum(mao_split_terms(n, j), Fraction(0))
    closed = mao_difference(n, j)
    scaled = closed * Fraction(n * (j + 2), n - j)
    return CheckReport.outcome(
        "mao_split_identity",
        {"n": n, "j": j},
        split == scaled,
        witness=f"split form={split} closed form={closed} scaled={scaled}",
        detail={"split": split, "closed": closed},
    )
