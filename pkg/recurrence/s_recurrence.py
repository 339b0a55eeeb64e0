"""Recurrence battery for S_n = f_{n-3}(-1) and the rewrite identities built on it."""
from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import List, Tuple, Union

from comb.binomials import binom, central_binom
from families.polynomials import s_value, second_weighted_sum
from models.errors import DomainError
from models.schemas import CheckReport


@dataclass(frozen=True)
class RecurrenceCoeffs:
    """Cubic coefficients c3..c0 of the order-three recurrence, as integer coefficient tuples (ascending)."""
    c3: Tuple[int, ...] = (0, 0, -8, 5)
    c2: Tuple[int, ...] = (-24, 90, -117, 45)
    c1: Tuple[int, ...] = (-288, 824, -720, 200)
    c0: Tuple[int, ...] = (-384, 1024, -736, 160)

    @staticmethod
    def _evaluate(coeffs: Tuple[int, ...], n: int) -> int:
        acc = 0
        for c in reversed(coeffs):
            acc = acc * n + c
        return acc

    def at(self, n: int) -> Tuple[int, int, int, int]:
        """(c3(n), c2(n), c1(n), c0(n))."""
        return tuple(self._evaluate(c, n) for c in (self.c3, self.c2, self.c1, self.c0))


RECURRENCE = RecurrenceCoeffs()


class SModKind(str, Enum):
    """Congruences for S_n implied by the recurrence."""
    REC10 = "rec10"
    REC11 = "rec11"
    REC1 = "rec1"


def _require_positive(n: int):
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")


def s_rec_check(n: int) -> CheckReport:
    """c3 S_{n+3} + c2 S_{n+2} + c1 S_{n+1} + c0 S_n = 0."""
    _require_positive(n)
    c3, c2, c1, c0 = RECURRENCE.at(n)
    total = c3 * s_value(n + 3) + c2 * s_value(n + 2) + c1 * s_value(n + 1) + c0 * s_value(n)
    return CheckReport.outcome("s_rec", {"n": n}, total == 0, witness=f"left side = {total}")


def rec1_combination(n: int) -> int:
    """S_{n+2} + 12 S_{n+1} + 16 S_n."""
    return s_value(n + 2) + 12 * s_value(n + 1) + 16 * s_value(n)


def s_mod_check(kind: Union[SModKind, str], n: int) -> CheckReport:
    try:
        kind = SModKind(kind)
    except ValueError:
        raise DomainError(f"unknown S congruence: {kind}")
    _require_positive(n)
    check_id = f"s_mod_{kind.value}"
    if kind == SModKind.REC10:
        a, b, c = s_value(3 * n), s_value(3 * n + 1), s_value(3 * n + 2)
        holds = (a - b) % 3 == 0 and (b + c) % 3 == 0
        witness = f"S_3n={a} S_3n+1={b} S_3n+2={c} mod 3"
    elif kind == SModKind.REC11:
        value = s_value(4 * n + 2)
        holds = value % 4 == 0
        witness = f"S_4n+2={value} residue {value % 4} mod 4"
    else:
        value = rec1_combination(n)
        holds = value % n == 0
        witness = f"S_n+2+12S_n+1+16S_n={value} residue {value % n} mod {n}"
    return CheckReport.outcome(check_id, {"n": n}, holds, witness=witness)


def _binomial_weight(n: int, m: int) -> int:
    return binom(n, m + 1) + 12 * binom(n, m + 2) + 16 * binom(n, m + 3)


def weighted_s_sum(n: int) -> int:
    """sum_{m<n} (C(n,m+1) + 12C(n,m+2) + 16C(n,m+3)) S_{m+3}."""
    return sum(_binomial_weight(n, m) * s_value(m + 3) for m in range(n))


def _bridge_sum(m: int) -> int:
    return sum(
        (-1) ** k * central_binom(k) * binom(m, k) * binom(k, m - k)
        for k in range(m + 1)
        if m - k <= k
    )


def rewrite_identity_check(n: int) -> CheckReport:
    """Both forms of the binomial-weighted S sum agree, and the inner sum equals S_{m+3}."""
    _require_positive(n)
    params = {"n": n}
    lhs = weighted_s_sum(n)
    rhs = sum(binom(n, m) * rec1_combination(m) for m in range(1, n + 1))
    if lhs != rhs:
        return CheckReport.outcome("rewrite_identity", params, False, witness=f"lhs={lhs} rhs={rhs}")
    for m in range(n):
        bridge = _bridge_sum(m)
        if bridge != s_value(m + 3):
            return CheckReport.outcome(
                "rewrite_identity", params, False,
                witness=f"inner sum at m={m} is {bridge}, S_{m + 3}={s_value(m + 3)}",
            )
    return CheckReport.outcome("rewrite_identity", params, True)


def rec1_case_steps(n: int) -> List[Tuple[str, bool]]:
    """The case split behind S_{n+2} + 12 S_{n+1} + 16 S_n = 0 mod n, keyed on gcd(n, 24)."""
    _require_positive(n)
    a, b, c = s_value(n + 2), s_value(n + 1), s_value(n)
    r = rec1_combination(n)
    g = gcd(n, 24)
    if g == 1:
        return [("-24R = 0 mod n", (-24 * r) % n == 0)]
    if g in (2, 4, 8):
        modulus = 8 * n
        return [
            ("+-2nS_n+2 - 24R = 0 mod 8n", any((s * 2 * n * a - 24 * r) % modulus == 0 for s in (1, -1))),
            ("2nS_n+2 = 0 mod 8n", (2 * n * a) % modulus == 0),
        ]
    if g == 3:
        modulus = 3 * n
        tail = 2 * n * b + n * c
        return [
            ("2nS_n+1 + nS_n - 24R = 0 mod 3n", (tail - 24 * r) % modulus == 0),
            ("2nS_n+1 + nS_n = 0 mod 3n", tail % modulus == 0),
        ]
    modulus = 24 * n
    tail = 8 * n * b + 16 * n * c
    return [
        ("30nS_n+2 or 18nS_n+2 plus 8nS_n+1 + 16nS_n - 24R = 0 mod 24n",
         any((w * n * a + tail - 24 * r) % modulus == 0 for w in (30, 18))),
        ("30nS_n+2 = 18nS_n+2 = 0 mod 24n", (30 * n * a) % modulus == 0 and (18 * n * a) % modulus == 0),
        ("8nS_n+1 + 16nS_n = 0 mod 24n", tail % modulus == 0),
    ]


def rec1_cases_check(n: int) -> CheckReport:
    """Every step of the gcd(n, 24) case split holds, along with its conclusion.

    The intermediate steps are not asserted; a failing one is a finding.
    """
    steps = rec1_case_steps(n)
    r = rec1_combination(n)
    steps.append(("R = 0 mod n", r % n == 0))
    failed = next((label for label, holds in steps if not holds), None)
    return CheckReport.outcome(
        "rec1_cases",
        {"n": n},
        failed is None,
        witness=None if failed is None else f"gcd(n,24)={gcd(n, 24)}: {failed} fails, R={r}",
        conjecture=True,
    )


def multisum3_check(n: int) -> CheckReport:
    """sum_{m<n} (8m^2+12m+5) g_m(-1) = binomial-weighted S sum mod 2n^2."""
    _require_positive(n)
    lhs, rhs = second_weighted_sum(n), weighted_s_sum(n)
    modulus = 2 * n * n
    return CheckReport.outcome(
        "multisum3",
        {"n": n},
        (lhs - rhs) % modulus == 0,
        witness=f"difference {lhs - rhs} residue {(lhs - rhs) % modulus} mod {modulus}",
        detail={"lhs": lhs, "rhs": rhs},
    )
