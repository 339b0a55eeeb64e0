"""The q-analogue of the central divisibility theorem and its cyclotomic exponent ledger."""
from functools import lru_cache

from models.errors import DomainError, InexactDivisionError
from models.schemas import CheckReport, PhiExponentLedger
from qcore.cyclotomic import cyclotomic
from qcore.qbinomials import q_binom
from ring.unipoly import UniPoly, poly_divrem, poly_product
from loguru import logger


def _require_positive(m: int, n: int):
    if m < 1 or n < 1:
        raise DomainError(f"need m, n >= 1, got m={m}, n={n}")


@lru_cache(maxsize=32)
def q_analog_product(m: int, n: int) -> UniPoly:
    """[m+n-2, m-1]_q [n, m]_q [2n, n]_q."""
    return q_binom(m + n - 2, m - 1) * q_binom(n, m) * q_binom(2 * n, n)


@lru_cache(maxsize=32)
def q_analog_quotient(m: int, n: int) -> UniPoly:
    """(1-q) [m+n-2, m-1]_q [n, m]_q [2n, n]_q / (1-q^(m+n))."""
    _require_positive(m, n)
    numerator = (UniPoly.one() - UniPoly.variable()) * q_analog_product(m, n)
    quotient, rem = poly_divrem(numerator, UniPoly.one() - UniPoly.monomial(m + n))
    if not rem.is_zero:
        raise InexactDivisionError(f"1-q^{m + n} leaves remainder {rem!r} at m={m}, n={n}")
    return quotient


def phi_exponent_ledger(m: int, n: int) -> PhiExponentLedger:
    """Exponent of each Phi_d, 2 <= d <= 2n, in the q-analogue quotient."""
    _require_positive(m, n)
    if m > n:
        raise DomainError(f"the exponent ledger needs m <= n, got m={m}, n={n}")
    exponents = {}
    for d in range(2, 2 * n + 1):
        exponents[d] = (
            -(1 if (m + n) % d == 0 else 0)
            + (m + n - 2) // d
            + (2 * n) // d
            - (m - 1) // d
            - (n - 1) // d
            - m // d
            - n // d
            - (n - m) // d
        )
    return PhiExponentLedger(m=m, n=n, exponents=exponents)


def ledger_product(ledger: PhiExponentLedger) -> UniPoly:
    """prod_d Phi_d(q)^e_d."""
    if not ledger.nonnegative:
        raise DomainError(f"negative exponents at d={ledger.negative_indices()}")
    factors = [cyclotomic(d) for d, e in sorted(ledger.exponents.items()) for _ in range(e)]
    return poly_product(factors)


def thm_q_analog_check(m: int, n: int) -> CheckReport:
    """The q-analogue quotient is a polynomial with non-negative coefficients matching its ledger."""
    _require_positive(m, n)
    params = {"m": m, "n": n}
    try:
        quotient = q_analog_quotient(m, n)
    except InexactDivisionError as e:
        logger.warning(f"thm_q_analog: {e}")
        return CheckReport.outcome("thm_q_analog", params, False, witness=str(e))
    detail = {"quotient": quotient}
    negative = next((i for i, c in enumerate(quotient.coeffs) if c < 0), None)
    if negative is not None:
        return CheckReport.outcome(
            "thm_q_analog", params, False,
            witness=f"q^{negative} coefficient {quotient.coeffs[negative]}", detail=detail,
        )
    if m <= n:
        ledger = phi_exponent_ledger(m, n)
        detail["ledger"] = ledger
        if not ledger.nonnegative:
            return CheckReport.outcome(
                "thm_q_analog", params, False,
                witness=f"negative exponents at d={ledger.negative_indices()}", detail=detail,
            )
        if ledger_product(ledger) != quotient:
            return CheckReport.outcome(
                "thm_q_analog", params, False,
                witness="quotient differs from prod Phi_d^e_d", detail=detail,
            )
    return CheckReport.outcome("thm_q_analog", params, True, detail=detail)
