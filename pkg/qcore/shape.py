"""Reciprocal and unimodal coefficient shapes."""
from typing import Dict, Optional

from models.errors import DomainError, InexactDivisionError
from models.schemas import CheckReport, ShapeFlags
from ring.unipoly import UniPoly, poly_divrem


def shape_check(p: UniPoly) -> ShapeFlags:
    """Exact shape flags of a coefficient list; zero and constants are reciprocal and unimodal."""
    a = list(p.coeffs)
    nonnegative = all(c >= 0 for c in a)
    reciprocal = a == a[::-1]
    unimodal = nonnegative
    if unimodal:
        i = 0
        while i + 1 < len(a) and a[i] <= a[i + 1]:
            i += 1
        while i + 1 < len(a) and a[i] >= a[i + 1]:
            i += 1
        unimodal = i + 1 >= len(a)
    return ShapeFlags(reciprocal=reciprocal, unimodal=unimodal, nonnegative=nonnegative)


def _require_shaped(p: UniPoly, label: str):
    flags = shape_check(p)
    if not flags.all:
        raise DomainError(f"{label} is not reciprocal and unimodal with non-negative coefficients: {flags}")


def lemma_product_check(a: UniPoly, b: UniPoly) -> bool:
    """The product of two reciprocal unimodal non-negative polynomials is reciprocal and unimodal."""
    return lemma_product_report(a, b).passed


def lemma_product_report(a: UniPoly, b: UniPoly, params: Optional[Dict[str, int]] = None) -> CheckReport:
    _require_shaped(a, "first factor")
    _require_shaped(b, "second factor")
    product = a * b
    flags = shape_check(product)
    witness = None
    if not flags.reciprocal:
        i = next(i for i, c in enumerate(product.coeffs) if c != product.coeffs[-1 - i])
        witness = f"not reciprocal: q^{i} has {product.coeffs[i]}, q^{len(product) - 1 - i} has {product.coeffs[-1 - i]}"
    elif not flags.unimodal:
        witness = f"not unimodal: {product!r}"
    return CheckReport.outcome(
        "lemma_product",
        params if params is not None else {},
        flags.reciprocal and flags.unimodal,
        witness=witness,
    )


def _one_minus_q_power(e: int) -> UniPoly:
    return UniPoly.one() - UniPoly.monomial(e)


def rsw_check(
    p: UniPoly,
    m: int,
    n: int,
    params: Optional[Dict[str, int]] = None,
    quotient: Optional[UniPoly] = None,
) -> CheckReport:
    """(1-q^m) p / (1-q^n) has non-negative coefficients.

    A caller that already holds the quotient passes it in and skips the division.
    Raises InexactDivisionError when the quotient is not a polynomial.
    """
    if not 1 <= m <= n:
        raise DomainError(f"need 1 <= m <= n, got m={m}, n={n}")
    _require_shaped(p, "p")
    if quotient is None:
        quotient, rem = poly_divrem(_one_minus_q_power(m) * p, _one_minus_q_power(n))
        if not rem.is_zero:
            raise InexactDivisionError(f"(1-q^{n}) does not divide (1-q^{m})p, remainder {rem!r}")
    negative = next((i for i, c in enumerate(quotient.coeffs) if c < 0), None)
    return CheckReport.outcome(
        "rsw",
        params if params is not None else {"m": m, "n": n},
        negative is None,
        witness=None if negative is None else f"q^{negative} coefficient {quotient.coeffs[negative]}",
        detail={"quotient": quotient},
    )
