"""Canonical text form of exact polynomials."""
import re
from fractions import Fraction
from typing import Any, List

from models.errors import DomainError
from ring.unipoly import UniPoly
from ring.xqpoly import XQPoly


def _monomial(magnitude: Any, power: int, var: str) -> str:
    if power == 0:
        return str(magnitude)
    body = var if power == 1 else f"{var}^{power}"
    if magnitude == 1:
        return body
    return f"{magnitude}*{body}"


def format_poly(p: UniPoly, var: str = "x") -> str:
    """Ascending powers with explicit * and ^, e.g. '1 + 8*x + 6*x^2'."""
    parts: List[str] = []
    for power, c in enumerate(p.coeffs):
        if not c:
            continue
        text = _monomial(abs(c), power, var)
        if not parts:
            parts.append(f"-{text}" if c < 0 else text)
        else:
            parts.append(f"- {text}" if c < 0 else f"+ {text}")
    return " ".join(parts) if parts else "0"


def format_xq(p: XQPoly) -> str:
    """q-outer, with each x-coefficient in parentheses: '(1 + x) + (x)*q'."""
    parts: List[str] = []
    for power, c in enumerate(p.coeffs):
        if c.is_zero:
            continue
        inner = f"({format_poly(c, 'x')})"
        if power == 0:
            parts.append(inner)
        elif power == 1:
            parts.append(f"{inner}*q")
        else:
            parts.append(f"{inner}*q^{power}")
    return " + ".join(parts) if parts else "0"


def format_value(value: Any, var: str = "x") -> str:
    if isinstance(value, XQPoly):
        return format_xq(value)
    if isinstance(value, UniPoly):
        return format_poly(value, var)
    return str(value)


def parse_poly(text: str, var: str = "x") -> UniPoly:
    """Inverse of format_poly."""
    text = text.strip()
    if text == "0":
        return UniPoly()
    term_pattern = re.compile(
        rf"^(?:(?P<coef>\d+(?:/\d+)?)(?:\*(?P<v1>{re.escape(var)})(?:\^(?P<e1>\d+))?)?"
        rf"|(?P<v2>{re.escape(var)})(?:\^(?P<e2>\d+))?)$"
    )
    coeffs: dict = {}
    for i, raw in enumerate(re.split(r" (?=[+-] )", text)):
        raw = raw.strip()
        sign = 1
        if raw.startswith("+ ") and i:
            raw = raw[2:]
        elif raw.startswith("- ") and i:
            sign, raw = -1, raw[2:]
        elif raw.startswith("-") and not i:
            sign, raw = -1, raw[1:]
        match = term_pattern.match(raw)
        if not match:
            raise DomainError(f"cannot parse term {raw!r}")
        if match.group("coef") is not None:
            coef = Fraction(match.group("coef"))
            if match.group("v1"):
                power = int(match.group("e1") or 1)
            else:
                power = 0
        else:
            coef = Fraction(1)
            power = int(match.group("e2") or 1)
        value = sign * coef
        coeffs[power] = coeffs.get(power, 0) + (int(value) if value.denominator == 1 else value)
    dense = [0] * (max(coeffs) + 1)
    for power, c in coeffs.items():
        dense[power] = c
    return UniPoly(dense)
