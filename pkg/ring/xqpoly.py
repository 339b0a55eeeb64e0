"""Polynomials in q whose coefficients are integer polynomials in x."""
from typing import Any, Iterable, List, Sequence

from models.errors import DomainError
from ring.unipoly import UniPoly


def _as_xpoly(value: Any) -> UniPoly:
    if isinstance(value, UniPoly):
        return value
    return UniPoly.constant(value)


class XQPoly:
    """Immutable bivariate polynomial, q-outer and x-inner.

    ``coeffs[i]`` is the x-polynomial multiplying q^i.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()):
        items = [_as_xpoly(c) for c in coeffs]
        while items and items[-1].is_zero:
            items.pop()
        object.__setattr__(self, "coeffs", tuple(items))

    def __setattr__(self, name, value):
        raise AttributeError("XQPoly is immutable")

    def __reduce__(self):
        return (XQPoly, (self.coeffs,))

    @classmethod
    def from_x_slices(cls, slices: Sequence[UniPoly]) -> "XQPoly":
        """Build from q-polynomials indexed by x-degree (the transpose)."""
        q_len = max((len(s) for s in slices), default=0)
        columns: List[List[Any]] = [[0] * len(slices) for _ in range(q_len)]
        for j, s in enumerate(slices):
            for i, c in enumerate(s.coeffs):
                columns[i][j] = c
        return cls(UniPoly(col) for col in columns)

    def x_slices(self) -> List[UniPoly]:
        """q-polynomial coefficient of each power of x."""
        x_len = max((len(c) for c in self.coeffs), default=0)
        rows: List[List[Any]] = [[0] * len(self.coeffs) for _ in range(x_len)]
        for i, xp in enumerate(self.coeffs):
            for j, c in enumerate(xp.coeffs):
                rows[j][i] = c
        return [UniPoly(r) for r in rows]

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def q_degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def x_degree(self):
        return max((c.degree for c in self.coeffs), default=float("-inf"))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, XQPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"XQPoly({list(self.coeffs)!r})"

    def __neg__(self) -> "XQPoly":
        return XQPoly(-c for c in self.coeffs)

    def __add__(self, other: "XQPoly") -> "XQPoly":
        if not isinstance(other, XQPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return XQPoly(out)

    def __sub__(self, other: "XQPoly") -> "XQPoly":
        if not isinstance(other, XQPoly):
            return NotImplemented
        return self + (-other)

    def substitute_q_power(self, e: int) -> "XQPoly":
        """q -> q^e."""
        if e < 1:
            raise DomainError(f"substitution exponent must be positive, got {e}")
        out: List[Any] = [0] * (max(len(self.coeffs) - 1, 0) * e + 1)
        for i, c in enumerate(self.coeffs):
            out[i * e] = c
        return XQPoly(out)

    def specialize_q(self, value: Any) -> UniPoly:
        """Evaluate at q = value, leaving a polynomial in x."""
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc
