"""Dense univariate polynomials over an exact coefficient ring.

Coefficients are stored in increasing order of degree, so ``UniPoly([1, 2, 3])``
is ``1 + 2*v + 3*v^2``. Supported coefficient rings are ``int``, ``Fraction``
and ``UniPoly`` itself (integer polynomials in a second variable).
"""
from fractions import Fraction
from typing import Any, Iterable, List, Optional, Sequence, Tuple, Union

import gmpy2

from models.errors import DomainError, NonUnitDivisorError

NEG_INF = float("-inf")

# Below these sizes schoolbook multiplication beats packing into one integer
KRONECKER_MIN_LEN = 24
KRONECKER_MIN_WORK = 2048


def _strip(coeffs: List[Any]) -> Tuple[Any, ...]:
    """Drop zero coefficients from the top end."""
    end = len(coeffs)
    while end and not coeffs[end - 1]:
        end -= 1
    return tuple(coeffs[:end])


class UniPoly:
    """Immutable dense polynomial, index = exponent."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()):
        object.__setattr__(self, "coeffs", _strip(list(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    def __reduce__(self):
        return (UniPoly, (self.coeffs,))

    # Constructors

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @classmethod
    def constant(cls, value: Any) -> "UniPoly":
        return cls((value,))

    @classmethod
    def monomial(cls, exponent: int, coefficient: Any = 1) -> "UniPoly":
        if exponent < 0:
            raise DomainError(f"negative exponent {exponent}")
        return cls([0] * exponent + [coefficient])

    @classmethod
    def variable(cls) -> "UniPoly":
        return cls((0, 1))

    # Inspection

    @property
    def degree(self) -> Union[int, float]:
        """Degree, with -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Any:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, i: int) -> Any:
        """Coefficient of v^i (0 outside the stored range)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)!r})"

    # Ring operations

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __add__(self, other) -> "UniPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "UniPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "UniPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return UniPoly(_mul_dense(self.coeffs, other.coeffs))
        if isinstance(other, (int, Fraction)):
            if not other:
                return UniPoly()
            return UniPoly([c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UniPoly":
        if exponent < 0:
            raise DomainError("negative powers are not polynomials")
        result, base = UniPoly.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def shift(self, k: int) -> "UniPoly":
        """Multiply by v^k."""
        if k < 0:
            raise DomainError(f"negative shift {k}")
        if not self.coeffs or k == 0:
            return self
        return UniPoly([0] * k + list(self.coeffs))

    def substitute_power(self, e: int) -> "UniPoly":
        """p(v) -> p(v^e) for e >= 1."""
        if e < 1:
            raise DomainError(f"substitution exponent must be positive, got {e}")
        if e == 1 or len(self.coeffs) <= 1:
            return self
        out = [0] * ((len(self.coeffs) - 1) * e + 1)
        for i, c in enumerate(self.coeffs):
            out[i * e] = c
        return UniPoly(out)


def _coerce(value) -> Optional[UniPoly]:
    if isinstance(value, UniPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return UniPoly.constant(value)
    return None


def _schoolbook(a: Sequence[Any], b: Sequence[Any]) -> List[Any]:
    out: List[Any] = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def _pack(coeffs: Sequence[int], width: int) -> int:
    """Evaluate at 2^(8*width); coefficients may be negative."""
    pos = b"".join(max(c, 0).to_bytes(width, "little") for c in coeffs)
    neg = b"".join(max(-c, 0).to_bytes(width, "little") for c in coeffs)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _kronecker(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Integer polynomial product by Kronecker substitution over GMP integers."""
    bound = max(abs(c) for c in a) * max(abs(c) for c in b) * min(len(a), len(b))
    # |coefficient| < 2^(bits-1) keeps the signed digit decoding unambiguous
    width = (bound.bit_length() + 2 + 7) // 8
    size = len(a) + len(b) - 1
    product = gmpy2.mpz(_pack(a, width)) * gmpy2.mpz(_pack(b, width))
    bits = 8 * width
    raw = (int(product) & ((1 << (bits * size)) - 1)).to_bytes(width * size, "little")
    full, half = 1 << bits, 1 << (bits - 1)
    out: List[int] = []
    carry = 0
    for i in range(size):
        t = int.from_bytes(raw[i * width:(i + 1) * width], "little") + carry
        if t >= half:
            out.append(t - full)
            carry = 1
        else:
            out.append(t)
            carry = 0
    return out


def _mul_dense(a: Sequence[Any], b: Sequence[Any]) -> List[Any]:
    if not a or not b:
        return []
    if (min(len(a), len(b)) >= KRONECKER_MIN_LEN
            and len(a) * len(b) >= KRONECKER_MIN_WORK
            and all(type(c) is int for c in a)
            and all(type(c) is int for c in b)):
        return _kronecker(a, b)
    return _schoolbook(a, b)


def _unit_inverse(lc: Any) -> Any:
    """Inverse of a leading coefficient, which must be a unit."""
    if isinstance(lc, Fraction):
        return 1 / lc
    if isinstance(lc, int):
        if lc in (1, -1):
            return lc
    elif isinstance(lc, UniPoly):
        if lc == 1 or lc == -1:
            return lc
    raise NonUnitDivisorError(f"leading coefficient {lc!r} is not a unit")


def poly_divrem(dividend: UniPoly, divisor: UniPoly) -> Tuple[UniPoly, UniPoly]:
    """Division with remainder by a divisor with unit leading coefficient."""
    if divisor.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    inverse = _unit_inverse(divisor.leading_coefficient)
    dd = len(divisor.coeffs) - 1
    rem = list(dividend.coeffs)
    if len(rem) - 1 < dd:
        return UniPoly(), dividend
    # Skip zero divisor terms: 1 - q^N style divisors are sparse
    terms = [(j, c) for j, c in enumerate(divisor.coeffs[:-1]) if c]
    quot: List[Any] = [0] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if not c:
            continue
        t = c * inverse
        quot[i - dd] = t
        rem[i] = 0
        base = i - dd
        for j, dj in terms:
            rem[base + j] = rem[base + j] - t * dj
    return UniPoly(quot), UniPoly(rem[:dd])


def poly_first_difference(a: UniPoly, b: UniPoly) -> Optional[Tuple[int, Any, Any]]:
    """First (exponent, a coefficient, b coefficient) where a and b disagree."""
    for i in range(max(len(a), len(b))):
        ca, cb = a.coefficient(i), b.coefficient(i)
        if ca != cb:
            return i, ca, cb
    return None


def poly_product(factors: Sequence[UniPoly]) -> UniPoly:
    """Product of many polynomials, multiplied pairwise so large operands meet late."""
    layer = list(factors)
    if not layer:
        return UniPoly.one()
    while len(layer) > 1:
        paired = [layer[i] * layer[i + 1] for i in range(0, len(layer) - 1, 2)]
        if len(layer) % 2:
            paired.append(layer[-1])
        layer = paired
    return layer[0]


def poly_first_indivisible(p: UniPoly, n: int) -> Optional[Tuple[int, int]]:
    """First (index, residue) whose coefficient is not divisible by n."""
    if n == 0:
        raise DomainError("divisibility by zero is undefined")
    for i, c in enumerate(p.coeffs):
        if not isinstance(c, int):
            raise DomainError(f"coefficient {c!r} is not an integer")
        if c % n:
            return i, c % n
    return None


def poly_int_divisible(p: UniPoly, n: int) -> bool:
    """True iff every coefficient of p is divisible by n."""
    return poly_first_indivisible(p, n) is None


def poly_eval(p: UniPoly, point: Any) -> Any:
    """Exact Horner evaluation."""
    acc: Any = 0
    for c in reversed(p.coeffs):
        acc = acc * point + c
    return acc


def poly_exact_quotient(p: UniPoly, n: int) -> UniPoly:
    """p / n for an integer polynomial known to be divisible by n."""
    witness = poly_first_indivisible(p, n)
    if witness is not None:
        raise DomainError(f"coefficient of degree {witness[0]} has residue {witness[1]} mod {n}")
    return UniPoly([c // n for c in p.coeffs])
