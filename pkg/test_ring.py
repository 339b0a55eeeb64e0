"""Tests for the exact polynomial kernel."""
import pickle
import random
from fractions import Fraction

import pytest

from config import settings
from models.errors import DomainError, NonUnitDivisorError
from ring import (
    UniPoly,
    XQPoly,
    poly_divrem,
    poly_eval,
    poly_exact_quotient,
    poly_first_difference,
    poly_first_indivisible,
    poly_int_divisible,
    poly_product,
)
from ring.unipoly import _kronecker, _schoolbook


def _random_poly(rng: random.Random, length: int, bound: int = 10 ** 6) -> UniPoly:
    return UniPoly([rng.randint(-bound, bound) for _ in range(length)])


def test_trailing_zeros_are_stripped():
    p = UniPoly([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert UniPoly().degree == float("-inf")
    assert UniPoly([0, 0]).is_zero


def test_uni_poly_is_immutable():
    p = UniPoly([1, 1])
    with pytest.raises(AttributeError):
        p.coeffs = (2,)


def test_pickle_keeps_value():
    p = UniPoly([3, -1, 4])
    assert pickle.loads(pickle.dumps(p)) == p


def test_basic_arithmetic():
    x = UniPoly.variable()
    assert (1 + x) * (1 + x) == UniPoly([1, 2, 1])
    assert (x - 1) ** 3 == UniPoly([-1, 3, -3, 1])
    assert UniPoly([1, 2]) - UniPoly([1, 2]) == 0
    assert UniPoly([Fraction(1, 2)]) * 2 == 1
    assert UniPoly([1, 2]).shift(2) == UniPoly([0, 0, 1, 2])
    assert UniPoly([1, 2, 3]).substitute_power(2) == UniPoly([1, 0, 2, 0, 3])


def test_kronecker_matches_schoolbook():
    rng = random.Random(settings.random_seed)
    for length in (24, 60, 131):
        a = _random_poly(rng, length).coeffs
        b = _random_poly(rng, length + 7, bound=10 ** 30).coeffs
        assert _kronecker(a, b) == _schoolbook(a, b)


def test_ring_laws_on_random_samples():
    rng = random.Random(settings.random_seed)
    for _ in range(20):
        a, b, c = (_random_poly(rng, rng.randint(1, 80)) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a


def test_evaluation_is_a_ring_homomorphism():
    rng = random.Random(settings.random_seed)
    points = [0, 1, -1, 7, -13, Fraction(2, 3), Fraction(-5, 4)]
    for _ in range(25):
        a, b = (_random_poly(rng, rng.randint(1, 60)) for _ in range(2))
        for point in points:
            assert poly_eval(a * b, point) == poly_eval(a, point) * poly_eval(b, point)
            assert poly_eval(a + b, point) == poly_eval(a, point) + poly_eval(b, point)


def test_degree_is_additive_under_multiplication():
    rng = random.Random(settings.random_seed + 1)
    for _ in range(40):
        a, b = (_random_poly(rng, rng.randint(1, 90)) for _ in range(2))
        assert (a * b).degree == a.degree + b.degree
    assert (UniPoly() * UniPoly([1, 2])).degree == float("-inf")


def test_poly_product_matches_sequential_product():
    rng = random.Random(settings.random_seed + 2)
    factors = [_random_poly(rng, rng.randint(1, 12), bound=50) for _ in range(17)]
    expected = UniPoly.one()
    for f in factors:
        expected = expected * f
    assert poly_product(factors) == expected
    assert poly_product([]) == 1
    assert poly_product([UniPoly([3, 1])]) == UniPoly([3, 1])


def test_poly_first_difference():
    assert poly_first_difference(UniPoly([1, 2, 3]), UniPoly([1, 2, 3])) is None
    assert poly_first_difference(UniPoly([1, 2, 3]), UniPoly([1, 5, 3])) == (1, 2, 5)
    assert poly_first_difference(UniPoly([1, 2]), UniPoly([1, 2, 4])) == (2, 0, 4)


def test_divrem_by_monic_divisor():
    quotient, rem = poly_divrem(UniPoly.monomial(3) - 1, UniPoly([-1, 1]))
    assert quotient == UniPoly([1, 1, 1])
    assert rem.is_zero


def test_divrem_reconstructs_dividend():
    rng = random.Random(settings.random_seed)
    divisor = UniPoly([3, -2, 0, 5, 1])
    for _ in range(10):
        dividend = _random_poly(rng, rng.randint(1, 40))
        quotient, rem = poly_divrem(dividend, divisor)
        assert quotient * divisor + rem == dividend
        assert rem.degree < divisor.degree


def test_divrem_rejects_bad_divisors():
    with pytest.raises(NonUnitDivisorError):
        poly_divrem(UniPoly([1, 2, 3]), UniPoly([1, 2]))
    with pytest.raises(ZeroDivisionError):
        poly_divrem(UniPoly([1]), UniPoly())


def test_rational_divisor_is_allowed():
    quotient, rem = poly_divrem(UniPoly([0, 0, 1]), UniPoly([0, Fraction(2)]))
    assert quotient == UniPoly([0, Fraction(1, 2)])
    assert rem.is_zero


def test_integer_divisibility_helpers():
    assert poly_first_indivisible(UniPoly([3, 6, 7]), 3) == (2, 1)
    assert poly_first_indivisible(UniPoly([3, 6, 9]), 3) is None
    assert poly_exact_quotient(UniPoly([3, 6, 9]), 3) == UniPoly([1, 2, 3])
    with pytest.raises(DomainError):
        poly_first_indivisible(UniPoly([1]), 0)
    with pytest.raises(DomainError):
        poly_exact_quotient(UniPoly([1, 2]), 2)


def test_horner_evaluation():
    assert poly_eval(UniPoly([1, 2, 3]), 2) == 17
    assert poly_eval(UniPoly([1, 2, 3]), Fraction(1, 2)) == Fraction(11, 4)
    assert poly_eval(UniPoly(), 5) == 0


def test_xq_transpose():
    slices = [UniPoly([1]), UniPoly([1, 1])]
    p = XQPoly.from_x_slices(slices)
    assert p.coeffs == (UniPoly([1, 1]), UniPoly([0, 1]))
    assert p.x_slices() == slices
    assert p.q_degree == 1
    assert p.x_degree == 1


def test_xq_specialize_and_substitute():
    p = XQPoly.from_x_slices([UniPoly([1]), UniPoly([1, 1])])
    assert p.specialize_q(1) == UniPoly([1, 2])
    assert p.substitute_q_power(2).x_slices() == [UniPoly([1]), UniPoly([1, 0, 1])]


@pytest.mark.parametrize("coeffs,n,expected", [([10, 14], 2, True), ([10, 14], 4, False), ([], 7, True), ([-6, 9], -3, True)])
def test_poly_int_divisible(coeffs, n, expected):
    assert poly_int_divisible(UniPoly(coeffs), n) is expected


def test_poly_int_divisible_rejects_zero():
    with pytest.raises(DomainError):
        poly_int_divisible(UniPoly([1]), 0)
