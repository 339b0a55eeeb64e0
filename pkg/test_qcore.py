"""Tests for q-binomials, cyclotomic polynomials and congruences modulo them."""
import random

import pytest
from sympy import Poly, cyclotomic_poly, symbols

from comb import binom
from config import settings
from models.errors import DomainError, InexactDivisionError
from models.schemas import CheckStatus
from qcore import (
    cyclotomic,
    fold_mod_qn_minus_one,
    inverse_power_congruence_check,
    ledger_product,
    lemma_product_check,
    lemma_product_report,
    mod_phi_reduce,
    phi_exponent_ledger,
    phi_square_divisibility_check,
    q_analog_product,
    q_analog_quotient,
    q_binom,
    q_chu_check,
    q_chu_report,
    q_int,
    q_lucas_check,
    q_substitute_power,
    qbinom_row,
    rsw_check,
    shape_check,
    thm_q_analog_check,
    vanishing_qbinom_check,
)
from qcore import congruences
from qcore.qbinomials import _qbinom_by_product
from ring import UniPoly, poly_eval


def test_q_int():
    assert q_int(0).is_zero
    assert q_int(1) == 1
    assert q_int(4) == UniPoly([1, 1, 1, 1])


@pytest.mark.parametrize("n,k,coeffs", [
    (2, 1, [1, 1]),
    (4, 2, [1, 1, 2, 1, 1]),
    (3, 5, []),
    (3, -1, []),
    (0, 0, [1]),
])
def test_q_binom_values(n, k, coeffs):
    assert q_binom(n, k) == UniPoly(coeffs)


def test_q_binom_specializes_to_binom():
    for n in range(31):
        for k in range(n + 1):
            p = q_binom(n, k)
            assert poly_eval(p, 1) == binom(n, k)
            assert p.degree == k * (n - k)


def test_q_binom_product_path_matches_rows():
    for n, k in [(20, 7), (13, 0), (17, 17), (25, 12)]:
        assert _qbinom_by_product(n, k) == qbinom_row(n)[k]


def test_q_binom_shapes():
    for n in range(21):
        for k in range(n + 1):
            assert shape_check(q_binom(n, k)).all


def test_shape_flags():
    flags = shape_check(UniPoly([1, -1, 1]))
    assert flags.reciprocal
    assert not flags.unimodal
    assert not flags.nonnegative
    assert shape_check(UniPoly()).all
    assert shape_check(UniPoly([5])).all
    assert not shape_check(UniPoly([1, 2, 1, 2, 1])).unimodal


@pytest.mark.parametrize("d,coeffs", [(1, [-1, 1]), (2, [1, 1]), (6, [1, -1, 1]), (12, [1, 0, -1, 0, 1])])
def test_cyclotomic_values(d, coeffs):
    assert cyclotomic(d) == UniPoly(coeffs)


def test_cyclotomic_matches_sympy():
    q = symbols("q")
    for d in range(1, 61):
        expected = [int(c) for c in reversed(Poly(cyclotomic_poly(d, q), q).all_coeffs())]
        assert cyclotomic(d) == UniPoly(expected)


def test_cyclotomic_product_is_q_power_minus_one():
    from sympy import divisors

    for n in range(1, 41):
        product = UniPoly.one()
        for d in divisors(n):
            product = product * cyclotomic(d)
        assert product == UniPoly.monomial(n) - 1


def test_fold_mod_qn_minus_one():
    assert fold_mod_qn_minus_one(UniPoly([1, 2, 3, 4, 5]), 2) == UniPoly([9, 6])
    assert fold_mod_qn_minus_one(UniPoly([1, 2]), 5) == UniPoly([1, 2])


@pytest.mark.parametrize("p,d,expected", [
    (UniPoly([1, 1, 1]), 2, UniPoly([1])),
    (UniPoly.monomial(3), 3, UniPoly([1])),
    (q_binom(3, 1), 2, UniPoly([1])),
])
def test_mod_phi_reduce(p, d, expected):
    assert mod_phi_reduce(p, d) == expected


def test_mod_phi_reduce_respects_products():
    rng = random.Random(settings.random_seed)
    for _ in range(25):
        d = rng.randint(2, 15)
        a = UniPoly([rng.randint(-50, 50) for _ in range(rng.randint(1, 40))])
        b = UniPoly([rng.randint(-50, 50) for _ in range(rng.randint(1, 40))])
        lhs = mod_phi_reduce(a * b, d)
        assert lhs == mod_phi_reduce(mod_phi_reduce(a, d) * mod_phi_reduce(b, d), d)
        assert lhs.degree < cyclotomic(d).degree


def test_lemma_product_examples():
    assert lemma_product_check(UniPoly([1, 1]), UniPoly([1, 1]))
    assert lemma_product_check(q_binom(4, 2), q_binom(6, 3))
    assert lemma_product_check(UniPoly.one(), q_binom(7, 3))


def test_lemma_product_on_random_qbinomial_products():
    rng = random.Random(settings.random_seed)
    for _ in range(60):
        a = q_binom(rng.randint(0, 9), rng.randint(0, 4)) or UniPoly.one()
        b = q_binom(rng.randint(0, 9), rng.randint(0, 4)) * q_binom(rng.randint(0, 6), rng.randint(0, 3))
        assert lemma_product_check(a, b)


def test_lemma_product_rejects_unshaped_factor():
    with pytest.raises(DomainError):
        lemma_product_check(UniPoly([1, -1, 1]), UniPoly([1]))


def test_rsw_examples():
    report = rsw_check(UniPoly([1, 1, 1]), 1, 3)
    assert report.passed
    assert report.detail["quotient"] == 1
    assert rsw_check(q_binom(4, 2) * q_int(4), 2, 4).passed


def test_rsw_inexact_division():
    with pytest.raises(InexactDivisionError):
        rsw_check(UniPoly([1, 1]), 1, 3)


def test_rsw_domain():
    with pytest.raises(DomainError):
        rsw_check(UniPoly([1]), 3, 2)


def test_ledger_small_cases():
    assert phi_exponent_ledger(1, 2).exponents == {2: 1, 3: 0, 4: 1}
    assert all(e == 0 for e in phi_exponent_ledger(1, 1).exponents.values())


def test_ledger_nonnegative():
    for n in range(1, 31):
        for m in range(1, n + 1):
            assert phi_exponent_ledger(m, n).nonnegative


def test_ledger_rejects_m_above_n():
    with pytest.raises(DomainError):
        phi_exponent_ledger(3, 2)


@pytest.mark.parametrize("m,n,coeffs", [(1, 1, [1]), (1, 2, [1, 1, 1, 1]), (3, 2, [])])
def test_q_analog_quotient(m, n, coeffs):
    assert q_analog_quotient(m, n) == UniPoly(coeffs)
    assert thm_q_analog_check(m, n).passed


def test_q_analog_grid_matches_ledger():
    for m in range(1, 9):
        for n in range(1, 9):
            report = thm_q_analog_check(m, n)
            assert report.passed, report.witness
            if m <= n:
                assert ledger_product(report.detail["ledger"]) == report.detail["quotient"]


def test_q_lucas_examples():
    assert q_lucas_check(3, 1, 2).passed
    assert q_lucas_check(6, 3, 3).passed
    assert q_lucas_check(5, 5, 4).passed
    assert mod_phi_reduce(q_binom(6, 3), 3) == 2


def test_q_lucas_grid():
    for n in range(15):
        for k in range(n + 1):
            for d in range(2, 7):
                assert q_lucas_check(n, k, d).passed


def test_q_chu():
    for m in range(7):
        for n in range(7):
            for k in range(m + n + 1):
                assert q_chu_check(m, n, k)


def test_inverse_power_congruence_odd():
    for d in range(3, 12, 2):
        for k in range(d):
            assert inverse_power_congruence_check(d, k).passed


def test_inverse_power_congruence_even_is_not_asserted():
    report = inverse_power_congruence_check(2, 1)
    assert report.status == CheckStatus.FINDING
    assert report.witness


def test_inverse_power_congruence_domain():
    with pytest.raises(DomainError):
        inverse_power_congruence_check(3, 3)


def test_phi_square_divisibility():
    for d in range(1, 20, 2):
        assert phi_square_divisibility_check(d).passed
    assert phi_square_divisibility_check(2).status == CheckStatus.FINDING


def test_vanishing_qbinom():
    for d in range(3, 14, 2):
        for delta in range((d - 3) // 2 + 1):
            assert vanishing_qbinom_check(d, delta).passed


def test_vanishing_qbinom_domain():
    with pytest.raises(DomainError):
        vanishing_qbinom_check(4, 0)
    with pytest.raises(DomainError):
        vanishing_qbinom_check(5, 2)


def test_q_substitute_power():
    assert q_substitute_power(UniPoly([1, 1]), 3) == UniPoly([1, 0, 0, 1])
    assert q_substitute_power(q_binom(4, 2), 2) == UniPoly([1, 0, 1, 0, 2, 0, 1, 0, 1])


def test_q_chu_report_names_the_coefficient(monkeypatch):
    assert q_chu_report(3, 2, 2).passed
    monkeypatch.setattr(congruences, "_q_chu_sides", lambda m, n, k: (UniPoly([1, 2]), UniPoly([1, 3])))
    report = q_chu_report(1, 1, 1)
    assert report.status == CheckStatus.FAIL
    assert report.witness == "q^1: [m+n,k] has 2, the convolution has 3"


def test_lemma_product_report():
    report = lemma_product_report(q_binom(4, 2), q_binom(5, 2), {"m": 5, "n": 4, "k": 2})
    assert report.passed
    assert (report.check_id, report.params) == ("lemma_product", {"m": 5, "n": 4, "k": 2})
    with pytest.raises(DomainError):
        lemma_product_report(UniPoly([2, 1]), UniPoly([1]))


def test_rsw_reuses_a_given_quotient():
    for m, n in ((1, 1), (2, 5), (6, 4)):
        quotient = q_analog_quotient(m, n)
        given = rsw_check(q_analog_product(m, n), 1, m + n, quotient=quotient)
        computed = rsw_check(q_analog_product(m, n), 1, m + n)
        assert given.passed and computed.passed
        assert given.detail["quotient"] == computed.detail["quotient"] == quotient
    assert not rsw_check(UniPoly([1, 1, 1]), 1, 3, quotient=UniPoly([1, -1])).passed


def test_ledger_product_of_repeated_factors():
    ledger = phi_exponent_ledger(2, 6)
    expected = UniPoly.one()
    for d, e in ledger.exponents.items():
        expected = expected * cyclotomic(d) ** e
    assert ledger_product(ledger) == expected == q_analog_quotient(2, 6)
