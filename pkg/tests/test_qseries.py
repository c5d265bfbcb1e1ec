from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dynsu2 import qseries as qs
from dynsu2.report import Checker
from dynsu2.scalars import ONE, Point, evaluate, is_zero, lin, q, u

A, B, C, D = u("a"), u("b"), u("c"), u("d")
SMALL = settings(max_examples=20, deadline=None)


def test_qpoch_small_cases():
    a = u("a")
    assert is_zero(qs.qpoch(a, 0) - 1)
    assert is_zero(qs.qpoch(a, 2) - (1 - a) * (1 - a * q ** 2))
    assert is_zero(qs.qpoch(a, -1) * (1 - a * q ** -2) - 1)


def test_qbinom():
    assert is_zero(qs.qbinom(5, 0) - 1)
    assert is_zero(qs.qbinom(4, 1) - (1 - q ** 8) / (1 - q ** 2))
    with pytest.raises(qs.DomainError):
        qs.qbinom(2, 3)


def test_askey_wilson_monomial():
    x, a = lin("x"), u("a")
    assert is_zero(qs.awmonomial(1, x, a) - (1 - 2 * a * x + a * a))


def test_phi43_single_term():
    assert is_zero(qs.phi43([A, B, C, D], [A, B, C], n=0, z=q) - 1)


def test_qracah_trivial_degrees():
    for n in range(4):
        assert is_zero(qs.qracah(n, 0, A, B, C, D) - 1)
    for x in range(4):
        assert is_zero(qs.qracah(0, x, A, B, C, D) - 1)


def test_frozen_qracah_value():
    # R_2(mu(1); 2, 3, 5, 7; q^2) at q = 1/3, from an independent sympy evaluation
    assert evaluate(qs.qracah(2, 1, 2, 3, 5, 7), Point("1/3")) == Fraction(-54863, 567)


def test_frozen_askey_wilson_value():
    pt = Point("1/3")
    p = qs.askey_wilson(2, 2, Fraction(2, 3), Fraction(3, 5), Fraction(5, 7), Fraction(7, 11))
    assert evaluate(p, pt) == Fraction(417964753, 432224100)


def test_askey_wilson_poly_matches_series():
    xi = u("xi")
    coeffs = qs.askey_wilson_poly(2, A, B, C, D)
    assert is_zero(qs.poly_eval(coeffs, xi + 1 / xi) - qs.askey_wilson(2, xi, A, B, C, D))


def test_little_qjacobi_degree_zero():
    assert is_zero(qs.little_qjacobi(0, lin("x"), A, B) - ONE)


def test_nonterminating_rejected():
    with pytest.raises(qs.NonTerminating):
        qs.phi([A, B], [C], q, q)


@pytest.mark.parametrize("check", [qs.w87_transformations, qs.w65_sum_check,
                                   qs.aw_symmetry, qs.qracah_degree])
def test_series_identities(check):
    chk = Checker("qseries")
    check(chk, bound=3)
    assert chk.ok, chk.summary()


def test_racah_symmetries():
    chk = Checker("symmetries")
    qs.verify_symmetries(chk, N_max=3)
    assert chk.ok, chk.summary()


@SMALL
@given(st.integers(0, 4), st.permutations([0, 1, 2, 3]))
def test_askey_wilson_parameter_symmetry(n, perm):
    params = [A, B, C, D]
    xi = u("xi")
    lhs = qs.askey_wilson(n, xi, *params)
    rhs = qs.askey_wilson(n, xi, *[params[i] for i in perm])
    assert is_zero(lhs - rhs)


@SMALL
@given(st.integers(0, 5), st.integers(0, 5))
def test_qbinom_pascal(n, k):
    if not 1 <= k <= n:
        return
    lhs = qs.qbinom(n + 1, k)
    rhs = qs.qbinom(n, k - 1) + q ** (2 * k) * qs.qbinom(n, k)
    assert is_zero(lhs - rhs)
