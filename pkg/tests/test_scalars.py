from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from dynsu2.scalars import (
    F, G, H, I, ONE, DifferenceOperator, Point, PoleAtPoint, Sampler, bar, diffop_antipode,
    diffop_apply, diffop_compose, evaluate, is_zero, pretty, q, qpow, shift, u,
)

SMALL = settings(max_examples=25, deadline=None)


def test_eval_direct_substitution():
    assert evaluate(q * u("lam") ** 2, Point("1/2", u={"lam": 3})) == Fraction(9, 2)


def test_eval_forced_pole():
    with pytest.raises(PoleAtPoint):
        evaluate(1 / (u("lam") ** 2 * q ** 2 - 1), Point("1/2", u={"lam": 2}))


def test_point_rejects_degenerate_q():
    for bad in (0, 1, -1):
        with pytest.raises(ValueError):
            Point(bad)


def test_shift_of_power():
    assert is_zero(shift(u("lam") ** 2, "lam", 1) - q ** 2 * u("lam") ** 2)


def test_shift_group_law():
    f = F("lam") * G("lam+1") + u("lam")
    assert is_zero(shift(shift(f, "lam", 2), "lam", -3) - shift(f, "lam", -1))


def test_auxiliary_function_relations():
    assert is_zero(q * F("lam") + 1 / (q * F("lam-1")) - (q + 1 / q))
    assert is_zero(G("mu") - G("lam") - H("lam", "mu") * I("lam", "mu"))


def test_distinct_variables_are_not_equal():
    assert not is_zero(u("lam") - u("mu"))


def test_bar_is_identity_on_real_form():
    f = F("lam")
    assert bar(f) is f


def test_g_is_ratio_of_f():
    assert is_zero(G("lam") - F("lam") / F("lam-1"))


def test_difference_operators():
    D = DifferenceOperator.T(-1)
    assert is_zero(diffop_apply(D, u("lam") ** 2) - q ** -2 * u("lam") ** 2)
    E = diffop_compose(DifferenceOperator.T(1), D)
    assert list(E.terms) == [0]
    assert is_zero(E.terms[0] - ONE)
    S = diffop_antipode(DifferenceOperator({2: u("lam")}))
    assert list(S.terms) == [-2]
    assert is_zero(S.terms[-2] - q ** -2 * u("lam"))


def test_pretty_renders_functions():
    assert pretty(qpow("lam") * 2) == "2*q^lambda"


def test_sampler_is_deterministic():
    a = Sampler(3, 5).base
    b = Sampler(3, 5).base
    assert [p.key for p in a] == [p.key for p in b]
    assert [p.get_u("lam") for p in a] == [p.get_u("lam") for p in b]


exponents = st.integers(min_value=-3, max_value=3)
coeffs = st.integers(min_value=-4, max_value=4)


@st.composite
def scalars(draw):
    num = draw(coeffs) + draw(coeffs) * q ** draw(exponents) * u("lam") ** draw(exponents)
    num = num + draw(coeffs) * u("mu") ** draw(exponents) * F(f"lam{draw(exponents):+d}")
    den = 1 + draw(st.integers(1, 3)) * q ** draw(st.integers(1, 3)) * u("mu") ** draw(st.integers(1, 2))
    return num / den


@SMALL
@given(scalars(), scalars(), scalars())
def test_field_laws(a, b, c):
    assert is_zero((a + b) + c - (a + (b + c)))
    assert is_zero(a * (b + c) - (a * b + a * c))
    assert is_zero(a * b - b * a)


@SMALL
@given(scalars())
def test_multiplicative_inverse(a):
    assume(not is_zero(a))
    assert is_zero(a * (1 / a) - 1)


@SMALL
@given(scalars(), scalars(), st.integers(-3, 3))
def test_shift_is_a_field_homomorphism(a, b, n):
    assert is_zero(shift(a * b, "lam", n) - shift(a, "lam", n) * shift(b, "lam", n))
    assert is_zero(shift(a + b, "mu", n) - (shift(a, "mu", n) + shift(b, "mu", n)))
