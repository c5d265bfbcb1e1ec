import random

import pytest

from hypothesis import given, settings, strategies as st

from dynsu2 import algebra as alg
from dynsu2 import coalgebra as co
from dynsu2.algebra import AlgElement
from dynsu2.report import Checker
from dynsu2.scalars import is_zero

SMALL = settings(max_examples=15, deadline=None)


def same(x, y):
    return all(is_zero(d) for d in x.difference(y))


def test_coproduct_of_alpha():
    expected = co.TensorElement({("a", "a"): alg.ONE, ("b", "c"): alg.ONE})
    assert same(co.coproduct(AlgElement.gen("a")), expected)


def test_coproduct_of_one():
    assert same(co.coproduct(AlgElement.one()), co.TensorElement.scalar(alg.ONE))


def test_sigma23_on_scalar_free_monomials():
    x = {("a", "b", "c", "a"): alg.ONE}
    out = co.sigma23(x)
    assert list(out) == [("a", "c", "b", "a")]
    assert is_zero(out["a", "c", "b", "a"] - 1)


def test_sigma23_rejects_incompatible_grading():
    with pytest.raises(co.IncompatibleGrading):
        co.sigma23({("a", "b", "c", "d"): alg.ONE})


def test_hat_coproduct_of_unit():
    one = AlgElement.one()
    out = co.hat_coproduct(co.HatTensor.from_factors(one, one))
    assert list(out) == [("", "", "", "")]
    assert is_zero(out["", "", "", ""] - 1)


def test_mul_out():
    a, b = AlgElement.gen("a"), AlgElement.gen("b")
    assert same(co.mul_out(co.HatTensor.from_factors(a, b)), a * b)


def test_coassociativity_on_alpha():
    x = AlgElement.gen("a")
    t = co.coproduct(x)
    assert same(co.delta_left(t), co.delta_right(t))


def test_bialgebroid_and_hopf_suites():
    chk = Checker("coalgebra")
    co.verify_bialgebroid(chk, degree_bound=2)
    co.verify_hopf(chk, degree_bound=2)
    co.verify_hat(chk, degree_bound=1)
    assert chk.ok, chk.summary()


words = st.text(alphabet="abcd", min_size=0, max_size=3)


@SMALL
@given(words)
def test_counit_axioms(w):
    x = AlgElement.word(w)
    t = co.coproduct(x)
    assert same(co.counit_left(t), x)
    assert same(co.counit_right(t), x)


@SMALL
@given(words)
def test_coassociativity(w):
    t = co.coproduct(AlgElement.word(w))
    assert same(co.delta_left(t), co.delta_right(t))


@SMALL
@given(st.integers(0, 10 ** 6))
def test_coproduct_multiplicative(seed):
    rng = random.Random(seed)
    x, y = alg.random_element(rng), alg.random_element(rng)
    assert same(co.coproduct(x * y), co.coproduct(x) * co.coproduct(y))


@SMALL
@given(words)
def test_antipode_axioms(w):
    x = AlgElement.word(w)
    t = co.coproduct(x)
    assert same(co.mul_id_antipode(t), co.eps_one(x))
    assert same(co.mul_antipode_id(t), co.eps_one_right(x))
