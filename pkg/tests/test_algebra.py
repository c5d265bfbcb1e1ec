import random

import pytest
from hypothesis import given, settings, strategies as st

from dynsu2 import algebra as alg
from dynsu2.algebra import M2, SL2, AlgElement, antipode, counit, normalize, star
from dynsu2.grammar import ParseError, parse
from dynsu2.report import Checker
from dynsu2.scalars import F, ONE, DifferenceOperator, is_zero, q, qpow, u

SMALL = settings(max_examples=20, deadline=None)


def same(x, y):
    return all(is_zero(d) for d in x.difference(y))


def test_alpha_beta_commutation():
    expected = AlgElement.word("ba", coef=q * F("mu-1"))
    assert same(normalize(["alpha", "beta"]), expected)


def test_alpha_delta_in_sl2():
    expected = AlgElement.one() + AlgElement.word("cb", coef=q * F("lam"))
    assert same(normalize("ad"), expected)
    assert str(normalize("ad")) == "1 + q*F(lambda)*gamma*beta"


def test_generators_are_normal_words():
    for ch in "abcd":
        assert same(normalize(ch), AlgElement.gen(ch))


def test_moment_maps_commute_with_shifts():
    f = u("lam")
    # alpha has bidegree (1, 1): alpha f(lambda) = f(lambda - 1) alpha
    lhs = normalize(["a", ("l", f)])
    rhs = AlgElement.word("a", coef=u("lam") / q)
    assert same(lhs, rhs)


def test_star_and_antipode_of_generators():
    a, b, c, d = alg.gens()
    assert same(star(a), d)
    assert same(star(b), c.scale(-q))
    assert same(antipode(d), a)
    assert same(antipode(a), d.scale(F("lam") / F("mu")))


def test_counit_of_generators():
    a, b, c, d = alg.gens()
    assert counit(a).terms.keys() == {-1}
    assert is_zero(counit(a).terms[-1] - 1)
    assert counit(d).terms.keys() == {1}
    assert counit(b).terms == {}


def test_counit_of_central_elements():
    # the dynamical determinant is 1 and Xi acts as q + 1/q
    eps_c = counit(alg.det_c(SL2))
    assert list(eps_c.terms) == [0] and is_zero(eps_c.terms[0] - 1)
    eps_xi = counit(alg.xi())
    assert list(eps_xi.terms) == [0] and is_zero(eps_xi.terms[0] - (q + 1 / q))


def test_determinant_forms_agree():
    forms = alg.det_c_forms(M2)
    for f in forms[1:]:
        assert same(forms[0], f)


def test_xi_forms_agree():
    x1, x2 = alg.xi_forms()
    assert same(x1, x2)


def test_ccr_form_degree_zero():
    assert [is_zero(c - 1) for c in alg.ccr_form("ad", 0)] == [True]


@pytest.mark.parametrize("kind", ["ad", "da", "bc", "cb"])
@pytest.mark.parametrize("k", [1, 2])
def test_ccr_forms_match_products(kind, k):
    word = kind[0] * k + kind[1] * k
    assert same(AlgElement.word(word), alg.xi_poly_element(alg.ccr_form(kind, k)))


def test_hd_sum_degree_zero():
    chk = Checker("hd")
    alg.verify_hd(chk, s_max=0)
    assert chk.ok


def test_qdyb_and_rll():
    chk = Checker("r")
    alg.verify_qdyb(chk)
    alg.verify_rll(chk, M2)
    assert chk.ok and len(chk.records) == 24


def test_parse():
    assert same(parse("alpha*delta"), normalize("ad"))
    assert same(parse("f[lambda](q^lambda)*gamma"), AlgElement.word("c", coef=qpow("lam")))
    assert str(parse("1")) == "1"


@pytest.mark.parametrize("text,column", [("alpha*(", 8), ("alpha +* beta", 8), ("nope", 1)])
def test_parse_errors_carry_column(text, column):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert str(err.value).startswith(f"column {column}:")


words = st.text(alphabet="abcd", min_size=0, max_size=4)
modes = st.sampled_from([SL2, M2])


def element(seed, mode, degree=2):
    return alg.random_element(random.Random(seed), max_degree=degree, nterms=2, mode=mode)


@SMALL
@given(st.integers(0, 10 ** 6), modes)
def test_mul_associative(seed, mode):
    x, y, z = (element(seed + i, mode) for i in range(3))
    assert same((x * y) * z, x * (y * z))


@SMALL
@given(words, modes)
def test_normalize_idempotent_and_rule_order_free(w, mode):
    x = AlgElement.word(w, mode)
    assert same(alg.renormalize(x), x)
    assert same(AlgElement.word(w, mode, variant=1), x)


@SMALL
@given(words, words)
def test_bidegree_additive(w1, w2):
    x = AlgElement.word(w1) * AlgElement.word(w2)
    d1, d2 = alg.word_degree(w1), alg.word_degree(w2)
    for deg in x.bidegrees():
        assert deg == (d1[0] + d2[0], d1[1] + d2[1])


@SMALL
@given(st.sampled_from("abcd"))
def test_central_elements(ch):
    g = AlgElement.gen(ch, M2)
    c = alg.det_c(M2)
    assert same(c * g, g * c)
    g = AlgElement.gen(ch)
    assert same(alg.xi() * g, g * alg.xi())


@SMALL
@given(st.integers(0, 10 ** 6))
def test_phi_automorphism_multiplicative(seed):
    x, y = element(seed, SL2), element(seed + 1, SL2)
    assert same(alg.phi_auto(x * y), alg.phi_auto(x) * alg.phi_auto(y))


@SMALL
@given(st.integers(0, 10 ** 6))
def test_star_antimultiplicative_involution(seed):
    x, y = element(seed, SL2), element(seed + 1, SL2)
    assert same(star(x * y), star(y) * star(x))
    assert same(star(star(x)), x)


@SMALL
@given(st.integers(0, 10 ** 6))
def test_counit_multiplicative(seed):
    x, y = element(seed, SL2), element(seed + 1, SL2)
    lhs, rhs = counit(x * y), counit(x) * counit(y)
    assert all(is_zero(d) for d in lhs.difference(rhs))
