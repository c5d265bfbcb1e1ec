from hypothesis import given, settings, strategies as st

from dynsu2 import dynrep
from dynsu2.algebra import AlgElement, xi
from dynsu2.report import Checker
from dynsu2.scalars import is_zero

SMALL = settings(max_examples=10, deadline=None)


def test_beta_kills_lowest_vector():
    out = dynrep.act(AlgElement.gen("b"), dynrep.RepVector.basis(0))
    assert out.terms == {}


def test_trivial_values():
    for m in range(3):
        assert is_zero(dynrep.tfun(0, 0, 0, m) - 1)
    assert is_zero(dynrep.gamma_rep(0) - 1)


def test_racah_orthogonality_small():
    chk = Checker("racah")
    dynrep.verify_racah_orthogonality(chk, 0, 2)
    dynrep.verify_racah_orthogonality(chk, 2, 2)
    assert chk.ok, chk.summary()


def test_intertwiner_and_eigenvectors():
    chk = Checker("dyn")
    dynrep.verify_tensor(chk, k_max=2, p_max=2)
    dynrep.verify_cg_dyn(chk, s_max=2, k_max=2)
    assert chk.ok, chk.summary()


def test_biedenharn_elliott_degree_one():
    chk = Checker("be")
    dynrep.verify_biedenharn_elliott(chk, bound=1)
    assert chk.ok, chk.summary()


def test_addition_formula_degree_one():
    chk = Checker("add")
    dynrep.verify_addition_formula(chk, bound=1, z_max=1)
    assert chk.ok, chk.summary()


@SMALL
@given(st.integers(0, 4))
def test_xi_acts_as_scalar(k):
    v = dynrep.RepVector.basis(k)
    out = dynrep.act(xi(), v)
    expected = v.scale(dynrep.xi_eigenvalue("om"))
    assert all(is_zero(d) for d in out.difference(expected))


@SMALL
@given(st.integers(0, 3), st.sampled_from(sorted(dynrep.defining_relations())))
def test_relations_annihilate(k, pair):
    rel = dynrep.defining_relations()[pair]
    out = dynrep.act_terms([(f, w) for f, w in rel], dynrep.RepVector.basis(k))
    assert all(is_zero(g) for g in out.terms.values())


@SMALL
@given(st.integers(0, 3).flatmap(lambda p: st.tuples(st.integers(0, p), st.just(p))))
def test_eigenvectors(yp):
    y, p = yp
    v = dynrep.eigvec(y, p)
    out = dynrep.tensor_act(xi(), v)
    expected = v.scale(dynrep.xi_eigenvalue(f"om1+om2+{2 * y}"))
    assert all(is_zero(d) for d in out.difference(expected))
