import pytest
from hypothesis import given, settings, strategies as st

from dynsu2 import corep
from dynsu2.algebra import AlgElement
from dynsu2.coalgebra import TensorElement, coproduct
from dynsu2.report import Checker
from dynsu2.scalars import is_zero

SMALL = settings(max_examples=15, deadline=None)


def same(x, y):
    return all(is_zero(d) for d in x.difference(y))


def test_fundamental_matrix_elements():
    expected = {(0, 0): "d", (1, 1): "a", (0, 1): "c", (1, 0): "b"}
    for (k, j), ch in expected.items():
        for backend in corep.BACKENDS:
            assert same(corep.matelem(1, k, j, backend), AlgElement.gen(ch))


def test_trivial_corepresentation():
    assert same(corep.matelem(0, 0, 0), AlgElement.one())


def test_index_out_of_range():
    with pytest.raises(corep.IndexOutOfRange):
        corep.matelem(1, 2, 0)


def test_gamma_corep_at_zero():
    for N in range(4):
        assert is_zero(corep.gamma_corep(N, 0) - 1)


def test_zconst_at_zero():
    for M in range(3):
        for N in range(3):
            assert is_zero(corep.zconst(M, N, 0) - 1)


def test_cg_at_s_zero_is_one():
    assert is_zero(corep.cg(1, 1, 0, 0, 0) - 1)


def test_cg_grading_enforced():
    # j + k - s must lie in [0, M + N - 2s]
    for j, k in [(0, 0), (1, 1)]:
        assert not corep.cg_admissible(1, 1, 1, j, k)
        assert is_zero(corep.cg(1, 1, 1, j, k))
    with pytest.raises(corep.IndexOutOfRange):
        corep.cg(1, 1, 1, 2, 1)


def test_peter_weyl_rank_counts():
    assert corep.peter_weyl_rank(1)["rank"] == 5
    assert corep.peter_weyl_rank(2)["rank"] == 14


def test_corep_suite_degree_two():
    chk = Checker("corep")
    corep.verify_corep(chk, 2, coproduct_max=2)
    assert chk.ok, chk.summary()


def test_linearization_degree_one():
    chk = Checker("cg")
    corep.verify_cg(chk, 1, 1)
    assert chk.ok, chk.summary()
    assert "cg-linearization" in {r["id"] for r in chk.records}


@SMALL
@given(st.integers(0, 3).flatmap(lambda N: st.tuples(st.just(N), st.integers(0, N), st.integers(0, N))))
def test_backends_agree(idx):
    N, k, j = idx
    assert same(corep.matelem(N, k, j, corep.COMBINATORIAL), corep.matelem(N, k, j, corep.FACTORED))


@SMALL
@given(st.integers(0, 2).flatmap(lambda N: st.tuples(st.just(N), st.integers(0, N), st.integers(0, N))))
def test_matrix_coproduct(idx):
    N, k, j = idx
    lhs = coproduct(corep.matelem(N, k, j))
    rhs = TensorElement({}, 2)
    for x in range(N + 1):
        rhs = rhs + TensorElement.from_factors(corep.matelem(N, k, x), corep.matelem(N, x, j))
    assert same(lhs, rhs)
