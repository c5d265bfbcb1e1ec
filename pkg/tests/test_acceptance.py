"""Timed acceptance criteria. Each runs its checks at 20 sample points and
fails on any failed identity or on exceeding its time limit."""

from __future__ import annotations

import time

import pytest

from dynsu2 import algebra, coalgebra, corep, dynrep, haar
from dynsu2.report import Checker

RESULTS = {}


def qdyb(chk):
    algebra.verify_qdyb(chk)


def rll(chk):
    algebra.verify_rll(chk, algebra.M2)


def hopf_algebroid(chk):
    coalgebra.verify_bialgebroid(chk, degree_bound=4)
    coalgebra.verify_hopf(chk, degree_bound=3)


def matelem_cross(chk):
    corep.verify_matelem(chk, N_max=4)
    for N in range(4):
        corep.verify_corep(chk, N, coproduct_max=3)


def unitarizability(chk):
    for N in range(4):
        corep.verify_corep(chk, N, coproduct_max=3)
    dynrep.verify_formal_unitarity(chk, k_max=4, N_max=3)


def racah(chk):
    for M in range(5):
        for N in range(5):
            dynrep.verify_racah_orthogonality(chk, M, N)


def cg_corep(chk):
    for M in range(4):
        for N in range(4):
            corep.verify_cg(chk, M, N)


def dynamical(chk):
    dynrep.verify_representation(chk, k_max=4)
    dynrep.verify_tensor(chk, k_max=3, p_max=4)
    dynrep.verify_cg_dyn(chk, s_max=3, k_max=3)


def biedenharn(chk):
    dynrep.verify_biedenharn_elliott(chk, bound=3)


def addition(chk):
    dynrep.verify_addition_formula(chk, bound=2, z_max=2)


def haar_suite(chk):
    haar.verify_haar(chk, N_max=3)
    haar.verify_invariance(chk, bound=3)
    haar.verify_schur(chk, M_max=2)
    haar.verify_aw_orthogonality(chk, bound=2)


def kernel(chk):
    algebra.verify_kernel(chk, triples=30, words=50, N_max=4)


# number, name, runner, time limit in seconds, check ids that must be present
CRITERIA = [
    (1, "QDYB", qdyb, 1, {"qdyb"}),
    (2, "RLL consistency", rll, 5, {"rll"}),
    (3, "Hopf algebroid", hopf_algebroid, 60,
     {"coassociativity", "counit-left", "counit-right", "antipode-left", "antipode-right",
      "coproduct-antipode", "counit-antipode", "star-involution", "coproduct-star",
      "counit-star", "antipode-star"}),
    (4, "matrix element cross-check", matelem_cross, 120,
     {"matelem-backends", "coproduct", "counit"}),
    (5, "unitarizability", unitarizability, 60,
     {"unitarity", "unitarity-lemma", "orthogonality-first", "orthogonality-second",
      "star", "phi-symmetry"}),
    (6, "q-Racah orthogonality", racah, 60,
     {"racah-orthogonality", "racah-dual-orthogonality", "racah-orthogonality-action",
      "orthogonality-action-first", "orthogonality-action-second"}),
    (7, "Clebsch-Gordan corepresentations", cg_corep, 120,
     {"cg-intertwining", "cg-orthogonality", "cg-dual-orthogonality", "zs-6w5",
      "cg-linearization", "cg-backends"}),
    (8, "dynamical decomposition", dynamical, 60,
     {"relations-annihilate", "xi-scalar", "eigvec-xi", "intertwiner"}),
    (9, "Biedenharn-Elliott", biedenharn, 120,
     {"add2", "pentagonal-substituted", "conv", "p2"}),
    (10, "addition formula", addition, 30,
     {"addition-formula", "little-jacobi-limit"}),
    (11, "Haar functional", haar_suite, 120,
     {"haar-matelem", "left-invariance", "right-invariance", "schur", "aw-orthogonality"}),
    (12, "kernel soundness", kernel, 60,
     {"idempotent", "linear", "associative", "confluence", "basis-rank"}),
]


@pytest.mark.parametrize("number,name,runner,limit,ids", CRITERIA,
                         ids=[f"{c[0]:02d}-{c[1].replace(' ', '-')}" for c in CRITERIA])
def test_criterion(number, name, runner, limit, ids):
    chk = Checker(f"criterion-{number}", seed=0, points=20)
    start = time.perf_counter()
    runner(chk)
    elapsed = time.perf_counter() - start
    seen = {r["id"] for r in chk.records}
    failed = chk.failures()
    ok = not failed and elapsed < limit and ids <= seen
    RESULTS[number] = (name, ok, elapsed, limit, len(chk.records), len(failed))
    assert ids <= seen, f"missing checks: {sorted(ids - seen)}"
    assert not failed, chk.summary()
    assert elapsed < limit, f"{elapsed:.1f}s exceeds {limit}s"
