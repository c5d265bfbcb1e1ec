"""Named verification suites, shared by the CLI and the test-suite."""

from __future__ import annotations

from . import algebra, coalgebra, corep, dynrep, haar, qseries
from .report import Checker


def _qdyb(chk, bound, exhaustive, seed):
    algebra.verify_qdyb(chk)


def _rll(chk, bound, exhaustive, seed):
    algebra.verify_rll(chk, algebra.M2)


def _kernel(chk, bound, exhaustive, seed):
    algebra.verify_kernel(chk, N_max=bound, seed=seed)


def _hopf(chk, bound, exhaustive, seed):
    coalgebra.verify_hopf(chk, degree_bound=bound, seed=seed)
    coalgebra.verify_hat(chk, degree_bound=min(bound, 2), seed=seed)


def _bialgebroid(chk, bound, exhaustive, seed):
    coalgebra.verify_bialgebroid(chk, degree_bound=bound, seed=seed)


def _qseries(chk, bound, exhaustive, seed):
    qseries.verify_qseries(chk, bound)
    qseries.verify_symmetries(chk, N_max=bound)


def _matelem(chk, bound, exhaustive, seed):
    corep.verify_matelem(chk, N_max=bound)
    algebra.verify_hd(chk, s_max=min(bound, 3))
    try:
        info = corep.peter_weyl_rank(bound, seed)
        chk.truth("peter-weyl-rank", "form a basis for $\\mathcal F_R(\\mathrm{SL}(2))$ as a module",
                  [bound], True, info)
    except corep.RankDeficient as exc:
        chk.truth("peter-weyl-rank", "form a basis for $\\mathcal F_R(\\mathrm{SL}(2))$ as a module",
                  [bound], False, exc.args[0])


def _unitarity(chk, bound, exhaustive, seed):
    for N in range(bound + 1):
        corep.verify_corep(chk, N, coproduct_max=bound)
    dynrep.verify_formal_unitarity(chk, k_max=bound + 1, N_max=min(bound, 2))
    dynrep.verify_invariant_subspace(chk, k_max=bound + 1)


def _racah(chk, bound, exhaustive, seed):
    for M in range(bound + 1):
        for N in range(bound + 1):
            dynrep.verify_racah_orthogonality(chk, M, N)
    dynrep.verify_tfun(chk, N_max=min(bound, 3), m_max=min(bound, 3))


def _cg_corep(chk, bound, exhaustive, seed):
    for M in range(bound + 1):
        for N in range(bound + 1):
            corep.verify_cg(chk, M, N, exhaustive=exhaustive)


def _cg_dynrep(chk, bound, exhaustive, seed):
    dynrep.verify_representation(chk, k_max=bound + 1)
    dynrep.verify_tensor(chk, k_max=bound, p_max=bound + 1)
    dynrep.verify_cg_dyn(chk, s_max=bound, k_max=bound)


def _biedenharn(chk, bound, exhaustive, seed):
    dynrep.verify_biedenharn_elliott(chk, bound=bound)


def _addition(chk, bound, exhaustive, seed):
    dynrep.verify_addition_formula(chk, bound=bound, z_max=bound)


def _haar(chk, bound, exhaustive, seed):
    haar.verify_haar(chk, N_max=bound)
    haar.verify_moment_orthogonality(chk, d=min(bound, 4))
    haar.verify_invariance(chk, bound=bound, seed=seed)
    haar.verify_aw_orthogonality(chk, bound=min(bound, 2))


def _schur(chk, bound, exhaustive, seed):
    haar.verify_schur(chk, M_max=min(bound, 2))


# name: (runner, default bound)
SUITES = {
    "qdyb": (_qdyb, 1),
    "rll": (_rll, 1),
    "kernel": (_kernel, 4),
    "hopf": (_hopf, 3),
    "bialgebroid": (_bialgebroid, 4),
    "qseries": (_qseries, 4),
    "matelem": (_matelem, 4),
    "unitarity": (_unitarity, 3),
    "racah-orth": (_racah, 4),
    "cg-corep": (_cg_corep, 3),
    "cg-dynrep": (_cg_dynrep, 3),
    "biedenharn": (_biedenharn, 3),
    "addition": (_addition, 2),
    "haar": (_haar, 3),
    "schur": (_schur, 2),
}


def run_suite(name, bound=None, points=20, seed=0, exhaustive=False):
    """Run one suite and return its Checker."""
    runner, default = SUITES[name]
    chk = Checker(name, seed=seed, points=points)
    runner(chk, default if bound is None else bound, exhaustive, seed)
    return chk


def suite_report(name, bound=None, points=20, seed=0, exhaustive=False):
    chk = run_suite(name, bound, points, seed, exhaustive)
    config = {"bound": SUITES[name][1] if bound is None else bound, "exhaustive": exhaustive}
    return chk.report(config)


def all_report(bound=None, points=20, seed=0, exhaustive=False):
    reports = [suite_report(name, bound, points, seed, exhaustive) for name in SUITES]
    return {
        "schema": reports[0]["schema"],
        "suite": "all",
        "seed": seed,
        "points": points,
        "config": {"bound": bound, "exhaustive": exhaustive},
        "status": "pass" if all(r["status"] == "pass" for r in reports) else "fail",
        "counts": {k: sum(r["counts"][k] for r in reports) for k in ("pass", "fail", "skipped")},
        "suites": reports,
    }
