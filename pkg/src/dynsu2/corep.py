"""
Corepresentations V_N: matrix elements, unitarizability, Peter-Weyl
independence and Clebsch-Gordan coefficients.

The matrix elements t^N_{kj} are defined by

    Delta(gamma^{N-k} alpha^k) = sum_j t^N_{kj} (x) gamma^{N-j} alpha^j,

and t^N_{kj} has bidegree (2k-N, 2j-N).
"""

from __future__ import annotations

import json
from collections import defaultdict
from functools import lru_cache

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from . import qseries as qs
from .algebra import (
    M2, SL2, AlgElement, antipode, counit, embed_l, embed_r, phi_auto, star,
    word_nf, xi_poly_element, _word_display,
)
from .coalgebra import TensorElement, coproduct
from .scalars import (
    ONE, ZERO, DifferenceOperator, PoleAtPoint, Sampler, add_many, evaluate,
    prod, q, qpow, random_point, rename, subst,
)

COMBINATORIAL = "combinatorial"
FACTORED = "factored"
BACKENDS = (COMBINATORIAL, FACTORED)

Q2 = q ** 2


class IndexOutOfRange(ValueError):
    pass


class RankDeficient(ValueError):
    def __init__(self, witness):
        super().__init__(f"matrix elements are linearly dependent: {witness}")
        self.witness = witness


def _check(N, *idx):
    if N < 0 or any(not 0 <= i <= N for i in idx):
        raise IndexOutOfRange(f"indices {idx} outside 0..{N}")


@lru_cache(maxsize=None)
def qp(expr, k):
    """(q^{expr}; q^2)_k for an affine exponent string in lambda, mu."""
    return qs.qpoch(qpow(expr), k)


# ---------------------------------------------------------------------------
# matrix elements

def _combinatorial(N, k, j, mode):
    out = AlgElement.zero(mode)
    for l in range(max(0, j + k - N), min(j, k) + 1):
        coef = (qs.qbinom(N - k, j - l) * qs.qbinom(k, l)
                * q ** (j * (j + 2 * k - N) + l * (3 * l - 3 * k - 3 * j + N))
                * qp(f"{2 * (j - N - 1)}-2*mu", j - l)
                / qp(f"{2 * (j + k - l - N - 1)}-2*mu", j - l))
        w = "c" * (j - l) + "d" * (N - k - j + l) + "a" * l + "b" * (k - l)
        out = out + AlgElement.word(w, mode, coef)
    return out


def p_element(N, k, j):
    """The central factor P_n of t^N_{kj} as a polynomial in Xi."""
    n = {(True, True): k, (True, False): N - j,
         (False, True): j, (False, False): N - k}[(k <= j, k + j <= N)]
    a = abs(N - k - j)
    b = abs(j - k)
    pre = (q ** (j * (j - N)) * qpow(f"{n}*lam-{n}*mu+{n * (1 + n + a)}")
           * qs.qpoch(Q2, N - n)
           / (qs.qpoch(Q2, j) * qs.qpoch(Q2, N - j)
              * qp("2*lam+4", n) * qp(f"{2 * a}-2*mu", n)))
    coeffs = qs.askey_wilson_poly(
        n, qpow(f"mu-lam+{1 + 2 * b}"), qpow("lam-mu+1"), qpow("lam+mu+3"),
        qpow(f"-lam-mu-1+{2 * a}"))
    return xi_poly_element([pre * c for c in coeffs])


def _factored(N, k, j):
    W = lambda w: AlgElement.word(w, SL2)
    P = p_element(N, k, j)
    if k <= j and k + j <= N:
        return W("c" * (j - k) + "d" * (N - k - j)) * P
    if k <= j:
        return W("c" * (j - k)) * P * W("a" * (k + j - N))
    if k + j <= N:
        return W("d" * (N - k - j)) * P * W("b" * (k - j))
    return P * W("a" * (k + j - N) + "b" * (k - j))


_MATELEM = {}


def matelem(N, k, j, backend=FACTORED, mode=SL2):
    """t^N_{kj} in normal form."""
    _check(N, k, j)
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    if backend == FACTORED and mode != SL2:
        raise ValueError("the factored backend lives in F_R(SL(2))")
    key = (N, k, j, backend, mode)
    if key not in _MATELEM:
        if backend == COMBINATORIAL:
            _MATELEM[key] = _combinatorial(N, k, j, mode)
        else:
            _MATELEM[key] = _factored(N, k, j)
    return _MATELEM[key]


def matelem_table(N, backend=FACTORED):
    return [[matelem(N, k, j, backend) for j in range(N + 1)] for k in range(N + 1)]


def table_json(N, backend=FACTORED):
    """JSON export: one entry per (k, j) with the normal-form monomials."""
    entries = []
    for k in range(N + 1):
        for j in range(N + 1):
            t = matelem(N, k, j, backend).pruned()
            entries.append({
                "N": N, "k": k, "j": j,
                "terms": [[_word_display(w), str(f)] for w, f in sorted(t.terms.items())],
            })
    return json.dumps({"N": N, "backend": backend, "entries": entries}, indent=2)


@lru_cache(maxsize=None)
def gamma_corep(N, k):
    """Normalizing function Gamma^N_k(lambda) of V_N."""
    _check(N, k)
    return qs.qbinom(N, k) * qp(f"{2 * (k - N - 1)}-2*lam", k) / qp("-2*lam", k)


@lru_cache(maxsize=None)
def unl_factor(N, k):
    """C^N_k(lambda, mu) with S(gamma^{N-k} alpha^k)* = C^N_k alpha^k beta^{N-k}."""
    return ((1 - qpow("-2*lam-2")) / (1 - qpow(f"-2*lam-2+{2 * N}"))
            * q ** (k * (k - N)) * qp("-2*mu", k) / qp(f"{2 * (k - N - 1)}-2*mu", k))


def phi_tensor(t):
    """sigma (Phi (x) Phi) on a two-factor TensorElement."""
    out = TensorElement({}, 2, t.mode)
    for (w1, w2), c in t.terms.items():
        g = subst(c, {"lam": "-2-mu", "rho": "-2-rho", "mu": "-2-lam"})
        x2 = phi_auto(AlgElement({w2: ONE}, t.mode))
        x1 = phi_auto(AlgElement({w1: ONE}, t.mode))
        out = out + TensorElement.from_factors(x2, x1).scale(g)
    return out


# ---------------------------------------------------------------------------
# verification

ANCHOR_MEP = "the matrix elements $t_{kj}^N$ are given by"
ANCHOR_LMEP = "in terms of Askey--Wilson polynomials"


def verify_matelem(chk, N_max=4):
    """Backend agreement and the defining expansion in F_R(M(2))."""
    for N in range(N_max + 1):
        for k in range(N + 1):
            for j in range(N + 1):
                chk.equal("matelem-backends", ANCHOR_LMEP, [N, k, j],
                          matelem(N, k, j, COMBINATORIAL), matelem(N, k, j, FACTORED))
                t = matelem(N, k, j)
                chk.truth("matelem-bidegree", ANCHOR_MEP, [N, k, j],
                          all(d == (2 * k - N, 2 * j - N) for d in t.bidegrees()))
        if N <= 3:
            for k in range(N + 1):
                lhs = coproduct(AlgElement.word("c" * (N - k) + "a" * k, M2))
                rhs = TensorElement({}, 2, M2)
                for j in range(N + 1):
                    rhs = rhs + TensorElement.from_factors(
                        matelem(N, k, j, COMBINATORIAL, M2),
                        AlgElement.word("c" * (N - j) + "a" * j, M2))
                chk.equal("matelem-expansion", ANCHOR_MEP, [N, k], lhs, rhs)
    return chk


def verify_corep(chk, N, coproduct_max=3):
    """Corepresentation identities for V_N."""
    t = lambda k, j: matelem(N, k, j)
    R = range(N + 1)
    anchor = "may be stated as"
    for k in R:
        for l in R:
            if N <= coproduct_max:
                rhs = TensorElement({}, 2, SL2)
                for j in R:
                    rhs = rhs + TensorElement.from_factors(t(k, j), t(j, l))
                chk.equal("coproduct", anchor, [N, k, l], coproduct(t(k, l)), rhs)
                chk.equal("phi-coproduct", "There is an algebra automorphism $\\Phi$", [N, k, l],
                          coproduct(phi_auto(t(k, l))), phi_tensor(coproduct(t(k, l))))
            expected = DifferenceOperator.T(-(2 * k - N)) if k == l else DifferenceOperator()
            chk.equal("counit", anchor, [N, k, l], counit(t(k, l)), expected)
            delta = AlgElement.one() if k == l else AlgElement.zero()
            s1 = add_elements(antipode(t(k, j)) * t(j, l) for j in R)
            s2 = add_elements(t(k, j) * antipode(t(j, l)) for j in R)
            chk.equal("antipode-left", "For later use we observe that", [N, k, l], s1, delta)
            chk.equal("antipode-right", "For later use we observe that", [N, k, l], s2, delta)
            chk.equal("orthogonality-first", "one obtains the orthogonality relations", [N, k, l],
                      aor_first(N, k, l), delta)
            chk.equal("orthogonality-second", "one obtains the orthogonality relations", [N, k, l],
                      aor_second(N, k, l), delta)
    for k in R:
        for j in R:
            chk.equal("star", "This follows easily from Proposition", [N, k, j],
                      star(t(k, j)), t(N - k, N - j).scale((-q) ** (k - j)))
            lhs = phi_auto(t(k, j)).scale(qs.qbinom(N, k) * q ** (k * (k - N)))
            rhs = t(N - j, N - k).scale(qs.qbinom(N, j) * q ** (j * (j - N)))
            chk.equal("phi-symmetry", "There is an algebra automorphism $\\Phi$", [N, k, j], lhs, rhs)
            lhs = star(antipode(t(k, j))).scale(rename(gamma_corep(N, k), lam="mu"))
            rhs = t(j, k).scale(gamma_corep(N, j))
            chk.equal("unitarity", "$V_N$ is a unitarizable corepresentation", [N, k, j], lhs, rhs)
    for k in R:
        w = AlgElement.word("c" * (N - k) + "a" * k)
        lhs = star(antipode(w))
        rhs = AlgElement.word("a" * k + "b" * (N - k), SL2, unl_factor(N, k))
        chk.equal("unitarity-lemma", "In the algebra $\\mathcal F_R(\\mathrm{SU}(2))$", [N, k], lhs, rhs)
        # Gamma^N_k(mu) C^N_k / ([N k] q^{k(k-N)}) does not depend on k
        ratio = lambda i: (unl_factor(N, i) * rename(gamma_corep(N, i), lam="mu")
                           / (qs.qbinom(N, i) * q ** (i * (i - N))))
        chk.equal("unitarity-normalization", "$V_N$ is a unitarizable corepresentation",
                  [N, k], ratio(k), ratio(0))
    return chk


def add_elements(xs, mode=SL2):
    acc = defaultdict(list)
    for x in xs:
        for w, f in x.terms.items():
            acc[w].append(f)
    return AlgElement({w: add_many(v) for w, v in acc.items()}, mode)


def aor_first(N, k, l):
    """sum_j (t_jk)* c_j(lambda, mu) t_jl."""
    terms = []
    for j in range(N + 1):
        c = (qs.qbinom(N, j) / qs.qbinom(N, k)
             * qp(f"{2 * (j - N - 1)}-2*lam", j) * qp("-2*mu", k)
             / (qp("-2*lam", j) * qp(f"{2 * (k - N - 1)}-2*mu", k)))
        terms.append(star(matelem(N, j, k)) * AlgElement.scalar(c) * matelem(N, j, l))
    return add_elements(terms)


def aor_second(N, k, l):
    """sum_j t_kj (t_lj)* c_j(lambda, mu)."""
    terms = []
    for j in range(N + 1):
        c = (qs.qbinom(N, l) / qs.qbinom(N, j)
             * qp(f"{2 * (l - N - 1)}-2*lam", l) * qp("-2*mu", j)
             / (qp("-2*lam", l) * qp(f"{2 * (j - N - 1)}-2*mu", j)))
        terms.append(matelem(N, k, j) * star(matelem(N, l, j)) * c)
    return add_elements(terms)


# ---------------------------------------------------------------------------
# Peter-Weyl independence

def _value(sampler, f, j):
    attempt = 0
    pt = sampler.base[j]
    while True:
        try:
            return sampler.evaluator.value(f, pt)
        except PoleAtPoint:
            attempt += 1
            if attempt > sampler.retries:
                raise
            pt = random_point(f"{sampler.seed}|rank|{j}|{attempt}")


def rank_at_point(rows, seed=0):
    """Exact rank of the coefficient matrix of AlgElements rows, with every
    coefficient evaluated at one random point."""
    sampler = Sampler(seed, 1)
    words = sorted({w for r in rows for w in r.terms})
    pt = sampler.base[0]
    data = []
    for r in rows:
        row = []
        for w in words:
            f = r.terms.get(w)
            if f is None:
                row.append(QQ(0))
            else:
                v = sampler.evaluator.value(f, pt)
                row.append(QQ(int(v.numerator), int(v.denominator)))
        data.append(row)
    if not data or not words:
        return 0
    return DomainMatrix(data, (len(data), len(words)), QQ).rank()


def peter_weyl_rank(N_max, seed=0):
    """Rank of {t^N_{kj} : N <= N_max} over the coefficient ring; raises
    RankDeficient when the rank falls short of the number of elements."""
    rows, labels = [], []
    for N in range(N_max + 1):
        for k in range(N + 1):
            for j in range(N + 1):
                rows.append(matelem(N, k, j))
                labels.append((N, k, j))
    for attempt in range(5):
        try:
            r = rank_at_point(rows, f"{seed}|{attempt}")
            break
        except PoleAtPoint:
            continue
    else:
        raise PoleAtPoint("rank sampling")
    if r < len(rows):
        raise RankDeficient({"rank": r, "elements": len(rows), "labels": labels})
    return {"N_max": N_max, "elements": len(rows), "rank": r}


# ---------------------------------------------------------------------------
# Clebsch-Gordan coefficients

CGW = "cgw"
CGP = "cgp"


def cg_admissible(M, N, s, j, k):
    return 0 <= j <= M and 0 <= k <= N and 0 <= s <= min(M, N) and 0 <= j + k - s <= M + N - 2 * s


def _cgw(M, N, s, j, k):
    terms = []
    for m in range(max(0, s - j, k + s - N), min(s, k, M - j) + 1):
        c = (qs.qbinom(M - s, j + m - s) * qs.qbinom(N - s, k - m) * qs.qbinom(s, m)
             / (qs.qbinom(M, j) * qs.qbinom(N, k))
             * (-1) ** (s + m)
             * q ** ((N - k - s) * (j - s) - s + m * (1 + 2 * j + 2 * N + 3 * m - 2 * k - 4 * s))
             * qp(f"{2 * (j + k + s - M - N - 1)}-2*lam", j + m - s)
             * qp(f"{2 * (2 * j + k + m - s - M)}-2*lam", s - m)
             * qp(f"{2 * (j + m - s)}-2*lam", s - m)
             / (qp(f"{2 * (j + m - M - 1)}-2*lam", j + m - s)
                * qp(f"{2 * (2 * j + 2 * m - s - M)}-2*lam", s - m)
                * qp(f"{2 * (2 * j + m - s - M - 1)}-2*lam", s - m)))
        terms.append(c)
    return add_many(terms) if terms else ZERO


def _cgp(M, N, s, j, k):
    pre = (q ** ((j - s) * (N - k) + s * j)
           * qs.qpoch(q ** (-2 * (j + k)), s) * qp(f"{2 * (j + k - M - N - 1)}-2*lam", j)
           / (qs.qpoch(q ** (-2 * N), s) * qp(f"{2 * (j - M - 1)}-2*lam", j)))
    series = qs.phi43(
        [q ** (-2 * s), q ** (2 * (s - M - N - 1)), q ** (-2 * j), qpow(f"{2 * (j - M - 1)}-2*lam")],
        [q ** (-2 * M), q ** (-2 * (j + k)), qpow(f"{2 * (j + k - M - N - 1)}-2*lam")],
        Q2, min(s, j))
    return pre * series


_CG = {}


def cg(M, N, s, j, k, backend=CGP):
    """C^{MN,M+N-2s}_{jk,j+k-s}(lambda); zero unless grading-admissible."""
    if not (0 <= s <= min(M, N)) or not (0 <= j <= M) or not (0 <= k <= N):
        raise IndexOutOfRange(f"cg({M}, {N}, {s}, {j}, {k})")
    if not cg_admissible(M, N, s, j, k):
        return ZERO
    key = (M, N, s, j, k, backend)
    if key not in _CG:
        if backend == CGW:
            _CG[key] = _cgw(M, N, s, j, k)
        elif backend == CGP:
            _CG[key] = _cgp(M, N, s, j, k)
        else:
            raise ValueError(f"unknown backend {backend!r}")
    return _CG[key]


@lru_cache(maxsize=None)
def zconst(M, N, s):
    """The normalization Z_s of C_s C_s^*."""
    return ((-1) ** s * q ** (-s * (s + 1))
            * qs.qpochs([Q2, q ** (2 * (s - M - N - 1))], s)
            / qs.qpochs([q ** (-2 * M), q ** (-2 * N)], s))


def zconst_w65(M, N, s):
    """Z_s as the lambda-dependent 6W5 expression."""
    pre = ((-1) ** s * q ** (-s * (s + 1))
           * qs.qpochs([Q2, qpow(f"{2 * (s - M - N - 1)}-2*lam")], s)
           / qs.qpochs([q ** (-2 * N), qpow(f"-2*lam-{2 * M}")], s))
    return pre * qs.w65(qpow(f"-2*lam-{2 * (1 + M)}"),
                        [q ** (-2 * s), q ** (2 * (1 + N - s)), qpow("-2*lam")],
                        q ** (2 * (2 * s - M - N - 1)), Q2, s)


def cg_special(M, N, s, j, k):
    """C^{MN,M+N-2s}_{jk,0} for j + k = s."""
    return ((-1) ** j * q ** (k * (N - s) - j)
            * qs.qpoch(Q2, s) * qs.qpoch(Q2, M - j) * qs.qpoch(Q2, N - k) * qp("-2*lam", j)
            / (qs.qpoch(Q2, M) * qs.qpoch(Q2, N) * qp(f"{2 * (j - M - 1)}-2*lam", j)))


def _gamma_shift(N, k, a):
    """Gamma^N_k(lambda + a)."""
    from .scalars import shift
    return shift(gamma_corep(N, k), "lam", a)


def _weight_factor(M, N, j, k, s, L):
    """Gamma^M_j(lam) Gamma^N_k(lam + M - 2j) / Gamma^{M+N-2s}_{L-s}(lam)."""
    return gamma_corep(M, j) * _gamma_shift(N, k, M - 2 * j) / gamma_corep(M + N - 2 * s, L - s)


def cg_intertwining_sides(M, N, m, n, p, s):
    """Both sides of the Clebsch-Gordan formula for V_M (x) V_N -> V_{M+N-2s}."""
    terms = []
    for k in range(M + 1):
        l = p + s - k
        if 0 <= l <= N:
            c = cg(M, N, s, k, l)
            terms.append(embed_r(c) * matelem(M, m, k) * matelem(N, n, l))
    lhs = add_elements(terms)
    target = m + n - s
    if 0 <= target <= M + N - 2 * s:
        rhs = matelem(M + N - 2 * s, target, p).scale(cg(M, N, s, m, n))
    else:
        rhs = AlgElement.zero()
    return lhs, rhs


def lin_sides(M, N, k, x, l, y):
    lhs = matelem(M, k, x) * matelem(N, l, y)
    terms = []
    for s in range(min(M, N, k + l, M + N - k - l, x + y, M + N - x - y) + 1):
        w = rename(_weight_factor(M, N, x, y, s, x + y), lam="mu") / zconst(M, N, s)
        c = w * cg(M, N, s, k, l) * rename(cg(M, N, s, x, y), lam="mu")
        terms.append(matelem(M + N - 2 * s, k + l - s, x + y - s).scale(c))
    return lhs, add_elements(terms)


def _racah_ratio_rank_one(chk, ident, anchor, idx, table):
    """table[(a, b)] = (value, polynomial); checks value/polynomial = g(a) h(b)."""
    keys = sorted(table)
    if not keys:
        return
    a0, b0 = keys[0]
    ratio = {key: v / r for key, (v, r) in table.items()}
    exprs = []
    for (a, b) in keys:
        if (a, b0) in ratio and (a0, b) in ratio:
            exprs.append(ratio[a, b] * ratio[a0, b0] - ratio[a, b0] * ratio[a0, b])
    chk.zero(ident, anchor, idx, exprs)


def verify_cg(chk, M, N, exhaustive=False):
    """Clebsch-Gordan identities for V_M (x) V_N."""
    smax = min(M, N)
    a_cgp = "we can write this as"
    for s in range(smax + 1):
        for j in range(M + 1):
            for k in range(N + 1):
                if cg_admissible(M, N, s, j, k):
                    chk.equal("cg-backends", a_cgp, [M, N, s, j, k], cg(M, N, s, j, k, CGW),
                              cg(M, N, s, j, k, CGP))
                else:
                    chk.truth("cg-grading", a_cgp, [M, N, s, j, k],
                              cg(M, N, s, j, k).is_structural_zero())
        chk.equal("zs-6w5", "reduces to a ${}_6W_5$ sum", [M, N, s], zconst_w65(M, N, s),
                  zconst(M, N, s))
        for j in range(min(s, M) + 1):
            if s - j <= N:
                chk.equal("cg-special", "the sum reduces", [M, N, s, j],
                          cg(M, N, s, j, s - j), cg_special(M, N, s, j, s - j))
    # s = 0 is multiplication
    for j in range(M + 1):
        for k in range(N + 1):
            prodw = AlgElement.word("c" * (M - j) + "a" * j + "c" * (N - k) + "a" * k)
            target = AlgElement.word("c" * (M + N - j - k) + "a" * (j + k), SL2, cg(M, N, 0, j, k))
            chk.equal("cg-multiplication", "is an intertwiner", [M, N, j, k], prodw, target)
    # intertwining
    pairs = [(m, n) for m in range(M + 1) for n in range(N + 1)] if exhaustive else [(0, N)]
    for s in range(smax + 1):
        for m, n in pairs:
            for p in range(M + N - 2 * s + 1):
                lhs, rhs = cg_intertwining_sides(M, N, m, n, p, s)
                chk.equal("cg-intertwining", "may be written as", [M, N, m, n, p, s], lhs, rhs)
    # orthogonality
    for L in range(M + N + 1):
        top = min(L, M, N, M + N - L)
        js = range(max(0, L - N), min(L, M) + 1)
        for s in range(top + 1):
            for t in range(top + 1):
                rhs = add_many([_weight_factor(M, N, j, L - j, t, L)
                                * cg(M, N, s, j, L - j) * cg(M, N, t, j, L - j) for j in js])
                lhs = zconst(M, N, s) if s == t else ZERO
                chk.equal("cg-orthogonality", "orthogonality relations for Clebsch--Gordan coefficients",
                          [M, N, L, s, t], lhs, rhs)
        for j in js:
            for k in js:
                rhs = add_many([_weight_factor(M, N, j, L - j, s, L) / zconst(M, N, s)
                                * cg(M, N, s, j, L - j) * cg(M, N, s, k, L - k)
                                for s in range(top + 1)])
                chk.equal("cg-dual-orthogonality", "the orthogonality of the system",
                          [M, N, L, j, k], ONE if j == k else ZERO, rhs)
        # q-Racah form: C^{.}_{j,L-j,L-s} / R_s(mu(j)) factors as g(j) h(s)
        table, dual = {}, {}
        for j in js:
            for s in range(top + 1):
                r = qs.qracah(s, j, q ** (-2 * (M + 1)), q ** (-2 * (N + 1)), q ** (-2 * (L + 1)),
                              qpow(f"{2 * (L - M - 1)}-2*lam"))
                table[j, s] = (cg(M, N, s, j, L - j), r)
                rd = qs.qracah(j, s, q ** (-2 * (L + 1)), qpow(f"{2 * (L - M - 1)}-2*lam"),
                               q ** (-2 * (M + 1)), q ** (-2 * (N + 1)))
                dual[j, s] = (cg(M, N, s, j, L - j), rd)
        _racah_ratio_rank_one(chk, "cg-qracah", "orthogonality of the $q$-Racah polynomials",
                              [M, N, L], table)
        _racah_ratio_rank_one(chk, "cg-dual-qracah", "dual to the $q$-Racah system of the Clebsch--Gordan coefficients", [M, N, L], dual)
    # linearization
    for k in range(M + 1):
        for x in range(M + 1):
            for l in range(N + 1):
                for y in range(N + 1):
                    lhs, rhs = lin_sides(M, N, k, x, l, y)
                    chk.equal("cg-linearization", "Clebsch--Gordan formula dual to", [M, N, k, x, l, y],
                              lhs, rhs)
    return chk
