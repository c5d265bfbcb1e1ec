"""
Dynamical representations pi^omega of F_R(SL(2)) on H^omega = span{e_k},
their tensor products, and the q-Racah identities they produce.

A RepVector {k: g} stands for sum_k g(lambda) e_k, with e_k of weight
omega + 2k. In a tensor product H^{w1} (x) H^{w2} all scalars are attached to
the right slot, e_a (x) g e_b, using f v (x) w = v (x) (T_{-beta} f) w for
w of weight beta.

Representation parameters are affine forms given as strings, e.g. "om",
"om1+om2+4".
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from . import qseries as qs
from .algebra import (
    SL2, SL2_RULES, M2_RULES, AlgElement, star, xi,
)
from .coalgebra import coproduct
from .corep import (
    aor_first, aor_second, cg as cg_corep, gamma_corep, matelem, rank_at_point, zconst,
)
from .scalars import (
    ONE, ZERO, PoleAtPoint, _lift, add_many, aff, prod, q, qpow, shift, subst,
)

Q2 = q ** 2


class IndexOutOfRange(ValueError):
    pass


# ---------------------------------------------------------------------------
# affine helpers

@lru_cache(maxsize=None)
def lc(*terms):
    """Integer affine form from ints and (coefficient, spec) pairs."""
    c, coeffs = 0, {}
    for t in terms:
        if isinstance(t, int):
            c += t
            continue
        if isinstance(t, str):
            t = (1, t)
        e, spec = t
        c0, items = aff(spec)
        c += e * c0
        for v, f in items:
            coeffs[v] = coeffs.get(v, 0) + e * f
    return aff(c, **coeffs)


@lru_cache(maxsize=None)
def Q(*terms):
    """q raised to an affine form built by lc."""
    return qpow(lc(*terms))


@lru_cache(maxsize=None)
def qp(k, *terms):
    """(q^{form}; q^2)_k."""
    return qs.qpoch(Q(*terms), k)


def aw(n, xi_val, a, b, c, d):
    """Askey-Wilson p_n((xi + 1/xi)/2; a, b, c, d; q^2)."""
    return qs.askey_wilson(n, xi_val, a, b, c, d)


@lru_cache(maxsize=None)
def racah(n, x, a, b, c, d):
    return qs.qracah(n, x, a, b, c, d)


# ---------------------------------------------------------------------------
# the representation pi^omega

@lru_cache(maxsize=None)
def A_fn(k, om="om"):
    return q ** (-k) * (1 - Q((2, "lam"), (-2, om), 2 - 2 * k)) / (1 - Q((2, "lam"), (-2, om), 2 - 4 * k))


@lru_cache(maxsize=None)
def B_fn(k, om="om"):
    if k == 0:
        return ZERO
    return ((1 - q ** (2 * k)) * (1 - Q((2, om), 2 * k - 2))
            / ((1 - Q((2, "lam"), 2)) * (1 - Q((2, om), (-2, "lam"), 4 * k - 6))))


@lru_cache(maxsize=None)
def D_fn(k, om="om"):
    return q ** k * (1 - Q((2, "lam"), 2 - 2 * k)) / (1 - Q((2, "lam"), 2))


class RepVector:
    """sum_k g_k(lambda) e_k in H^omega."""

    __slots__ = ("terms", "om")

    def __init__(self, terms=None, om="om"):
        self.om = om
        self.terms = {k: _lift(g) for k, g in (terms or {}).items()
                      if not _lift(g).is_structural_zero()}

    @classmethod
    def basis(cls, k, om="om", coef=ONE):
        return cls({k: coef}, om)

    def __add__(self, other):
        terms = dict(self.terms)
        for k, g in other.terms.items():
            terms[k] = terms[k] + g if k in terms else g
        return RepVector(terms, self.om)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, f):
        f = _lift(f)
        return RepVector({k: f * g for k, g in self.terms.items()}, self.om)

    def coefficient(self, k):
        return self.terms.get(k, ZERO)

    def difference(self, other):
        keys = set(self.terms) | set(other.terms)
        return [self.coefficient(k) - other.coefficient(k) for k in sorted(keys)]

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({g})*e_{k}" for k, g in sorted(self.terms.items()))

    __repr__ = __str__


def act_letter(ch, k, g, om="om"):
    """pi^omega(letter) (g e_k) as a list of (index, coefficient)."""
    if ch == "a":
        return [(k, A_fn(k, om) * shift(g, "lam", -1))]
    if ch == "b":
        return [] if k == 0 else [(k - 1, B_fn(k, om) * shift(g, "lam", 1))]
    if ch == "c":
        return [(k + 1, -1 / q * shift(g, "lam", -1))]
    return [(k, D_fn(k, om) * shift(g, "lam", 1))]


def moment(f, k, om="om"):
    """pi^omega of f(lambda, mu) on e_k: lambda -> lambda - omega - 2k, mu -> lambda."""
    return subst(f, {"lam": lc("lam", (-1, om), -2 * k), "mu": aff("lam")})


def act_terms(pairs, v):
    """pi^omega(sum f w) v for (f, w) pairs with arbitrary (not necessarily
    normal) words w."""
    acc = defaultdict(list)
    for f, w in pairs:
        f = _lift(f)
        for k0, g0 in v.terms.items():
            state = [(k0, g0)]
            for ch in reversed(w):
                state = [r for k, g in state for r in act_letter(ch, k, g, v.om)]
            for k, g in state:
                acc[k].append(moment(f, k, v.om) * g)
    return RepVector({k: add_many(gs) for k, gs in acc.items()}, v.om)


def act(x, v):
    """pi^omega(x) v for an AlgElement x."""
    if x.mode != SL2:
        raise ValueError("pi^omega is a representation of F_R(SL(2))")
    return act_terms([(f, w) for w, f in x.terms.items()], v)


def defining_relations():
    """The defining relations of F_R(SL(2)) as lists of (coefficient, word)."""
    out = {}
    for rules in (SL2_RULES, M2_RULES):
        for pair, rhs in rules.items():
            out[pair] = [(ONE, pair)] + [(-_lift(f), w) for f, w in rhs]
    return out


@lru_cache(maxsize=None)
def gamma_rep(k, om="om"):
    """Normalizing function Gamma^omega_k(lambda) of H^omega."""
    return (qp(k, 2) * qp(k, (2, om))
            / (qp(k, (2, "lam"), 2 - 2 * k) * qp(k, (2, om), (-2, "lam"), 2 * k - 2)))


# ---------------------------------------------------------------------------
# T_{kjm}

def _tfun_racah(N, k, j, m, om):
    return ((-1) ** (j + k) * Q((2 * k, "lam"), 2 * k + m * (N - k - j) + (k - j) * (N - j + 1))
            * qs.qbinom(N, j)
            * qp(N - k - j, (2, "lam"), 2 + 2 * k - 2 * j - 2 * m)
            * qp(k, -2 * (m + j)) * qp(k, (-2, om), 2 - 2 * m - 2 * j)
            / (qp(N - j, (2, "lam"), 2 - 2 * j) * qp(k, (2, "lam"), (-2, om), 4 + 2 * N - 4 * j - 4 * m))
            * racah(j, k, q ** (-2 * (N + 1)), Q((-2, "lam"), -2), q ** (-2 * (m + j + 1)),
                    Q((2, "lam"), (-2, om), 2 - 2 * m - 2 * j)))


def _tfun_aw(N, k, j, m, om, case=None):
    if case is None:
        case = {(True, True): 1, (True, False): 2, (False, True): 3, (False, False): 4}[(k <= j, k + j <= N)]
    xv = Q((1, om), -1)
    den = qp(k, (2, "lam"), (-2, om), 4 + 2 * N - 4 * j - 4 * m)
    if case == 1:
        pre = ((-1) ** j * Q((2 * k, "lam"), (-k, om), k * (3 + N + k - 3 * j - 3 * m) + (m - j) * (N - j) - j)
               * qs.qpoch(Q2, N - k) * qp(N - k - j, (2, "lam"), 2 + 2 * k - 2 * j - 2 * m)
               / (qs.qpoch(Q2, j) * qs.qpoch(Q2, N - j) * qp(N - j, (2, "lam"), 2 - 2 * j) * den))
        p = aw(k, xv, Q((1, om), 1 + 2 * (m + j - k)), Q((-1, om), 1 - 2 * m),
               Q((-1, om), (2, "lam"), 3 + 2 * (N - 2 * j - m)), Q((1, om), (-2, "lam"), -1 - 2 * (k - j - m)))
    elif case == 2:
        pre = ((-1) ** (N - k)
               * Q((2 * (N - j), "lam"), (-(N - j), om), (N - j) * (3 + N + k - 4 * j - m) + k * (1 - m) - N)
               * qp(k + j - N, (2, "lam"), (-2, om), 4 + 2 * N - 4 * j - 2 * m)
               / (qs.qpoch(Q2, N - j) * qp(N - j, (2, "lam"), 2 - 2 * j) * den))
        p = aw(N - j, xv, Q((1, om), 1 + 2 * (m + j - k)), Q((-1, om), 1 - 2 * m),
               Q((-1, om), (2, "lam"), 3 + 2 * (k - j - m)), Q((1, om), (-2, "lam"), -1 - 2 * (N - 2 * j - m)))
    elif case == 3:
        pre = ((-1) ** k * Q((2 * k, "lam"), (-j, om), k * (3 + N - j - m) - j * (1 + N + 3 * m) + m * N)
               * qp(N - k - j, (2, "lam"), 2 + 2 * k - 2 * j - 2 * m)
               * qp(k - j, -2 * m) * qp(k - j, (-2, om), 2 - 2 * m)
               / (qs.qpoch(Q2, j) * qp(N - j, (2, "lam"), 2 - 2 * j) * den))
        p = aw(j, xv, Q((1, om), 1 + 2 * m), Q((-1, om), 1 - 2 * (m + j - k)),
               Q((-1, om), (2, "lam"), 3 + 2 * (N - 2 * j - m)), Q((1, om), (-2, "lam"), -1 - 2 * (k - j - m)))
    else:
        pre = ((-1) ** (N - j)
               * Q((2 * (N - j), "lam"), (-(N - j), om), (k - j, om),
                   (N - j) * (2 + N + k - 4 * j - m) + (k - j) * (1 + j - k + 2 * m) - m * k)
               * qs.qpoch(Q2, k) * qp(k - j, -2 * m) * qp(k - j, (-2, om), 2 - 2 * m)
               * qp(k + j - N, (2, "lam"), (-2, om), 4 + 2 * N - 4 * j - 2 * m)
               / (qs.qpoch(Q2, j) * qs.qpoch(Q2, N - j) * qp(N - j, (2, "lam"), 2 - 2 * j) * den))
        p = aw(N - k, xv, Q((1, om), 1 + 2 * m), Q((-1, om), 1 - 2 * (m + j - k)),
               Q((-1, om), (2, "lam"), 3 + 2 * (k - j - m)), Q((1, om), (-2, "lam"), -1 - 2 * (N - 2 * j - m)))
    return pre * p


TFUN_BACKENDS = ("qracah", "askey-wilson")


@lru_cache(maxsize=None)
def tfun(N, k, j, m, om="om", backend="qracah", case=None):
    """T^{omega N}_{kjm}(lambda): pi^omega(t^N_{kj}) e_m = T e_{m+j-k}."""
    if not (0 <= k <= N and 0 <= j <= N and m >= 0):
        raise IndexOutOfRange(f"tfun({N}, {k}, {j}, {m})")
    if m + j - k < 0:
        return ZERO
    if backend == "qracah":
        return _tfun_racah(N, k, j, m, om)
    if backend == "askey-wilson":
        return _tfun_aw(N, k, j, m, om, case)
    raise ValueError(f"unknown backend {backend!r}")


# ---------------------------------------------------------------------------
# q-Racah orthogonality

def rk_params(M, N):
    return (q ** (-2 * (N + 1)), Q((-2, "lam"), -2), q ** (-2 * (M + 1)), Q((2, "lam"), (-2, "om"), 2 - 2 * M))


def rk_weight(M, N, j):
    return ((1 - Q((2, "lam"), (-2, "om"), 2 - 4 * M + 4 * j)) / (1 - Q((2, "lam"), (-2, "om"), 2 - 4 * M))
            * qp(j, (2, "lam"), (-2, "om"), 2 - 4 * M) * qp(j, -2 * N) * qp(j, -2 * M) * qp(j, (-2, "om"), 2 - 2 * M)
            / (qp(j, 2) * qp(j, (2, "lam"), (-2, "om"), 4 + 2 * N - 4 * M) * qp(j, (2, "lam"), (-2, "om"), 4 - 2 * M)
               * qp(j, (2, "lam"), 2 - 2 * M))
            * Q((2 * j, "lam"), 2 * j * (N + 1)))


def rk_norm(M, N, k):
    return (qp(N, (2, "om"), (-2, "lam"), -2 + 4 * M - 2 * N) * qp(N, (-2, "lam"), -2 * N)
            / (qp(N, (2, "om"), (-2, "lam"), -2 + 2 * M - 2 * N) * qp(N, (-2, "lam"), -2 * N + 2 * M))
            * (1 - Q((-2, "lam"), -2 - 2 * N)) / (1 - Q((-2, "lam"), -2 - 2 * N + 4 * k))
            * qp(k, 2) * qp(k, (-2, "lam")) * qp(k, (-2, "lam"), -2 * N + 2 * M)
            * qp(k, (2, "om"), (-2, "lam"), -2 + 2 * M - 2 * N)
            / (qp(k, (-2, "lam"), -2 - 2 * N) * qp(k, -2 * N) * qp(k, -2 * M) * qp(k, (-2, "om"), 2 - 2 * M))
            * Q((2 * k, "lam"), (-2 * k, "om"), 2 * k * (1 - 2 * M)))


def qracah_weight(x, a, b, c, d, base=Q2):
    """Standard discrete weight of the q-Racah polynomials at mu(x)."""
    a, b, c, d = (_lift(t) for t in (a, b, c, d))
    num = qs.qpochs([a * base, b * d * base, c * base, c * d * base], x, base)
    den = qs.qpochs([base, c * d * base / a, c * base / b, d * base], x, base)
    return num / den * (1 - c * d * base ** (2 * x + 1)) / ((a * b * base) ** x * (1 - c * d * base))


def verify_racah_orthogonality(chk, M, N, m_max=2):
    top = min(M, N)
    P = rk_params(M, N)
    anchor = "the orthogonality of $q$-Racah polynomials"
    R = {(k, j): racah(k, j, *P) for k in range(top + 1) for j in range(top + 1)}
    for k in range(top + 1):
        for l in range(top + 1):
            lhs = add_many([rk_weight(M, N, j) * R[k, j] * R[l, j] for j in range(top + 1)])
            rhs = rk_norm(M, N, k) if k == l else ZERO
            chk.equal("racah-orthogonality", anchor, [M, N, k, l], lhs, rhs)
    for j in range(top + 1):
        for jj in range(top + 1):
            lhs = add_many([R[k, j] * R[k, jj] / rk_norm(M, N, k) for k in range(top + 1)])
            rhs = 1 / rk_weight(M, N, j) if j == jj else ZERO
            chk.equal("racah-dual-orthogonality", anchor, [M, N, j, jj], lhs, rhs)
    # the dual system attached to the second orthogonality relation
    D = (q ** (-2 * (M + 1)), Q((2, "lam"), (-2, "om"), 2 - 2 * M), q ** (-2 * (N + 1)), Q((-2, "lam"), -2))
    for j in range(top + 1):
        for jj in range(j):
            lhs = add_many([qracah_weight(k, *D) * racah(j, k, *D) * racah(jj, k, *D) for k in range(top + 1)])
            chk.zero("racah-second-system", "Similarly, the second equation", [M, N, j, jj], lhs)
    # commutative form of the first orthogonality relation, with T from the action
    for k in range(top + 1):
        for l in range(top + 1):
            terms = []
            for j in range(top + 1):
                g1 = gamma_rep(M - j) * subst(gamma_corep(N, j), {"lam": lc("lam", (-1, "om"), 2 * j - 2 * M)})
                g2 = shift(gamma_rep(M - k), "lam", N - 2 * k) * gamma_corep(N, k)
                Tk = act(matelem(N, j, k), RepVector.basis(M - k)).coefficient(M - j)
                Tl = act(matelem(N, j, l), RepVector.basis(M - l)).coefficient(M - j)
                terms.append(g1 / g2 * Tk * Tl)
            chk.equal("racah-orthogonality-action", "Replacing $\\lambda$ by", [M, N, k, l],
                      add_many(terms), ONE if k == l else ZERO)
    # the algebraic orthogonality relations evaluated in pi^omega
    if M == N:
        for k in range(N + 1):
            for l in range(N + 1):
                for m in range(m_max + 1):
                    e = RepVector.basis(m)
                    expect = e if k == l else RepVector()
                    chk.equal("orthogonality-action-first", "evaluating them in a representation",
                              [N, k, l, m], act(aor_first(N, k, l), e), expect)
                    chk.equal("orthogonality-action-second", "evaluating them in a representation",
                              [N, k, l, m], act(aor_second(N, k, l), e), expect)
    return chk


# ---------------------------------------------------------------------------
# formal unitarity

GEN_DEGREE = {"a": (1, 1), "b": (1, -1), "c": (-1, 1), "d": (-1, -1)}


def gamma_product(k, om="om"):
    """Gamma_k from iterating the beta relation: prod_i B_{k-i+1}(lambda - i)."""
    return prod([shift(B_fn(k - i + 1, om), "lam", -i) for i in range(1, k + 1)])


def unitarity_sides(x, deg, l):
    """Both sides of X^*_l Gamma_{l+d} = X_{l+d}(lambda+k) Gamma_l(lambda+k) for x
    homogeneous of bidegree deg = (j, k), where d = (j-k)/2."""
    j, k = deg
    d = (j - k) // 2
    if l + d < 0:
        return None
    xs = star(x)
    lhs = act(xs, RepVector.basis(l)).coefficient(l + d) * gamma_rep(l + d)
    rhs = shift(act(x, RepVector.basis(l + d)).coefficient(l) * gamma_rep(l), "lam", k)
    return lhs, rhs


def verify_formal_unitarity(chk, k_max=4, N_max=2):
    anchor = "so we require"
    for k in range(k_max + 1):
        chk.equal("gamma-alpha-delta", "Taking $k=0$ in", [k],
                  shift(gamma_rep(k) * A_fn(k), "lam", 1), gamma_rep(k) * D_fn(k))
        if k >= 1:
            chk.equal("gamma-beta", "Iterating", [k],
                      shift(gamma_rep(k - 1) * B_fn(k), "lam", -1), gamma_rep(k))
        chk.equal("gamma-product", "Iterating", [k], gamma_product(k), gamma_rep(k))
        for ch in "abcd":
            sides = unitarity_sides(AlgElement.gen(ch), GEN_DEGREE[ch], k)
            if sides is not None:
                chk.equal("unitarity-generator", anchor, [ch, k], *sides)
    # homogeneous elements beyond the generators: the matrix elements t^N_{ij}
    for N in range(1, N_max + 1):
        for i in range(N + 1):
            for j in range(N + 1):
                t = matelem(N, i, j)
                (deg,) = t.bidegrees()
                for l in range(3):
                    sides = unitarity_sides(t, deg, l)
                    if sides is not None:
                        chk.equal("unitarity-matelem", anchor, [N, i, j, l], *sides)
    return chk


def verify_invariant_subspace(chk, oms=(0, -1, -2), k_max=4):
    """For omega = -n the span of e_k, k > n, is invariant: B_{n+1} = 0 while
    the other B_k, k <= k_max, do not vanish."""
    anchor = "invariant"
    for om in oms:
        n = -om
        for k in range(1, k_max + 1):
            b = B_fn(k, str(om)) if om else subst(B_fn(k), {"om": aff(0)})
            if k == n + 1:
                chk.zero("invariant-subspace", anchor, [om, k], b)
            else:
                chk.truth("invariant-subspace", anchor, [om, k],
                          chk.sampler.check_zero([b], f"nonzero|{om}|{k}") is not None)
    return chk


# ---------------------------------------------------------------------------
# tensor products H^{w1} (x) H^{w2}

class TensorRepVector:
    """sum g_{k1 k2}(lambda) e_{k1} (x) e_{k2}, scalars on the right slot."""

    __slots__ = ("terms", "om1", "om2")

    def __init__(self, terms=None, om1="om1", om2="om2"):
        self.om1 = om1
        self.om2 = om2
        self.terms = {k: _lift(g) for k, g in (terms or {}).items()
                      if not _lift(g).is_structural_zero()}

    @classmethod
    def basis(cls, k1, k2, om1="om1", om2="om2", coef=ONE):
        return cls({(k1, k2): coef}, om1, om2)

    def __add__(self, other):
        terms = dict(self.terms)
        for k, g in other.terms.items():
            terms[k] = terms[k] + g if k in terms else g
        return TensorRepVector(terms, self.om1, self.om2)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, f):
        f = _lift(f)
        return TensorRepVector({k: f * g for k, g in self.terms.items()}, self.om1, self.om2)

    def coefficient(self, k1, k2):
        return self.terms.get((k1, k2), ZERO)

    def difference(self, other):
        keys = set(self.terms) | set(other.terms)
        return [self.terms.get(k, ZERO) - other.terms.get(k, ZERO) for k in sorted(keys)]

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({g})*e_{a}(x)e_{b}" for (a, b), g in sorted(self.terms.items()))

    __repr__ = __str__


def _word_on_basis(w, k, om):
    """pi^omega(w) e_k as a list of (index, coefficient)."""
    state = [(k, ONE)]
    for ch in reversed(w):
        state = [r for kk, g in state for r in act_letter(ch, kk, g, om)]
    return state


def tensor_act(x, v):
    """pi(x) v in H^{w1} (x) H^{w2}, with pi = Theta o (pi^{w1} (x) pi^{w2}) o Delta."""
    om1, om2 = v.om1, v.om2
    acc = defaultdict(list)
    for (w1, w2), c in coproduct(x).terms.items():
        for (k1, k2), g in v.terms.items():
            left = _word_on_basis(w1, k1, om1)
            if not left:
                continue
            state = [(k2, g)]
            for ch in reversed(w2):
                state = [r for kk, gg in state for r in act_letter(ch, kk, gg, om2)]
            for j2, h2 in state:
                # moving a function of the left slot across e_{j2} shifts it by -(w2 + 2 j2)
                move = lc("lam", (-1, om2), -2 * j2)
                for j1, h1 in left:
                    coef = subst(c, {"lam": lc("lam", (-1, om1), -2 * j1, (-1, om2), -2 * j2),
                                     "rho": move, "mu": aff("lam")})
                    acc[j1, j2].append(coef * subst(h1, {"lam": move}) * h2)
    return TensorRepVector({k: add_many(gs) for k, gs in acc.items()}, om1, om2)


def tensor_abc(k1, k2, om1="om1", om2="om2"):
    """The coefficients a, b, c of pi(gamma beta) on e_{k1} (x) e_{k2}."""
    def at(f, *terms):
        return subst(f, {"lam": lc("lam", *terms)})

    A1, B1, D1 = A_fn(k1, om1), B_fn(k1, om1), D_fn(k1, om1)
    m = ((-1, om2), -2 * k2)
    a = at(B_fn(k2, om2), -1) * A_fn(k2 - 1, om2) * at(A1, *m, 1) if k2 >= 1 else ZERO
    b = (at(D_fn(k2, om2), -1) * A_fn(k2, om2) * at(B1, *m, -1)
         + at(B_fn(k2, om2), -1) * at(A1, *m, 1) * at(D1, *m))
    c = at(D_fn(k2, om2), -1) * at(B1, *m, -1) * at(D_fn(k1 - 1, om1), *m, -2) if k1 >= 1 else ZERO
    return -a / q, -b / q, -c / q


@lru_cache(maxsize=None)
def eigvec_coefficient(y, p, k, om1="om1", om2="om2"):
    return ((-1) ** k * Q((2 * k, om1), (2 * k, om2), k * (3 * p - 1))
            * qp(k, (-2, "lam")) * qp(k, (-2, om1), -2 * (p - 1)) * qp(k, -2 * p)
            / (qp(k, 2) * qp(k, (2, om2)) * qp(k, (2, om1), (2, om2), (-2, "lam"), 2 * (p - 1)))
            * racah(k, p - y, Q((-2, "lam"), -2), Q((2, om2), -2), q ** (-2 * (p + 1)),
                    Q((-2, om1), (-2, om2), -2 * (p - 1))))


def eigvec(y, p, om1="om1", om2="om2"):
    """The Xi-eigenvector v(y; p) of weight om1 + om2 + 2p."""
    if not 0 <= y <= p:
        raise IndexOutOfRange(f"eigvec({y}, {p})")
    return TensorRepVector({(p - k, k): eigvec_coefficient(y, p, k, om1, om2) for k in range(p + 1)},
                           om1, om2)


@lru_cache(maxsize=None)
def xi_eigenvalue(om):
    """q^{om-1} + q^{1-om} for an affine form spec om."""
    return Q((1, om), -1) + Q((-1, om), 1)


@lru_cache(maxsize=None)
def alpha_eigenvalue(p, om1="om1", om2="om2"):
    return (q ** (-p) * (1 - Q((2, "lam"), (-2, om1), (-2, om2), 2 - 2 * p))
            / (1 - Q((2, "lam"), (-2, om1), (-2, om2), 2 - 4 * p)))


def verify_tensor(chk, k_max=3, p_max=4):
    """The tensor product action: well-definedness, the gamma-beta three-term
    form, and the Xi-eigenvectors v(y; p)."""
    gen = AlgElement.gen
    rels = defining_relations()
    for k1 in range(k_max + 1):
        for k2 in range(k_max + 1 - k1):
            v = TensorRepVector.basis(k1, k2)
            for pair, rhs in rels.items():
                chk.zero("tensor-relations", "defines a dynamical representation", [pair, k1, k2],
                         [g for g in _tensor_act_terms(rhs, v).terms.values()])
            a, b, c = tensor_abc(k1, k2)
            expect = TensorRepVector({(k1 + 1, k2 - 1): a, (k1, k2): b, (k1 - 1, k2 + 1): c})
            chk.equal("tensor-gamma-beta", "Computing the other three terms similarly", [k1, k2],
                      tensor_act(gen("c") * gen("b"), v), expect)
    X = xi()
    vecs = {}
    for p in range(p_max + 1):
        for y in range(p + 1):
            v = vecs[y, p] = eigvec(y, p)
            chk.equal("eigvec-xi", "has eigenvectors $v(y;p)$", [y, p], tensor_act(X, v),
                      v.scale(xi_eigenvalue(f"om1+om2+{2 * y}")))
            if p < p_max:
                chk.equal("eigvec-gamma", "Comparing the coefficient of", [y, p],
                          tensor_act(gen("c"), v), eigvec(y, p + 1).scale(-1 / q))
                chk.equal("eigvec-alpha", "A similar computation gives", [y, p],
                          tensor_act(gen("a"), v), v.scale(alpha_eigenvalue(p)))
    # distinct eigenvalues per weight space, hence independence: the
    # coefficient matrix of v(0;p), ..., v(p;p) has full rank at a sample point
    for p in range(p_max + 1):
        ev = [xi_eigenvalue(f"om1+om2+{2 * y}") for y in range(p + 1)]
        for y in range(p + 1):
            for z in range(y):
                chk.truth("eigvec-distinct", "the eigenvalues per weight space are different", [p, y, z],
                          chk.sampler.check_zero([ev[y] - ev[z]], f"distinct|{p}|{y}|{z}") is not None)
        rank = _rank([vecs[y, p] for y in range(p + 1)], chk.seed)
        chk.truth("eigvec-independent", "linearly independent", [p], rank == p + 1,
                  {"rank": rank, "size": p + 1})
    return chk


def _rank(rows, seed):
    for attempt in range(5):
        try:
            return rank_at_point(rows, f"{seed}|{attempt}")
        except PoleAtPoint:
            continue
    raise PoleAtPoint("rank sampling")


def _tensor_act_terms(pairs, v):
    """pi(sum f w) v for (f, w) pairs with arbitrary words w."""
    out = TensorRepVector({}, v.om1, v.om2)
    for f, w in pairs:
        y = v
        for ch in reversed(w):
            y = tensor_act(AlgElement.gen(ch), y)
        out = out + tensor_act(AlgElement.scalar(f), y)
    return out


# ---------------------------------------------------------------------------
# Clebsch-Gordan coefficients of H^{w1} (x) H^{w2}

CG_RACAH = "qracah"
CG_ALT = "alternative"
CG_DUAL = "dual"
CG_BACKENDS = (CG_RACAH, CG_ALT, CG_DUAL)


def _phi_factor(s, L, om1, om2):
    return qp(s, (2, "lam"), (-1 * 2, om1), (-2, om2), 4 - 2 * s - 2 * L)


@lru_cache(maxsize=None)
def cg_dyn(s, k, l, m, om1="om1", om2="om2", backend=CG_RACAH):
    """C^{w1+w2+2s, w1 w2}_{k, lm}(lambda): C e_k = sum_{l+m=s+k} C (e_l (x) e_m)."""
    if min(s, k, l, m) < 0 or l + m != s + k:
        raise IndexOutOfRange(f"cg_dyn({s}, {k}, {l}, {m})")
    L = s + k
    if backend == CG_RACAH:
        return ((-1) ** m * Q((-s, "lam"), (2 * m, om1), (2 * m, om2), s * k + m * (3 * L - 1))
                * qp(m, (-2, "lam")) * qp(m, (-2, om1), -2 * (L - 1)) * qp(m, -2 * L)
                * _phi_factor(s, L, om1, om2)
                / (qp(m, 2) * qp(m, (2, om2)) * qp(m, (2, om1), (2, om2), (-2, "lam"), 2 * (L - 1)))
                * racah(m, k, Q((-2, "lam"), -2), Q((2, om2), -2), q ** (-2 * (L + 1)),
                        Q((-2, om1), (-2, om2), -2 * (L - 1))))
    if backend == CG_ALT:
        return ((-1) ** s * Q((s, "lam"), (-2 * l, om1), (-2 * l, om2), s * (1 - L) + 2 * l * (1 - L) - l * m)
                * qs.qbinom(L, m)
                * qp(m, (-2, "lam")) * qp(m, (-2, om1), -2 * (L - 1)) * qp(L, (2, om2))
                * qp(l, (2, om1), (2, om2), (-2, "lam"), 2 * (m + L - 1))
                / (qp(k, (-2, "lam")) * qp(k, (-2, om1), -2 * (L - 1)) * qp(m, (2, om2)) * qp(s, (2, om2)))
                * racah(l, k, Q((2, "lam"), (-2, om1), (-2, om2), 2 - 4 * L), Q((2, om1), -2),
                        q ** (-2 * (L + 1)), Q((-2, om1), (-2, om2), -2 * (L - 1))))
    if backend == CG_DUAL:
        return (Q((-s, "lam"), s * k - l * m) * _phi_factor(s, L, om1, om2) * qs.qbinom(L, m)
                * racah(s, m, Q((2, om2), -2), Q((2, om1), -2), q ** (-2 * (L + 1)),
                        Q((2, om2), (-2, "lam"), 2 * (L - 1))))
    raise ValueError(f"unknown backend {backend!r}")


@lru_cache(maxsize=None)
def phi_intertwiner(s, k, om1="om1", om2="om2"):
    return Q((-s, "lam"), s * k) * qp(s, (2, "lam"), (-2, om1), (-2, om2), 4 - 4 * s - 2 * k)


def dyn_intertwiner(s, om1="om1", om2="om2"):
    """C: H^{w1+w2+2s} -> H^{w1} (x) H^{w2}, C(g e_k) = g phi_k v(s; s+k)."""
    def apply(v):
        out = TensorRepVector({}, om1, om2)
        for k, g in v.terms.items():
            out = out + eigvec(s, s + k, om1, om2).scale(g * phi_intertwiner(s, k, om1, om2))
        return out
    return apply


def target_om(s, om1="om1", om2="om2"):
    return f"{om1}+{om2}+{2 * s}" if s else f"{om1}+{om2}"


def verify_cg_dyn(chk, s_max=3, k_max=3):
    for s in range(s_max + 1):
        for k in range(k_max + 1):
            for m in range(s + k + 1):
                l = s + k - m
                ref = cg_dyn(s, k, l, m)
                chk.equal("cgdyn-backends", "we note the alternative expression", [s, k, l, m],
                          cg_dyn(s, k, l, m, backend=CG_ALT), ref)
                chk.equal("cgdyn-backends", "if we instead use", [s, k, l, m],
                          cg_dyn(s, k, l, m, backend=CG_DUAL), ref)
                chk.equal("cgdyn-eigvec", "In analogy with corepresentations", [s, k, l, m],
                          phi_intertwiner(s, k) * eigvec(s, s + k).coefficient(l, m), ref)
    gen = AlgElement.gen
    for s in range(s_max + 1):
        C = dyn_intertwiner(s)
        om = target_om(s)
        for k in range(k_max + 1):
            e = RepVector.basis(k, om)
            for ch in "abcd":
                chk.equal("intertwiner", "the intertwining property", [ch, s, k],
                          C(act(gen(ch), e)), tensor_act(gen(ch), C(e)))
    return chk


# ---------------------------------------------------------------------------
# Biedenharn-Elliott identities

@lru_cache(maxsize=None)
def _at(expr, *terms):
    """expr with lambda replaced by the affine form lc(*terms)."""
    return subst(expr, {"lam": lc(*terms)})


def add2_sides(N, k, j, m, s, x):
    """Coefficient of e_x (x) e_y in C pi(t^N_{kj}) e_m = pi(t^N_{kj}) C e_m,
    y = s + m + j - k - x, from the closed forms of C and T."""
    y = s + m + j - k - x
    om = target_om(s)
    if m + j - k < 0:
        lhs = ZERO
    else:
        lhs = cg_dyn(s, m + j - k, x, y) * tfun(N, k, j, m, om)
    terms = []
    for l in range(max(0, j - y), min(N, x + k) + 1):
        c = _at(cg_dyn(s, m, x + k - l, y + l - j), "lam", N - 2 * j)
        t1 = _at(tfun(N, k, l, x + k - l, "om1"), "lam", (-1, "om2"), -2 * y)
        terms.append(c * t1 * tfun(N, l, j, y + l - j, "om2"))
    return lhs, add_many(terms)


@lru_cache(maxsize=None)
def _mono(form):
    return qpow(form)


@lru_cache(maxsize=None)
def _poch(n, base, *forms):
    return prod([qs.qpoch(_mono(f), n, q ** base) for f in forms])


@lru_cache(maxsize=None)
def _racah_form(n, x, a, b, c, d, base):
    return qs.qracah(n, x, _mono(a), _mono(b), _mono(c), _mono(d), q ** base)


def pi_sides(k1, k2, m1, m2, m3, a, b, c, d, base=1, N=None, upper=None):
    """Both sides of the pentagonal (Biedenharn-Elliott) identity for q-Racah
    polynomials in base q^base. The parameters a, b, c, d are q raised to the
    given affine forms. With N given, a = q^{-base (N+1)} and both sides are
    multiplied by (aq; q)_{k1+k2}, which removes the singularity for
    N < k1 + k2."""
    a, b, c, d = (aff(t) for t in (a, b, c, d))
    e = base
    K = k1 + k2

    def F(*terms):
        return aff(lc(*((1, t) if isinstance(t, tuple) else t for t in terms)))

    lhs = ZERO
    if k1 <= m1 + m2:
        lhs = (_poch(k1, e, F(a, e), F(-e * (m1 + m2)), F(b, d, e * (1 - m3)))
               * _poch(k2, e, F(a, b, e * (2 * k1 + 2))) * _poch(K, e, F(b, c, 2 * e))
               / (_poch(k1, e, F(b, e), F(b, c, d, 2 * e), F(-e * (m1 + m2 + m3))) * _poch(k2, e, F(c, e)))
               * _mono(F(b, e * (1 + k1))) ** (-k2)
               * _racah_form(k1, m1, a, b, F(-e * (m1 + m2 + 1)), F(d, -e * m3), e)
               * _racah_form(k2, m1 + m2 - k1, F(a, b, e * (2 * k1 + 1)), c,
                             F(-e * (m1 + m2 + m3 - k1 + 1)), F(b, d, e * (1 + k1)), e))
        if N is None:
            lhs = lhs / _poch(K, e, F(a, e))
    top = min(K, m2 + m3) if upper is None else upper
    low = 0 if N is None else max(0, K - N)
    bc = F(b, c)
    terms = []
    for l in range(low, top + 1):
        t = (_poch(l, e, F(bc, e), F(-e * K), F(-e * (m2 + m3)), F(a, bc, e * (K + 2)), F(b, e),
                   F(bc, d, e * (2 + m1)))
             / _poch(l, e, F(e), F(bc, e * (K + 2)), F(-e * (m1 + m2 + m3)), F(c, e), F(bc, d, 2 * e))
             * (1 - _mono(F(bc, e * (2 * l + 1)))) / (1 - _mono(F(bc, e)))
             * _mono(F(a, b, e * (1 + m1))) ** (-l)
             * _racah_form(k1, l, b, a, F(-e * (K + 1)), F(bc, e * (K + 1)), e)
             * _racah_form(l, m2, b, c, F(-e * (m2 + m3 + 1)), F(b, d, e * (1 + m1)), e)
             * _racah_form(K - l, m1, a, F(bc, e * (2 * l + 1)), F(-e * (m1 + m2 + m3 - l + 1)),
                           F(d, -e * l), e))
        if N is None:
            t = t / _poch(l, e, F((-a[0], tuple((v, -x) for v, x in a[1])), -e * K))
        else:
            t = (t * (-1) ** l * q ** (e * (-(l * (l - 1)) // 2 + l * (K - N - 1)))
                 * _poch(K - l, e, F(-e * N)))
        terms.append(t)
    return lhs, add_many(terms)


def pi_substitution(N, k, x, j, m, s):
    """The parameters of the pentagonal identity that correspond to add2."""
    return dict(k1=k, k2=x, m1=j, m2=m, m3=s, a=aff(-2 * (N + 1)),
                b=lc((2, "lam"), (-2, "om1"), (-2, "om2"), 2 * (N + 1 - 2 * j - 2 * m - 2 * s)),
                c=lc((2, "om1"), -2),
                d=lc((-2, "lam"), -2 * (1 + N - j - m - s)), base=2, N=N)


def conv_sides(M, N, m, n, p, s, j, om="om"):
    """pi^omega of the Clebsch-Gordan formula acting on e_j."""
    terms = []
    for k in range(M + 1):
        l = p + s - k
        if not 0 <= l <= N or j + l - n < 0:
            continue
        terms.append(cg_corep(M, N, s, k, l) * tfun(M, m, k, j + l - n, om)
                     * _at(tfun(N, n, l, j, om), "lam", M - 2 * k))
    target = m + n - s
    rhs = ZERO
    if 0 <= target <= M + N - 2 * s:
        rhs = (_at(cg_corep(M, N, s, m, n), "lam", (-1, om), -2 * (j + p + s - m - n))
               * tfun(M + N - 2 * s, target, p, j, om))
    return add_many(terms), rhs


@lru_cache(maxsize=None)
def _p2_weight(M, N, x, y, s):
    return (gamma_corep(M, x) * shift(gamma_corep(N, y), "lam", M - 2 * x)
            / gamma_corep(M + N - 2 * s, x + y - s) / zconst(M, N, s))


def p2_sides(M, N, k, x, l, y, j, om="om"):
    """pi^omega of the dual Clebsch-Gordan formula acting on e_j."""
    if j + y - l < 0:
        lhs = ZERO
    else:
        lhs = tfun(M, k, x, j + y - l, om) * _at(tfun(N, l, y, j, om), "lam", M - 2 * x)
    terms = []
    for s in range(min(M, N, k + l, M + N - k - l, x + y, M + N - x - y) + 1):
        w = _p2_weight(M, N, x, y, s)
        terms.append(w * _at(cg_corep(M, N, s, k, l), "lam", (-1, om), -2 * (j + x + y - k - l))
                     * cg_corep(M, N, s, x, y) * tfun(M + N - 2 * s, k + l - s, x + y - s, j, om))
    return lhs, add_many(terms)


def verify_biedenharn_elliott(chk, bound=3):
    """The tensor product identity add2, the pentagonal identity (generic and
    under the substitution coming from add2), and the two commutative
    Clebsch-Gordan formulas conv and p2."""
    a_add = "Identifying the coefficient of $e_x\\otimes e_y$"
    a_pi = "pentagonal or Biedenharn--Elliott identity"
    for N in range(bound + 1):
        for k in range(N + 1):
            for j in range(N + 1):
                for m in range(bound + 1):
                    for s in range(bound + 1):
                        for x in range(min(bound, s + m + j - k) + 1):
                            idx = [N, k, j, m, s, x]
                            chk.equal("add2", a_add, idx, *add2_sides(N, k, j, m, s, x))
                            chk.equal("pentagonal-substituted", "in base $q^2$ with",
                                      idx, *pi_sides(**pi_substitution(N, k, x, j, m, s)))
    # the same coefficients, read off from the tensor product action
    for N in range(min(bound, 2) + 1):
        for s in range(min(bound, 2) + 1):
            C = dyn_intertwiner(s)
            for m in range(min(bound, 2) + 1):
                e = RepVector.basis(m, target_om(s))
                for k in range(N + 1):
                    for j in range(N + 1):
                        t = matelem(N, k, j)
                        chk.equal("intertwiner-matelem", "corepresent the intertwining property",
                                  [N, k, j, m, s], C(act(t, e)), tensor_act(t, C(e)))
    # four continuous parameters
    for k1 in range(bound + 1):
        for k2 in range(bound + 1):
            for m1 in range(bound + 1):
                for m2 in range(bound + 1):
                    for m3 in range(bound + 1):
                        if k1 + k2 <= m1 + m2 + m3:
                            chk.equal("pentagonal-generic", a_pi, [k1, k2, m1, m2, m3],
                                      *pi_sides(k1, k2, m1, m2, m3, "rho1", "rho2", "om1", "om2"))
    for M in range(bound + 1):
        for N in range(bound + 1):
            for s in range(min(M, N) + 1):
                for m in range(M + 1):
                    for n in range(N + 1):
                        for p in range(M + N - 2 * s + 1):
                            for j in range(bound + 1):
                                chk.equal("conv", "acting with both sides on $e_j$", [M, N, m, n, p, s, j],
                                          *conv_sides(M, N, m, n, p, s, j))
            for k in range(M + 1):
                for x in range(M + 1):
                    for l in range(N + 1):
                        for y in range(N + 1):
                            for j in range(bound + 1):
                                chk.equal("p2", "similarly gives", [M, N, k, x, l, y, j],
                                          *p2_sides(M, N, k, x, l, y, j))
    return chk


# ---------------------------------------------------------------------------
# the spherical addition formula

def _aw_form(n, xi_form, *forms):
    """p_n((xi + 1/xi)/2; a, b, c, d; q^2) with xi, a, b, c, d given as
    exponents of q."""
    return aw(n, Q(*xi_form), *(Q(*f) for f in forms))


def addition_sides(k, x, m, y):
    """Both sides of the spherical (N = 2k, j = k) case of add2, written with
    Askey-Wilson polynomials; L = x + y = s + m."""
    L = x + y
    s = L - m
    if s < 0:
        raise IndexOutOfRange(f"addition({k}, {x}, {m}, {y})")
    O = (((1, "om1"), (1, "om2"), 2 * s - 1))
    O1 = (((1, "om1"), -1))
    O2 = (((1, "om2"), -1))
    lo1, lo2 = ((2, "lam"), (-2, "om2"), -2 * x - 4 * y), ((2, "lam"), -2 * y)

    def R(n):
        return racah(n, m, Q((2, "lam"), (-2, "om1"), (-2, "om2"), 2 - 4 * L), Q((2, "om1"), -2),
                     q ** (-2 * (L + 1)), Q((-2, "om1"), (-2, "om2"), -2 * (L - 1)))

    def neg(terms):
        return tuple((-t if isinstance(t, int) else (-t[0], t[1])) for t in terms)

    lhs = (q ** (-k) * qp(k, 2) * qp(k, (2, "lam"), (-2, "om2"), 4 - 4 * y) * qp(k, (2, "om2"), (-2, "lam"), 4 * y)
           * R(x)
           * _aw_form(k, O, ((1, "om1"), (1, "om2"), 1 + 2 * L), ((-1, "om1"), (-1, "om2"), 1 - 2 * L),
                      ((-1, "om1"), (-1, "om2"), (2, "lam"), 3 - 2 * L),
                      ((1, "om1"), (1, "om2"), (-2, "lam"), 2 * L - 1)))
    blocks = [R(x)
              * _aw_form(k, O1, ((1, "om1"), 1 + 2 * x), ((-1, "om1"), 1 - 2 * x),
                         ((-1, "om1"),) + lo1 + (3,), ((1, "om1"),) + neg(lo1) + (-1,))
              * _aw_form(k, O2, ((1, "om2"), 1 + 2 * y), ((-1, "om2"), 1 - 2 * y),
                         ((-1, "om2"),) + lo2 + (3,), ((1, "om2"),) + neg(lo2) + (-1,))]
    for l in range(1, min(k, y) + 1):
        c = (qs.qpoch(Q2, k + l) * qs.qpoch(Q2, y) / (qs.qpoch(Q2, k - l) * qs.qpoch(Q2, y - l))
             * (1 - Q((2, "lam"), (-2, "om2"), 2 - 4 * y + 4 * l)) / (1 - Q((2, "lam"), (-2, "om2"), 2 - 4 * y))
             * Q((l, "om1"), (3 * l, "om2"), (-2 * l, "lam"), l * (-4 + 2 * k + 2 * x + 4 * y))
             * qp(l, (-2, "om2"), 2 - 2 * y) * qp(l, (2, "lam"), (-2, "om1"), (-2, "om2"), 4 - 2 * x - 4 * y)
             * qp(l, (2, "lam"), (-2, "om2"), 2 - 2 * x - 4 * y) * qp(l, (2, "lam"), (-2, "om2"), 2 - 2 * k - 4 * y)
             / qp(l, (2, "lam"), (-2, "om2"), 4 + 2 * k - 4 * y))
        blocks.append(
            c * R(x + l)
            * _aw_form(k - l, O1, ((1, "om1"), 1 + 2 * (x + l)), ((-1, "om1"), 1 - 2 * x),
                       ((-1, "om1"),) + lo1 + (3 + 2 * l,), ((1, "om1"),) + neg(lo1) + (-1,))
            * _aw_form(k - l, O2, ((1, "om2"), 1 + 2 * y), ((-1, "om2"), 1 - 2 * (y - l)),
                       ((-1, "om2"),) + lo2 + (3 + 2 * l,), ((1, "om2"),) + neg(lo2) + (-1,)))
    for l in range(1, min(k, x) + 1):
        c = (qs.qpoch(Q2, k + l) * qs.qpoch(Q2, x) / (qs.qpoch(Q2, k - l) * qs.qpoch(Q2, x - l))
             * (1 - Q((2, "om2"), (-2, "lam"), -2 + 4 * y + 4 * l)) / (1 - Q((2, "om2"), (-2, "lam"), -2 + 4 * y))
             * Q((l, "om1"), (-l, "om2"), (2 * l, "lam"), l * (2 * k - 2 * y))
             * qp(l, (-2, "lam"), 2 * y) * qp(l, (-2, "om1"), 2 - 2 * x)
             * qp(l, (2, "om2"), (-2, "lam"), -2 + 2 * y) * qp(l, (2, "om2"), (-2, "lam"), -2 + 4 * y - 2 * k)
             / qp(l, (2, "om2"), (-2, "lam"), 2 * k + 4 * y))
        blocks.append(
            c * R(x - l)
            * _aw_form(k - l, O1, ((1, "om1"), 1 + 2 * x), ((-1, "om1"), 1 - 2 * (x - l)),
                       ((-1, "om1"),) + lo1 + (3,), ((1, "om1"),) + neg(lo1) + (-1 + 2 * l,))
            * _aw_form(k - l, O2, ((1, "om2"), 1 + 2 * (y + l)), ((-1, "om2"), 1 - 2 * y),
                       ((-1, "om2"),) + lo2 + (3,), ((1, "om2"),) + neg(lo2) + (-1 + 2 * l,)))
    return lhs, add_many(blocks)


def little_jacobi_sides(k, x, m, z):
    """Both sides of the little q-Jacobi limit of the addition formula; z is an
    integer or an affine form spec (q^{2z} = Q((2, z)))."""
    Z2 = q ** (2 * z) if isinstance(z, int) else Q((2, z))

    def pj(n, xv, a, b):
        return qs.little_qjacobi(n, xv, a, b)

    def P(a, n):
        return qs.qpoch(a, n)

    X2 = q ** (2 * x)
    lhs = pj(x, q ** (2 * m), Z2, 0) * pj(k, q ** (2 * m), 1, 1)
    terms = [pj(x, q ** (2 * m), Z2, 0) * pj(k, X2, 1, 1) * pj(k, X2 * Z2, 1, 1)]
    for l in range(1, k + 1):
        L2 = q ** (2 * l)
        terms.append(P(Q2, k + l) * P(Q2 * Z2, x + l) / (P(Q2, k - l) * P(Q2 * Z2, x) * P(Q2, l) ** 2)
                     * q ** (2 * l * (x + l - k))
                     * pj(x + l, q ** (2 * m), Z2, 0) * pj(k - l, X2, L2, L2) * pj(k - l, X2 * Z2, L2, L2))
    for l in range(1, min(k, x) + 1):
        L2 = q ** (2 * l)
        terms.append(P(Q2, k + l) * P(Q2, x) / (P(Q2, k - l) * P(Q2, x - l) * P(Q2, l) ** 2)
                     * q ** (2 * l * (x - k + 1)) * Z2 ** l
                     * pj(x - l, q ** (2 * m), Z2, 0) * pj(k - l, X2 / L2, L2, L2)
                     * pj(k - l, X2 * Z2 / L2, L2, L2))
    return lhs, add_many(terms)


def verify_addition_formula(chk, bound=2, z_max=2):
    anchor = "This identity generalizes"
    for k in range(bound + 1):
        for x in range(bound + 1):
            for m in range(bound + 1):
                for y in range(bound + 1):
                    if x + y >= m:
                        chk.equal("addition-formula", anchor, [k, x, m, y], *addition_sides(k, x, m, y))
    for k in range(bound + 1):
        for x in range(bound + 1):
            for m in range(bound + 1):
                for z in range(z_max + 1):
                    chk.equal("little-jacobi-limit", "this is Koornwinder's formula", [k, x, m, z],
                              *little_jacobi_sides(k, x, m, z))
                chk.equal("little-jacobi-generic", "In the limit, one obtains the identity", [k, x, m],
                          *little_jacobi_sides(k, x, m, "rho"))
    return chk


# ---------------------------------------------------------------------------
# suites for the representation itself

def verify_representation(chk, k_max=4):
    """Well-definedness of pi^omega and the value of pi^omega(Xi)."""
    rels = defining_relations()
    X = xi()
    g = qpow("lam") + 3
    for k in range(k_max + 1):
        e = RepVector.basis(k)
        for pair, rel in rels.items():
            chk.equal("relations-annihilate", "there is a dynamical representation", [pair, k],
                      act_terms(rel, e), RepVector())
        v = RepVector.basis(k, coef=g)
        chk.equal("xi-scalar", "acts in the dynamical representation $\\pi^\\omega$", [k],
                  act(X, v), v.scale(xi_eigenvalue("om")))
    chk.truth("beta-kills-e0", "$B_0(\\lambda)=0$", [0],
              not act(AlgElement.gen("b"), RepVector.basis(0)).terms)
    return chk


def _aw_cases(N, k, j):
    """The Askey-Wilson domains containing (k, j); boundaries belong to two or four."""
    out = []
    for case, (c1, c2) in {1: (k <= j, k + j <= N), 2: (k <= j, k + j >= N),
                           3: (j <= k, k + j <= N), 4: (j <= k, k + j >= N)}.items():
        if c1 and c2:
            out.append(case)
    return out


def verify_tfun(chk, N_max=3, m_max=3):
    anchor = "expressed in terms of $q$-Racah polynomials"
    for N in range(N_max + 1):
        for k in range(N + 1):
            for j in range(N + 1):
                for m in range(m_max + 1):
                    if m + j - k < 0:
                        continue
                    T = tfun(N, k, j, m)
                    chk.equal("tfun-action", anchor, [N, k, j, m],
                              act(matelem(N, k, j), RepVector.basis(m)), RepVector.basis(m + j - k, coef=T))
                    for case in _aw_cases(N, k, j):
                        chk.equal("tfun-askey-wilson", "express the functions $T_{kjm}^{\\omega N}$",
                                  [N, k, j, m, case], tfun(N, k, j, m, backend="askey-wilson", case=case), T)
    return chk
