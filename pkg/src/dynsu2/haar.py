"""
The Haar functional h on F_R(SL(2)).

h kills every component of nonzero bidegree. On F_R(SL(2))_00, which is the
algebra of polynomials in Xi over functions of (lambda, mu), h is the moment
functional m_k = h(Xi^k) fixed by h(t^{2k}_{kk}) = 0 for k >= 1, where
t^{2k}_{kk} = N_k p_k(Xi/2) with p_k a two-parameter Askey-Wilson polynomial.
"""

from __future__ import annotations

import random
from functools import lru_cache

from . import qseries as qs
from .algebra import SL2, AlgElement, ccr_form, random_element, random_scalar, star, word_degree, xi_poly_element
from .coalgebra import coproduct
from .corep import matelem
from .scalars import (
    ONE, ZERO, Evaluator, PoleAtPoint, add_many, aff, bar, q, qpow, subst,
)

Q2 = q ** 2
# the four-parameter orthogonality with j, l, k, m <= 2 integrates polynomials
# of degree up to 8
MAX_MOMENT = 8

ANCHOR_H = "We call this map the \\emph{Haar functional}"
ANCHOR_INV = "is both the unique left-invariant and the unique right-invariant integral"
ANCHOR_SCHUR = "Schur orthogonality relations are valid"
ANCHOR_AW = "orthogonality of a four-parameter family"
ANCHOR_XI = "can be identified with the algebra of polynomials in $\\Xi$"
ANCHOR_TAST = "This follows easily from Proposition"
ANCHOR_PRODUCT = "no restriction to assume that we are in the first parameter domain"


class NotDegreeZero(ValueError):
    pass


class LeadingCoefficientPole(ZeroDivisionError):
    pass


# ---------------------------------------------------------------------------
# polynomials in Xi

class XiPoly:
    """sum_k coeffs[k] Xi^k with coefficients Scalars in (lambda, mu)."""

    def __init__(self, coeffs):
        self.coeffs = list(coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + [ZERO] * (n - len(self.coeffs))
        b = other.coeffs + [ZERO] * (n - len(other.coeffs))
        return XiPoly([x + y for x, y in zip(a, b)])

    def __mul__(self, other):
        return XiPoly(poly_mul(self.coeffs, other.coeffs))

    def scale(self, f):
        return XiPoly([f * c for c in self.coeffs])

    def element(self):
        return xi_poly_element(self.coeffs)

    def difference(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + [ZERO] * (n - len(self.coeffs))
        b = other.coeffs + [ZERO] * (n - len(other.coeffs))
        return [x - y for x, y in zip(a, b)]

    def __repr__(self):
        return f"XiPoly({self.coeffs})"


def poly_mul(a, b):
    out = [[] for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j].append(x * y)
    return [add_many(t) for t in out]


def _gamma_beta_power(w):
    """k if w is the normal word gamma^k beta^k, else None."""
    k = len(w) // 2
    return k if w == "c" * k + "b" * k else None


def to_xi_poly(x, strict=False):
    """The (0,0) component of x as a polynomial in Xi.

    The component is expanded in the basis gamma^k beta^k, and each
    gamma^k beta^k is replaced by its closed form as a polynomial in Xi."""
    if strict and any(d != (0, 0) for d in x.bidegrees()):
        raise NotDegreeZero(f"bidegrees {x.bidegrees()}")
    comp = x.component((0, 0))
    out = XiPoly([ZERO])
    for w, f in comp.terms.items():
        k = _gamma_beta_power(w)
        if k is None:
            raise NotDegreeZero(f"word {w!r} is not in the gamma^k beta^k basis")
        out = out + XiPoly(ccr_form("cb", k)).scale(f)
    return out


# ---------------------------------------------------------------------------
# moments

def aw_parameters():
    return (qpow("mu-lam+1"), qpow("lam-mu+1"), qpow("lam+mu+3"), qpow("-lam-mu-1"))


@lru_cache(maxsize=None)
def p_poly(k):
    """p_k(Xi/2; q^{mu-lam+1}, q^{lam-mu+1}, q^{lam+mu+3}, q^{-lam-mu-1}; q^2) in Xi."""
    return tuple(qs.askey_wilson_poly(k, *aw_parameters(), base=Q2))


def _scaled(form, k):
    c, coeffs = aff(form)
    return (c * k, tuple((v, a * k) for v, a in coeffs))


def n_const(k):
    """N_k with t^{2k}_{kk} = N_k p_k(Xi/2). The factor (q^{2(lam+2)}; q^2)_k in
    the denominator is forced by the matrix elements; without it the identity
    fails already for k = 1."""
    return qpow(_scaled("lam-mu+1", k)) / qs.qpochs([Q2, qpow("-2*mu"), qpow("2*lam+4")], k, Q2)


@lru_cache(maxsize=None)
def moment(k):
    """m_k = h(Xi^k), solved from h(p_j(Xi/2)) = delta_{j0} for j <= k."""
    if k < 0 or k > MAX_MOMENT:
        raise ValueError(f"moments are available for 0 <= k <= {MAX_MOMENT}")
    if k == 0:
        return ONE
    p = p_poly(k)
    return -add_many([p[i] * moment(i) for i in range(k)]) / p[k]


def moments(d):
    """The moment table [m_0, ..., m_d]."""
    return [moment(k) for k in range(d + 1)]


def moment_values(d, point):
    """The moments evaluated at a point; the recursion divides by the leading
    coefficient of p_k, which must not vanish there."""
    ev = Evaluator()
    out = [ev.value(ONE, point)]
    for k in range(1, d + 1):
        p = p_poly(k)
        try:
            lead = ev.value(p[k], point)
        except PoleAtPoint as exc:
            raise LeadingCoefficientPole(f"k={k}") from exc
        if lead == 0:
            raise LeadingCoefficientPole(f"k={k}")
        out.append(-sum(ev.value(p[i], point) * out[i] for i in range(k)) / lead)
    return out


def contract(coeffs):
    """h(sum_k coeffs[k] Xi^k)."""
    return add_many([c * moment(k) for k, c in enumerate(coeffs)])


# ---------------------------------------------------------------------------
# the Haar functional

@lru_cache(maxsize=None)
def haar_word(w):
    """h of a normal word, a Scalar in (lambda, mu)."""
    if word_degree(w) != (0, 0):
        return ZERO
    k = _gamma_beta_power(w)
    return contract(ccr_form("cb", k))


def haar(x, strict=False):
    """h(x) as a Scalar in (lambda, mu)."""
    if strict and any(d != (0, 0) for d in x.bidegrees()):
        raise NotDegreeZero(f"bidegrees {x.bidegrees()}")
    return add_many([f * haar_word(w) for w, f in x.terms.items() if word_degree(w) == (0, 0)])


def left_invariance_rhs(x):
    """sum_i h(x_i'')(mu, mu) x_i'."""
    acc = {}
    for (w1, w2), c in coproduct(x).terms.items():
        h = haar_word(w2)
        if h.is_structural_zero():
            continue
        coef = subst(c, {"rho": "mu"}) * subst(h, {"lam": "mu"})
        acc.setdefault(w1, []).append(coef)
    return AlgElement({w: add_many(v) for w, v in acc.items()})


def right_invariance_rhs(x):
    """sum_i h(x_i')(lambda, lambda) x_i''."""
    acc = {}
    for (w1, w2), c in coproduct(x).terms.items():
        h = haar_word(w1)
        if h.is_structural_zero():
            continue
        coef = subst(c, {"rho": "lam"}) * subst(h, {"mu": "lam"})
        acc.setdefault(w2, []).append(coef)
    return AlgElement({w: add_many(v) for w, v in acc.items()})


# ---------------------------------------------------------------------------
# closed forms

def _poch(form, n):
    return qs.qpoch(qpow(form), n, Q2)


def _q2(n):
    return qs.qpoch(Q2, n, Q2)


def schur_closed_form(M, j, k, N, l, m):
    """h(t^M_{jk} (t^N_{lm})^*)."""
    if (M, j, k) != (N, l, m):
        return ZERO
    num = _q2(j) * _poch("-2*lam", j) * _q2(M - j) * _poch(_neg_form(1 + M - k), M - k)
    den = (_poch(f"-2*lam-{2 * (M + 1 - j)}", j) * _q2(k)
           * _q2(M - k) * _poch(_neg_form(M - 2 * k), M - k))
    return q ** (2 * (M - k)) * (1 - Q2) / (1 - q ** (2 * (M + 1))) * num / den


def htt_closed_form(M, k, x, N, l, y):
    """h(t^M_{kx} t^N_{ly})."""
    if M != N or k + l != M or x + y != M:
        return ZERO
    num = _q2(k) * _poch("-2*lam", k) * _q2(l) * _poch(_neg_form(1 + y), y)
    den = _poch(f"-2*lam-{2 * (1 + l)}", k) * _q2(x) * _q2(y) * _poch(_neg_form(y - x), y)
    return (-q) ** (l + y) * num / den * (1 - Q2) / (1 - q ** (2 * (M + 1)))


def _neg_form(a):
    """The form -2(mu + a)."""
    return f"-2*mu-{2 * a}" if a >= 0 else f"-2*mu+{-2 * a}"


def pkm_poly(j, k, m):
    """p_j^{(k,m)}(Xi/2) in Xi."""
    params = (qpow("mu-lam+1"), qpow(f"lam-mu+{1 + 2 * k}"), qpow(f"lam+mu+{3 + 2 * m}"), qpow("-lam-mu-1"))
    return qs.askey_wilson_poly(j, *params, base=Q2)


def aw_weight_poly(k, m):
    """h_k(Xi/2, q^{lam-mu+1}; q^2) h_m(Xi/2, q^{lam+mu+3}; q^2) in Xi."""
    return poly_mul(qs.awmonomial_poly(k, qpow("lam-mu+1"), Q2), qs.awmonomial_poly(m, qpow("lam+mu+3"), Q2))


def aw_norm(j, l, k, m):
    if j != l:
        return ZERO
    return ((1 - Q2) / (1 - q ** (2 * (2 * j + k + m + 1)))
            * _q2(j) * _q2(j + k) * _q2(j + m) / _q2(j + k + m)
            * _poch("-2*lam", j) * _poch("2*lam+4", j + k + m)
            * _poch("-2*mu", j + k) * _poch("2*mu+4", j + m))


def product_prefactor(j, k, l, m):
    """The scalar in front of h_k h_m p_j^{(k,m)} p_l^{(k,m)} in the expansion
    of t^{2j+k+m}_{j,j+k} (t^{2l+k+m}_{l,l+k})^*."""
    e = _scaled("lam-mu+1", j + l)
    e = (e[0] + k * (j + l) - m * (1 + m), e[1] + (("mu", -2 * m),))
    return ((-1) ** m * qpow(e) * _poch("-2*mu", k - m) / (_poch("-2*mu", j + k) * _poch("-2*mu", l + k))
            * _q2(j + k + m) * _q2(l + k + m) / (_q2(j + k) * _q2(j + m) * _q2(l + k) * _q2(l + m))
            * _poch("2*lam+4", k + m) / (_poch("2*lam+4", j + k + m) * _poch("2*lam+4", l + k + m)))


# ---------------------------------------------------------------------------
# verification

def verify_haar(chk, N_max=3):
    """h(t^N_{kj}) = delta_{0N} and the moment recursion."""
    chk.equal("haar-one", "such that $h(1)=1$", [], haar(AlgElement.one()), ONE)
    for d in range(1, MAX_MOMENT + 1):
        chk.equal("moment-recursion", ANCHOR_H, [d], contract(p_poly(d)), ZERO)
    for k in range(1, 4):
        t = matelem(2 * k, k, k)
        chk.equal("moment-lmep", "it is enough to do this for $t_{kk}^{2k}$", [k],
                  to_xi_poly(t, strict=True), XiPoly(p_poly(k)).scale(n_const(k)))
    for N in range(N_max + 1):
        for k in range(N + 1):
            for j in range(N + 1):
                chk.equal("haar-matelem", ANCHOR_H, [N, k, j], haar(matelem(N, k, j)), ONE if N == 0 else ZERO)
    for d in range(3):
        x = xi_poly_element([ZERO] * d + [ONE])
        chk.equal("xi-roundtrip", ANCHOR_XI, [d], to_xi_poly(x, strict=True), XiPoly([ZERO] * d + [ONE]))
    return chk


def verify_moment_orthogonality(chk, d=3):
    """The p_k(Xi/2) are orthogonal for the moment functional, with nonzero
    squared norms equal to the k = m = 0 case of the four-parameter formula."""
    for k in range(d + 1):
        for l in range(d + 1):
            if k + l > MAX_MOMENT:
                continue
            val = contract(poly_mul(list(p_poly(k)), list(p_poly(l))))
            chk.equal("moment-orthogonality", "form an orthogonal system", [k, l], val, aw_norm(k, l, 0, 0))
    return chk


def _f00_element(rng, degree):
    terms = {"c" * k + "b" * k: random_scalar(rng) for k in range(degree + 1)}
    return AlgElement(terms)


def verify_invariance(chk, bound=3, samples=4, seed=0):
    rng = random.Random(f"haar-invariance|{seed}")
    cases = [("one", AlgElement.one()), ("gamma-beta", AlgElement.word("cb")), ("t2-11", matelem(2, 1, 1))]
    for n in range(bound + 1):
        for i in range(samples):
            cases.append((f"random-{n}-{i}", random_element(rng, max_degree=n, nterms=4)))
            cases.append((f"f00-{n}-{i}", _f00_element(rng, n // 2 + 1)))
    for name, x in cases:
        lhs = AlgElement.scalar(haar(x))
        chk.equal("left-invariance", ANCHOR_INV, [name], lhs, left_invariance_rhs(x))
        chk.equal("right-invariance", ANCHOR_INV, [name], lhs, right_invariance_rhs(x))
    for n in range(3):
        x = _f00_element(rng, n)
        chk.equal("star-compatibility", ANCHOR_H, [n], haar(star(x)), bar(haar(x)))
        f, g = random_scalar(rng, ("lam",)), random_scalar(rng, ("mu",))
        chk.equal("prealgebra-homomorphism", ANCHOR_H, [n], haar(x.scale(f * g)), f * g * haar(x))
    return chk


def verify_schur(chk, M_max=2):
    idx = [(M, j, k) for M in range(M_max + 1) for j in range(M + 1) for k in range(M + 1)]
    for M, k, j in idx:
        chk.equal("star-matelem", ANCHOR_TAST, [M, k, j], star(matelem(M, k, j)),
                  matelem(M, M - k, M - j).scale((-q) ** (k - j)))
    for M, j, k in idx:
        t = matelem(M, j, k)
        for N, l, m in idx:
            s = matelem(N, l, m)
            chk.equal("schur", ANCHOR_SCHUR, [M, j, k, N, l, m], haar(t * star(s)),
                      schur_closed_form(M, j, k, N, l, m))
            chk.equal("schur-product", "Applying $h$ to", [M, j, k, N, l, m], haar(t * s),
                      htt_closed_form(M, j, k, N, l, m))
    return chk


def verify_aw_orthogonality(chk, bound=2):
    r = range(bound + 1)
    for k in r:
        for m in r:
            w = aw_weight_poly(k, m)
            for j in r:
                for l in r:
                    integrand = poly_mul(poly_mul(w, pkm_poly(j, k, m)), pkm_poly(l, k, m))
                    chk.equal("aw-orthogonality", ANCHOR_AW, [j, l, k, m], contract(integrand),
                              aw_norm(j, l, k, m))
                    if 2 * max(j, l) + k + m <= 2:
                        lhs = to_xi_poly(matelem(2 * j + k + m, j, j + k) * star(matelem(2 * l + k + m, l, l + k)),
                                         strict=True)
                        rhs = XiPoly(integrand).scale(product_prefactor(j, k, l, m))
                        chk.equal("aw-product-expansion", ANCHOR_PRODUCT, [j, l, k, m], lhs, rhs)
    return chk
