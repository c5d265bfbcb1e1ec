"""
Normal-form arithmetic in F_R(M(2)) and F_R(SL(2)).

Elements are finite sums f(lambda, mu) * w with the coefficient written to the
left of a basis word w. Words are strings over the letters

    a = alpha, b = beta, c = gamma, d = delta

with bidegrees a:(1,1) b:(1,-1) c:(-1,1) d:(-1,-1). A scalar g standing to the
right of a word w of bidegree (L, R) moves to the left as g(lambda-L, mu-R).

SL2 basis: c^k b^l a^m and d^k c^l b^m (k >= 1).  M2 basis: a^k b^l c^m d^n.
"""

from __future__ import annotations

import random
import sys
from collections import defaultdict

from .scalars import (
    F, G, H, I, MINUS_ONE, ONE, ZERO, DifferenceOperator, PoleAtPoint, Sampler, Scalar,
    _lift, add_many, const, q, qpow, rename, shift, shifts, subst, u,
)
from . import qseries as qs

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

SL2 = "SL2"
M2 = "M2"

DEG = {"a": (1, 1), "b": (1, -1), "c": (-1, 1), "d": (-1, -1)}
NAMES = {"a": "alpha", "b": "beta", "c": "gamma", "d": "delta"}
LETTER = {v: k for k, v in NAMES.items()}


def word_degree(w):
    L = R = 0
    for ch in w:
        dl, dr = DEG[ch]
        L += dl
        R += dr
    return L, R


def move_left(f, w):
    """The scalar g with  w f = g w."""
    L, R = word_degree(w)
    return shifts(f, lam=-L, mu=-R)


# ---------------------------------------------------------------------------
# rewriting rules; each maps an adjacent letter pair to a list of
# (coefficient in (lambda, mu), replacement word)

qF_lam = q * F("lam")
qF_mu1 = q * F("mu-1")

_PAIR_RULES = {
    "ab": [(qF_mu1, "ba")],
    "ac": [(qF_lam, "ca")],
    "bd": [(qF_lam, "db")],
    "cd": [(qF_mu1, "dc")],
    "ba": [(1 / qF_mu1, "ab")],
    "ca": [(1 / qF_lam, "ac")],
    "db": [(1 / qF_lam, "bd")],
    "dc": [(1 / qF_mu1, "cd")],
}

SL2_RULES = dict(_PAIR_RULES)
SL2_RULES.update({
    # beta gamma = G(lambda) gamma beta + I(lambda,mu) alpha delta, then c = 1
    "bc": [(G("lam") + I("lam", "mu") * qF_lam, "cb"), (I("lam", "mu"), "")],
    "ad": [(ONE, ""), (qF_lam, "cb")],
    "da": [(ONE, ""), (1 / (q * F("mu-1")), "cb")],
})

M2_RULES = dict(_PAIR_RULES)
M2_RULES.update({
    "cb": [(1 / G("lam"), "bc"), (-I("lam", "mu") / G("lam"), "ad")],
    "da": [(G("mu") / G("lam"), "ad"), (-H("lam", "mu") / G("lam"), "bc")],
})

_ORDER_A = {"c": 0, "b": 1, "a": 2}
_ORDER_D = {"d": 0, "c": 1, "b": 2}
_ORDER_M2 = {"a": 0, "b": 1, "c": 2, "d": 3}


def _sl2_step(w, variant):
    """Position of the pair to rewrite, or None when w is a basis word."""
    if "a" in w and "d" in w:
        pos = [i for i, ch in enumerate(w) if ch in "ad"]
        pairs = [(pos[t], pos[t + 1]) for t in range(len(pos) - 1) if w[pos[t]] != w[pos[t + 1]]]
        i, j = pairs[0] if variant == 0 else pairs[-1]
        if j == i + 1:
            return i
        return i if variant == 0 else j - 1
    order = _ORDER_D if "d" in w else _ORDER_A
    inv = [i for i in range(len(w) - 1) if order[w[i]] > order[w[i + 1]]]
    if not inv:
        return None
    return inv[0] if variant == 0 else inv[-1]


def _m2_step(w, variant):
    inv = [i for i in range(len(w) - 1) if _ORDER_M2[w[i]] > _ORDER_M2[w[i + 1]]]
    if not inv:
        return None
    return inv[0] if variant == 0 else inv[-1]


_NF_CACHE = {}


def word_nf(w, mode=SL2, variant=0):
    """Normal form of a word as {basis word: coefficient}."""
    key = (mode, variant, w)
    got = _NF_CACHE.get(key)
    if got is not None:
        return got
    if mode == SL2:
        i = _sl2_step(w, variant)
        rules = SL2_RULES
    else:
        i = _m2_step(w, variant)
        rules = M2_RULES
    if i is None:
        res = {w: ONE}
    else:
        prefix, pair, suffix = w[:i], w[i:i + 2], w[i + 2:]
        acc = defaultdict(list)
        for coef, rep in rules[pair]:
            c = move_left(coef, prefix)
            for v, f in word_nf(prefix + rep + suffix, mode, variant).items():
                acc[v].append(c if f is ONE else c * f)
        res = {v: add_many(fs) for v, fs in acc.items()}
        res = {v: f for v, f in res.items() if not f.is_structural_zero()}
    _NF_CACHE[key] = res
    return res


def is_basis_word(w, mode=SL2):
    step = _sl2_step(w, 0) if mode == SL2 else _m2_step(w, 0)
    return step is None


# ---------------------------------------------------------------------------
# zero pruning

_PRUNER = None


def _pruner():
    global _PRUNER
    if _PRUNER is None:
        _PRUNER = Sampler(seed="prune", points=20)
    return _PRUNER


def prune_terms(terms):
    """Drop coefficients that vanish at 20 random points."""
    sam = _pruner()
    out = {}
    for w, f in terms.items():
        if f.is_structural_zero():
            continue
        if f.kind == "c" or sam.check_zero([f], "prune") is not None:
            out[w] = f
    sam.evaluator.clear()
    return out


# ---------------------------------------------------------------------------

class AlgElement:
    """Sum of f(lambda, mu) * basis word."""

    __slots__ = ("mode", "terms")

    def __init__(self, terms=None, mode=SL2):
        self.mode = mode
        self.terms = {w: f for w, f in (terms or {}).items() if not f.is_structural_zero()}

    # --- constructors -----------------------------------------------------
    @classmethod
    def one(cls, mode=SL2):
        return cls({"": ONE}, mode)

    @classmethod
    def zero(cls, mode=SL2):
        return cls({}, mode)

    @classmethod
    def gen(cls, letter, mode=SL2):
        letter = LETTER.get(letter, letter)
        return cls({letter: ONE}, mode)

    @classmethod
    def scalar(cls, f, mode=SL2):
        return cls({"": _lift(f)}, mode)

    @classmethod
    def word(cls, w, mode=SL2, coef=ONE, variant=0):
        """Normal form of coef * w for an arbitrary word w."""
        c = _lift(coef)
        return cls({v: c * f for v, f in word_nf(w, mode, variant).items()}, mode)

    # --- linear structure -------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for w, f in other.terms.items():
            terms[w] = terms[w] + f if w in terms else f
        return AlgElement(terms, self.mode)

    __radd__ = __add__

    def __neg__(self):
        return AlgElement({w: -f for w, f in self.terms.items()}, self.mode)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, f):
        """Left multiplication by a scalar f(lambda, mu)."""
        f = _lift(f)
        return AlgElement({w: f * g for w, g in self.terms.items()}, self.mode)

    def _coerce(self, other):
        if isinstance(other, AlgElement):
            if other.mode != self.mode:
                raise ValueError("mixed algebra modes")
            return other
        return AlgElement.scalar(_lift(other), self.mode)

    # --- product ----------------------------------------------------------
    def __mul__(self, other):
        if not isinstance(other, AlgElement):
            other = _lift(other)
            if other is None:
                return NotImplemented
            # right multiplication by a scalar
            return AlgElement({w: f * move_left(other, w) for w, f in self.terms.items()}, self.mode)
        return mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        out = AlgElement.one(self.mode)
        for _ in range(n):
            out = out * self
        return out

    # --- inspection -------------------------------------------------------
    def difference(self, other):
        other = self._coerce(other)
        words = set(self.terms) | set(other.terms)
        return [self.terms.get(w, ZERO) - other.terms.get(w, ZERO) for w in sorted(words)]

    def components(self):
        """Homogeneous components keyed by bidegree."""
        out = defaultdict(dict)
        for w, f in self.terms.items():
            out[word_degree(w)][w] = f
        return {d: AlgElement(t, self.mode) for d, t in out.items()}

    def bidegrees(self):
        return sorted({word_degree(w) for w in self.terms})

    def component(self, deg):
        return AlgElement({w: f for w, f in self.terms.items() if word_degree(w) == tuple(deg)}, self.mode)

    def pruned(self):
        return AlgElement(prune_terms(self.terms), self.mode)

    def coefficient(self, w):
        return self.terms.get(w, ZERO)

    def __str__(self):
        return render(self)

    __repr__ = __str__


def _word_display(w):
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        n = j - i
        parts.append(NAMES[w[i]] + (f"^{n}" if n > 1 else ""))
        i = j
    return "*".join(parts)


def render(x):
    if not x.terms:
        return "0"
    out = []
    for w in sorted(x.terms, key=lambda v: (len(v), v)):
        f = x.terms[w]
        coef = str(f)
        if f.kind == "+":
            coef = f"({coef})"
        if not w:
            out.append(coef)
        elif f.kind == "c" and f.args == 1:
            out.append(_word_display(w))
        elif f.kind == "c" and f.args == -1:
            out.append("-" + _word_display(w))
        else:
            out.append(f"{coef}*{_word_display(w)}")
    return " + ".join(out).replace("+ -", "- ")


def mul(x, y, variant=0):
    if x.mode != y.mode:
        raise ValueError("mixed algebra modes")
    acc = defaultdict(list)
    for m, f in x.terms.items():
        for n, g in y.terms.items():
            coef = f * move_left(g, m)
            for w, h in word_nf(m + n, x.mode, variant).items():
                acc[w].append(coef if h is ONE else coef * h)
    return AlgElement({w: add_many(v) for w, v in acc.items()}, x.mode)


def gens(mode=SL2):
    return tuple(AlgElement.gen(ch, mode) for ch in "abcd")


def embed_l(f, mode=SL2):
    """mu_l(f) = f(lambda) for f a Scalar in lambda."""
    return AlgElement.scalar(f, mode)


def embed_r(f, mode=SL2):
    """mu_r(f) = f(mu) for f a Scalar in lambda."""
    return AlgElement.scalar(rename(_lift(f), lam="mu"), mode)


def normalize(genword, mode=SL2, variant=0, prune=True):
    """Normal form of a word with interleaved scalar factors.

    genword is a sequence whose items are letters ('a'..'d' or 'alpha'..),
    or pairs ('l', f) / ('r', f) for mu_l(f), mu_r(f) with f a Scalar in
    lambda, or ('s', f) for a scalar already written in (lambda, mu)."""
    coef = ONE
    word = ""
    for item in genword:
        if isinstance(item, str):
            word += LETTER.get(item, item)
            continue
        tag, f = item
        f = _lift(f)
        if tag == "r":
            f = rename(f, lam="mu")
        coef = coef * move_left(f, word)
    x = AlgElement.word(word, mode, coef, variant)
    return x.pruned() if prune else x


# ---------------------------------------------------------------------------
# involutions and structure maps

_STAR_LETTER = {"a": (ONE, "d"), "b": (-q, "c"), "c": (-1 / q, "b"), "d": (ONE, "a")}


def star(x):
    """Antilinear antimultiplicative involution: alpha* = delta,
    beta* = -q gamma, gamma* = -q^-1 beta, delta* = alpha."""
    if x.mode != SL2:
        raise ValueError("star is defined on F_R(SL(2))")
    acc = defaultdict(list)
    for w, f in x.terms.items():
        c = ONE
        img = ""
        for ch in reversed(w):
            k, l = _STAR_LETTER[ch]
            c = c * k
            img += l
        L, R = word_degree(w)
        coef = c * shifts(f, lam=L, mu=R)
        for v, h in word_nf(img, SL2).items():
            acc[v].append(coef * h)
    return AlgElement({w: add_many(v) for w, v in acc.items()}, SL2)


def _antipode_gen(ch):
    if ch == "a":
        return AlgElement({"d": F("lam") / F("mu")})
    if ch == "b":
        return AlgElement({"b": -1 / (q * F("mu"))})
    if ch == "c":
        return AlgElement({"c": -q * F("lam")})
    return AlgElement({"a": ONE})


_S_CACHE = {}


def antipode_word(w):
    got = _S_CACHE.get(w)
    if got is None:
        if not w:
            got = AlgElement.one()
        else:
            got = antipode_word(w[1:]) * _antipode_gen(w[0])
        _S_CACHE[w] = got
    return got


def swap_lm(f):
    return subst(f, {"lam": "mu", "mu": "lam"})


def antipode(x):
    """S(f(lambda,mu) w) = S(w) f(mu,lambda)."""
    if x.mode != SL2:
        raise ValueError("the antipode is defined on F_R(SL(2))")
    acc = defaultdict(list)
    for w, f in x.terms.items():
        L, R = word_degree(w)
        g = shifts(swap_lm(f), lam=R, mu=L)
        for v, h in antipode_word(w).terms.items():
            acc[v].append(h * g)
    return AlgElement({w: add_many(v) for w, v in acc.items()}, SL2)


def counit_word(w):
    """epsilon of a basis word: T_b or None when it vanishes."""
    if "b" in w or "c" in w:
        return None
    return w.count("d") - w.count("a")


def counit(x):
    """Algebra homomorphism into difference operators in lambda."""
    out = {}
    for w, f in x.terms.items():
        b = counit_word(w)
        if b is None:
            continue
        out.setdefault(b, []).append(subst(f, {"mu": "lam"}))
    return DifferenceOperator({b: add_many(v) for b, v in out.items()})


_PHI_LETTER = {"a": "d", "b": "b", "c": "c", "d": "a"}


def phi_auto(x):
    """The automorphism alpha <-> delta, f(lambda) -> f(-2-mu),
    g(mu) -> g(-2-lambda)."""
    acc = defaultdict(list)
    for w, f in x.terms.items():
        g = subst(f, {"lam": "-2-mu", "mu": "-2-lam"})
        img = "".join(_PHI_LETTER[ch] for ch in w)
        for v, h in word_nf(img, x.mode).items():
            acc[v].append(g * h)
    return AlgElement({w: add_many(v) for w, v in acc.items()}, x.mode)


# ---------------------------------------------------------------------------
# central elements

def det_c_forms(mode=M2):
    """The four expressions of the dynamical determinant."""
    W = lambda w, f=ONE: AlgElement.word(w, mode, f)
    return [
        W("da", F("lam") / F("mu")) - W("bc", 1 / (q * F("mu"))),
        W("ad") - W("cb", q * F("lam")),
        W("ad", F("lam-1") / F("mu-1")) - W("bc", q * F("lam-1")),
        W("da") - W("cb", 1 / (q * F("mu-1"))),
    ]


def det_c(mode=M2):
    return det_c_forms(mode)[1]


def xi_forms(mode=SL2):
    W = lambda w, f=ONE: AlgElement.word(w, mode, f)
    pre = qpow("-lam-mu-2")
    x1 = (AlgElement.scalar(qpow("lam-mu+1") + qpow("mu-lam-1"), mode)
          - W("cb", pre * (1 - qpow("2*lam+4")) * (1 - qpow("2*mu"))))
    x2 = (AlgElement.scalar(qpow("lam-mu-1") + qpow("mu-lam+1"), mode)
          - W("bc", pre * (1 - qpow("2*lam+2")) * (1 - qpow("2*mu+2"))))
    return [x1, x2]


_XI = {}


def xi(mode=SL2):
    """The central element Xi."""
    if mode not in _XI:
        _XI[mode] = xi_forms(mode)[0]
    return _XI[mode]


_XI_POW = {}


def xi_power(k):
    if k not in _XI_POW:
        _XI_POW[k] = AlgElement.one() if k == 0 else xi_power(k - 1) * xi()
    return _XI_POW[k]


def xi_poly_element(coeffs):
    """sum_i coeffs[i] Xi^i as an AlgElement."""
    out = AlgElement.zero()
    for i, c in enumerate(coeffs):
        out = out + xi_power(i).scale(c)
    return out


CCR_KINDS = {
    "ad": ("-lam-mu-1", ["-2*lam-2", "-2*mu"], lambda k: ONE),
    "da": ("lam+mu+3", ["2*lam+4", "2*mu+2"], lambda k: ONE),
    "bc": ("mu-lam+1", ["-2*lam-2", "2*mu+2"], lambda k: (-1 / q) ** k),
    "cb": ("lam-mu+1", ["2*lam+4", "-2*mu"], lambda k: (-q) ** k),
}


def ccr_form(kind, k):
    """Closed form of a^k d^k, d^k a^k, b^k c^k or c^k b^k as a polynomial in
    Xi (list of coefficients)."""
    kind = {"alphadelta": "ad", "deltaalpha": "da", "betagamma": "bc", "gammabeta": "cb"}.get(kind, kind)
    a_exp, dens, sign = CCR_KINDS[kind]
    pre = sign(k) / qs.qpochs([qpow(e) for e in dens], k)
    return [pre * c for c in qs.awmonomial_poly(k, qpow(a_exp))]


# ---------------------------------------------------------------------------
# R-matrix

WEIGHTS = (1, -1)
_BASIS2 = [(1, 1), (1, -1), (-1, 1), (-1, -1)]


def r_matrix():
    """R(lambda) as {((a,b),(x,y)): entry}, rows (a,b), columns (x,y)."""
    U = qpow("2*lam+2")
    R = {}
    R[(1, 1), (1, 1)] = q
    R[(-1, -1), (-1, -1)] = q
    R[(1, -1), (1, -1)] = ONE
    R[(1, -1), (-1, 1)] = (1 / q - q) / (U - 1)
    R[(-1, 1), (1, -1)] = (1 / q - q) / (1 / U - 1)
    R[(-1, 1), (-1, 1)] = G("lam")
    return R


def r_matrix_rational():
    """The q -> 1 rational R-matrix in the additive variable lambda."""
    from .scalars import lin
    x = lin("lam") + 1
    R = {}
    R[(1, 1), (1, 1)] = ONE
    R[(-1, -1), (-1, -1)] = ONE
    R[(1, -1), (1, -1)] = ONE
    R[(1, -1), (-1, 1)] = -1 / x
    R[(-1, 1), (1, -1)] = 1 / x
    R[(-1, 1), (-1, 1)] = (x * x - 1) / (x * x)
    return R


def _lin_shift(f, a):
    from .scalars import subst as _subst
    return _subst(f, {"lam": (a, (("lam", 1),))})


def _apply_R(R, vec, i, j, shift_from=None):
    """Apply R^{ij}(lambda - h^(shift_from)) to a vector {triple: Scalar}."""
    out = defaultdict(list)
    for basis, coef in vec.items():
        x, y = basis[i], basis[j]
        s = -basis[shift_from] if shift_from is not None else 0
        for (a, b), (xx, yy) in R:
            if (xx, yy) != (x, y):
                continue
            entry = shift(R[(a, b), (xx, yy)], "lam", s)
            new = list(basis)
            new[i], new[j] = a, b
            out[tuple(new)].append(entry * coef)
    return {k: add_many(v) for k, v in out.items()}


def qdyb_sides(R=None):
    """Both sides of the QDYB equation on each basis vector of V(x)V(x)V."""
    R = R or r_matrix()
    out = []
    for basis in [(x, y, z) for x in WEIGHTS for y in WEIGHTS for z in WEIGHTS]:
        v = {basis: ONE}
        lhs = _apply_R(R, _apply_R(R, _apply_R(R, v, 1, 2, 0), 0, 2), 0, 1, 2)
        rhs = _apply_R(R, _apply_R(R, _apply_R(R, v, 0, 1), 0, 2, 1), 1, 2)
        out.append((basis, lhs, rhs))
    return out


def verify_qdyb(chk, R=None, name="qdyb"):
    for basis, lhs, rhs in qdyb_sides(R):
        keys = set(lhs) | set(rhs)
        chk.zero(name, "quantum dynamical Yang-Baxter equation", list(basis),
                 [lhs.get(k, ZERO) - rhs.get(k, ZERO) for k in keys])
    return chk


_L = {(1, 1): "a", (1, -1): "b", (-1, 1): "c", (-1, -1): "d"}


def rll_sides(a, b, c, d, mode=M2):
    """Both sides of the RLL relation; R^{xy}_{ac} is the matrix entry in
    row (a, c) and column (x, y)."""
    R = r_matrix()
    lhs = AlgElement.zero(mode)
    rhs = AlgElement.zero(mode)
    for x in WEIGHTS:
        for y in WEIGHTS:
            e = R.get(((a, c), (x, y)))
            if e is not None:
                lhs = lhs + AlgElement.word(_L[x, b] + _L[y, d], mode, e)
            e = R.get(((x, y), (b, d)))
            if e is not None:
                rhs = rhs + AlgElement.word(_L[c, y] + _L[a, x], mode, rename(e, lam="mu"))
    return lhs, rhs


def verify_rll(chk, mode=M2):
    for a in WEIGHTS:
        for b in WEIGHTS:
            for c in WEIGHTS:
                for d in WEIGHTS:
                    lhs, rhs = rll_sides(a, b, c, d, mode)
                    chk.equal("rll", "RLL relations", [a, b, c, d], lhs, rhs)
    return chk


def hd_sum(s):
    out = AlgElement.zero()
    for m in range(s + 1):
        coef = (qs.qbinom(s, m) * (-1) ** (s - m) * q ** ((2 * m + 1) * (m - s))
                * qs.qpoch(qpow("-2*mu"), s - m) / qs.qpoch(qpow(-2 * m - 2, mu=-2), s - m))
        out = out + AlgElement.word("c" * (s - m) + "d" * m + "a" * m + "b" * (s - m), SL2, coef)
    return out


def verify_hd(chk, s_max=3):
    for s in range(s_max + 1):
        chk.equal("hd-identity", "unit as a sum of gamma delta alpha beta words", [s],
                  hd_sum(s), AlgElement.one())
    return chk


def renormalize(x):
    """Normal form of an element whose words are already normal."""
    out = AlgElement.zero(x.mode)
    for w, f in x.terms.items():
        out = out + AlgElement.word(w, x.mode, f)
    return out


def verify_kernel(chk, triples=30, words=50, N_max=4, seed=0):
    """Soundness of the normal-form kernel."""
    from .corep import rank_at_point

    anchor = "form together a basis for"
    rng = random.Random(f"kernel|{seed}")
    for mode in (SL2, M2):
        for i in range(words):
            w = random_word(rng, rng.randint(2, 6))
            x = AlgElement.word(w, mode)
            chk.equal("confluence", anchor, [mode, w], x, AlgElement.word(w, mode, variant=1))
            chk.equal("idempotent", anchor, [mode, w], renormalize(x), x)
            v = random_word(rng, rng.randint(1, 3))
            f, g = random_scalar(rng), random_scalar(rng)
            lhs = normalize([("s", f)] + list(w), mode) + normalize([("s", g)] + list(v), mode)
            chk.equal("linear", anchor, [mode, w, v], lhs, x.scale(f) + AlgElement.word(v, mode).scale(g))
            chk.equal("word-product", anchor, [mode, w, v], x * AlgElement.word(v, mode),
                      AlgElement.word(w + v, mode))
        for i in range(triples):
            a, b, c = (random_element(rng, 2, 3, mode) for _ in range(3))
            chk.equal("associative", anchor, [mode, i], (a * b) * c, a * (b * c))
    for N in range(N_max + 1):
        rows = [AlgElement.word("c" * k + "d" * l + "a" * m + "b" * (N - k - l - m), M2)
                for k in range(N + 1) for l in range(N + 1 - k) for m in range(N + 1 - k - l)]
        rank = None
        for attempt in range(5):
            try:
                rank = rank_at_point(rows, f"{seed}|{N}|{attempt}")
                break
            except PoleAtPoint:
                continue
        chk.truth("basis-rank", anchor, [N], rank == len(rows), {"rank": rank, "elements": len(rows)})
    return chk


# ---------------------------------------------------------------------------
# random test data

def random_scalar(rng, vars=("lam", "mu")):
    """A small random rational function of q and the given variables."""
    num = const(rng.randint(-5, 5) or 1)
    den = ONE
    for v in vars:
        e = rng.randint(-2, 2)
        num = num + rng.randint(1, 4) * q ** rng.randint(-2, 2) * u(v) ** e
        den = den + const(rng.randint(1, 3)) * u(v) ** rng.randint(1, 2) * q ** rng.randint(0, 2)
    return num / den


def basis_words(max_degree, mode=SL2):
    out = []
    for n in range(max_degree + 1):
        for k in range(n + 1):
            for l in range(n - k + 1):
                m = n - k - l
                if mode == SL2:
                    out.append("c" * k + "b" * l + "a" * m)
                    if k >= 1:
                        out.append("d" * k + "c" * l + "b" * m)
                else:
                    for p in range(m + 1):
                        out.append("a" * k + "b" * l + "c" * p + "d" * (m - p))
    return sorted(set(out), key=lambda w: (len(w), w))


def random_element(rng, max_degree=2, nterms=3, mode=SL2):
    words = basis_words(max_degree, mode)
    terms = {}
    for w in rng.sample(words, min(nterms, len(words))):
        terms[w] = random_scalar(rng)
    return AlgElement(terms, mode)


def random_word(rng, length, letters="abcd"):
    return "".join(rng.choice(letters) for _ in range(length))
