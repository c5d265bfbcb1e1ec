"""
Tensor elements, the coproduct, and verification of the bialgebroid and Hopf
algebroid axioms.

A TensorElement with n factors stores {(w_1, ..., w_n): c} with the
coefficient c written in front of the whole tensor. Its variables are
lambda, one rho per inner slot and mu:

    n = 2: lam, rho, mu           n = 3: lam, rho1, rho2, mu

where f(rho) = f(mu) (x) 1 = 1 (x) f(lambda).
"""

from __future__ import annotations

import random
from collections import defaultdict

from . import algebra as alg
from .algebra import SL2, AlgElement, antipode_word, counit, word_degree, word_nf
from .scalars import (
    ONE, ZERO, DifferenceOperator, _lift, add_many, diffop_antipode,
    diffop_star, shifts, subst,
)


class IncompatibleGrading(ValueError):
    pass


def tvars(n):
    if n == 1:
        return ["lam", "mu"]
    if n == 2:
        return ["lam", "rho", "mu"]
    return ["lam"] + [f"rho{i}" for i in range(1, n)] + ["mu"]


def _factor_rename(f, n, i):
    """A scalar of factor i (in lambda, mu) written in the tensor variables."""
    v = tvars(n)
    return subst(f, {"lam": v[i], "mu": v[i + 1]})


def _move_left(f, words):
    """c with (w_1 (x) ... (x) w_n) f = c (w_1 (x) ... (x) w_n)."""
    v = tvars(len(words))
    amounts = {}
    for i, w in enumerate(words):
        amounts[v[i]] = -word_degree(w)[0]
    amounts[v[-1]] = -word_degree(words[-1])[1]
    return shifts(f, **amounts)


class TensorElement:
    __slots__ = ("n", "terms", "mode")

    def __init__(self, terms=None, n=2, mode=SL2):
        self.n = n
        self.mode = mode
        self.terms = {k: f for k, f in (terms or {}).items() if not f.is_structural_zero()}

    @classmethod
    def from_factors(cls, *xs):
        """x_1 (x) ... (x) x_n for AlgElements x_i."""
        n = len(xs)
        acc = defaultdict(list)

        def rec(i, words, coef):
            if i == n:
                acc[tuple(words)].append(coef)
                return
            for w, f in xs[i].terms.items():
                rec(i + 1, words + [w], coef * _factor_rename(f, n, i))

        rec(0, [], ONE)
        return cls({k: add_many(v) for k, v in acc.items()}, n, xs[0].mode)

    @classmethod
    def scalar(cls, f, n=2, mode=SL2):
        return cls({("",) * n: _lift(f)}, n, mode)

    def check_grading(self):
        for words in self.terms:
            for a, b in zip(words, words[1:]):
                if word_degree(a)[1] != word_degree(b)[0]:
                    raise IncompatibleGrading(f"inner bidegrees do not match in {words}")
        return True

    def __add__(self, other):
        terms = dict(self.terms)
        for k, f in other.terms.items():
            terms[k] = terms[k] + f if k in terms else f
        return TensorElement(terms, self.n, self.mode)

    def __neg__(self):
        return TensorElement({k: -f for k, f in self.terms.items()}, self.n, self.mode)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, f):
        f = _lift(f)
        return TensorElement({k: f * g for k, g in self.terms.items()}, self.n, self.mode)

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("tensor length mismatch")
        n = self.n
        acc = defaultdict(list)
        for ws, f in self.terms.items():
            for vs, g in other.terms.items():
                coef = f * _move_left(g, ws)
                partial = [((), coef)]
                for i in range(n):
                    nf = word_nf(ws[i] + vs[i], self.mode)
                    partial = [
                        (k + (w,), c * (h if h is ONE else _factor_rename(h, n, i)))
                        for k, c in partial for w, h in nf.items()
                    ]
                for k, c in partial:
                    acc[k].append(c)
        return TensorElement({k: add_many(v) for k, v in acc.items()}, n, self.mode)

    def difference(self, other):
        keys = set(self.terms) | set(other.terms)
        return [self.terms.get(k, ZERO) - other.terms.get(k, ZERO) for k in sorted(keys)]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            parts.append(f"({self.terms[k]})*" + " (x) ".join(alg._word_display(w) for w in k))
        return " + ".join(parts)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# coproduct

_GEN_COPRODUCT = {
    "a": [("a", "a"), ("b", "c")],
    "b": [("a", "b"), ("b", "d")],
    "c": [("c", "a"), ("d", "c")],
    "d": [("c", "b"), ("d", "d")],
}

_DELTA = {}


def coproduct_word(w, mode=SL2):
    key = (mode, w)
    got = _DELTA.get(key)
    if got is None:
        if not w:
            got = TensorElement.scalar(ONE, 2, mode)
        elif len(w) == 1:
            got = TensorElement({pair: ONE for pair in _GEN_COPRODUCT[w]}, 2, mode)
        else:
            got = coproduct_word(w[0], mode) * coproduct_word(w[1:], mode)
        _DELTA[key] = got
    return got


def coproduct(x):
    """Algebra homomorphism with Delta(L_ab) = sum_x L_ax (x) L_xb,
    Delta(f(lambda)) = f(lambda) (x) 1, Delta(f(mu)) = 1 (x) f(mu)."""
    out = TensorElement({}, 2, x.mode)
    for w, f in x.terms.items():
        out = out + coproduct_word(w, x.mode).scale(f)
    return out


def coproduct_letters(w, mode=SL2):
    """Product of the generator coproducts in the order of the (possibly
    non-basis) word w."""
    out = TensorElement.scalar(ONE, 2, mode)
    for ch in w:
        out = out * coproduct_word(ch, mode)
    return out


def delta_left(t):
    """(Delta (x) id) applied to a two-fold tensor."""
    acc = TensorElement({}, 3, t.mode)
    for (m1, m2), c in t.terms.items():
        c3 = subst(c, {"lam": "lam", "rho": "rho2", "mu": "mu"})
        d = coproduct_word(m1, t.mode)
        terms = {}
        for (a, b), g in d.terms.items():
            terms[(a, b, m2)] = c3 * subst(g, {"lam": "lam", "rho": "rho1", "mu": "rho2"})
        acc = acc + TensorElement(terms, 3, t.mode)
    return acc


def delta_right(t):
    """(id (x) Delta) applied to a two-fold tensor."""
    acc = TensorElement({}, 3, t.mode)
    for (m1, m2), c in t.terms.items():
        c3 = subst(c, {"lam": "lam", "rho": "rho1", "mu": "mu"})
        d = coproduct_word(m2, t.mode)
        terms = {}
        for (a, b), g in d.terms.items():
            terms[(m1, a, b)] = c3 * subst(g, {"lam": "rho1", "rho": "rho2", "mu": "mu"})
        acc = acc + TensorElement(terms, 3, t.mode)
    return acc


def counit_left(t):
    """(epsilon (x) id) under the identification T_{-alpha} (x) x = x."""
    out = defaultdict(list)
    for (m1, m2), c in t.terms.items():
        b = alg.counit_word(m1)
        if b is None:
            continue
        if b != -word_degree(m2)[0]:
            raise IncompatibleGrading("counit shift does not match the bidegree")
        out[m2].append(subst(c, {"rho": "lam"}))
    return AlgElement({w: add_many(v) for w, v in out.items()}, t.mode)


def counit_right(t):
    """(id (x) epsilon) under the identification x (x) T_{-beta} = x."""
    out = defaultdict(list)
    for (m1, m2), c in t.terms.items():
        b = alg.counit_word(m2)
        if b is None:
            continue
        if b != -word_degree(m1)[1]:
            raise IncompatibleGrading("counit shift does not match the bidegree")
        out[m1].append(subst(c, {"rho": "mu"}))
    return AlgElement({w: add_many(v) for w, v in out.items()}, t.mode)


# ---------------------------------------------------------------------------
# multiplication on the coproduct, with both placements of rho

def mul_id_antipode(t, placement="left"):
    """m (id (x) S) on a two-fold tensor. The rho coefficient is read either
    as mu_r on the left factor ("left") or mu_l on the right one ("right")."""
    acc = AlgElement.zero()
    for (m1, m2), c in t.terms.items():
        P = AlgElement.word(m1) * antipode_word(m2)
        L = word_degree(m1)[0] - word_degree(m2)[1]
        R = word_degree(m1)[1] - word_degree(m2)[0]
        rho = "mu" if placement == "left" else ("mu", -R)
        coef = subst(c, {"lam": "lam", "rho": _affine(rho), "mu": _affine(("lam", -L))})
        acc = acc + P.scale(coef)
    return acc


def mul_antipode_id(t, placement="left"):
    """m (S (x) id) on a two-fold tensor."""
    acc = AlgElement.zero()
    for (m1, m2), c in t.terms.items():
        P = antipode_word(m1) * AlgElement.word(m2)
        Ls, Rs = -word_degree(m1)[1], -word_degree(m1)[0]
        # read as mu_r in front of m1, rho becomes mu_l after S(m1); read as
        # mu_l in front of m2 it crosses S(m1) directly; both give this shift
        rho = ("lam", -Ls)
        coef = subst(c, {"lam": _affine(("mu", -Rs)), "rho": _affine(rho), "mu": _affine(("mu", -Rs))})
        acc = acc + P.scale(coef)
    return acc


def _affine(spec):
    if isinstance(spec, str):
        return spec
    var, a = spec
    return f"{var}{a:+d}" if a else var


def eps_one(x):
    """mu_l(epsilon(x) 1)."""
    return AlgElement.scalar(counit(x).apply(ONE), x.mode)


def eps_one_right(x):
    """mu_r(T_alpha(epsilon(x) 1)) summed over homogeneous components."""
    out = AlgElement.zero(x.mode)
    for (L, R), comp in x.components().items():
        v = counit(comp).apply(ONE)
        out = out + AlgElement.scalar(subst(v, {"lam": f"mu{L:+d}" if L else "mu"}), x.mode)
    return out


def antipode_tensor(t):
    """sigma (S (x) S) on a two-fold tensor."""
    acc = TensorElement({}, 2, t.mode)
    for (m1, m2), c in t.terms.items():
        L1, R1 = word_degree(m1)
        L2, R2 = word_degree(m2)
        coef = subst(c, {"lam": f"mu{L1:+d}" if L1 else "mu",
                         "rho": f"rho{R1:+d}" if R1 else "rho",
                         "mu": f"lam{R2:+d}" if R2 else "lam"})
        acc = acc + TensorElement.from_factors(antipode_word(m2), antipode_word(m1)).scale(coef)
    return acc


def star_tensor(t):
    """(* (x) *) on a two-fold tensor."""
    acc = TensorElement({}, 2, t.mode)
    for (m1, m2), c in t.terms.items():
        L1, R1 = word_degree(m1)
        R2 = word_degree(m2)[1]
        coef = shifts(c, lam=L1, rho=R1, mu=R2)
        acc = acc + TensorElement.from_factors(alg.star(AlgElement.word(m1)),
                                               alg.star(AlgElement.word(m2))).scale(coef)
    return acc


# ---------------------------------------------------------------------------
# the hat tensor product

class HatTensor:
    """Element of A ^(x) A; the coefficient in (lambda, mu) stands in front
    of the left factor."""

    __slots__ = ("terms", "mode")

    def __init__(self, terms=None, mode=SL2):
        self.mode = mode
        self.terms = {k: f for k, f in (terms or {}).items() if not f.is_structural_zero()}

    @classmethod
    def from_factors(cls, x, y):
        acc = defaultdict(list)
        for w1, f in x.terms.items():
            for w2, g in y.terms.items():
                acc[(w1, w2)].append(f * alg.move_left(g, w1))
        return cls({k: add_many(v) for k, v in acc.items()}, x.mode)


def mul_out(h):
    """Multiplication A ^(x) A -> A."""
    acc = AlgElement.zero(h.mode)
    for (m1, m2), c in h.terms.items():
        acc = acc + AlgElement.word(m1 + m2, h.mode, c)
    return acc


def hat_coproduct(h):
    """(Delta (x) Delta) on A ^(x) A, as {(a, b, c, d): coefficient} in
    (A ~(x) A) ^(x) (A ~(x) A) with variables lam, rho1, mu, rho2."""
    acc = defaultdict(list)
    for (m1, m2), C in h.terms.items():
        for (a, b), g in coproduct_word(m1, h.mode).terms.items():
            g1 = subst(g, {"lam": "lam", "rho": "rho1", "mu": "mu"})
            La, Rb = word_degree(a)[0], word_degree(b)[1]
            for (c, d), k in coproduct_word(m2, h.mode).terms.items():
                k1 = subst(k, {"lam": f"lam{-La:+d}" if La else "lam", "rho": "rho2",
                               "mu": f"mu{-Rb:+d}" if Rb else "mu"})
                acc[(a, b, c, d)].append(C * g1 * k1)
    return {k: add_many(v) for k, v in acc.items()}


def sigma23(x, placement="c"):
    """(A ~(x) B) ^(x) (C ~(x) D) -> (A ^(x) C) ~(x) (B ^(x) D).

    The inner variable of the right pair is rho2 = mu_r on c = mu_l on d;
    it is carried across either through c ("c") or through d ("d")."""
    out = {}
    for (a, b, c, d), f in x.items():
        if word_degree(a)[1] != word_degree(b)[0] or word_degree(c)[1] != word_degree(d)[0]:
            raise IncompatibleGrading(f"inner bidegrees do not match in {(a, b, c, d)}")
        s = word_degree(a)[1] if placement == "c" else word_degree(b)[0]
        g = subst(f, {"lam": "lam", "rho1": "rho", "mu": "mu", "rho2": f"rho{-s:+d}" if s else "rho"})
        out[(a, c, b, d)] = out[(a, c, b, d)] + g if (a, c, b, d) in out else g
    return out


def mul_pairs(y, mode=SL2):
    """(m (x) m) on (A ^(x) A) ~(x) (A ^(x) A)."""
    acc = TensorElement({}, 2, mode)
    for (a, c, b, d), f in y.items():
        acc = acc + TensorElement.from_factors(AlgElement.word(a + c, mode),
                                               AlgElement.word(b + d, mode)).scale(f)
    return acc


# ---------------------------------------------------------------------------
# verification suites

def _random_coef(seed, w):
    return alg.random_scalar(random.Random(f"{seed}|{w}"))


def verify_bialgebroid(chk, degree_bound=4, mode=SL2, products=20, seed=0):
    words = alg.basis_words(degree_bound, mode)
    for w in words:
        x = AlgElement({w: _random_coef(seed, w)}, mode)
        d = coproduct(x)
        d.check_grading()
        chk.equal("coassociativity", "coassociativity of the coproduct", [w],
                  delta_left(d), delta_right(d))
        chk.equal("counit-left", "left counit axiom", [w], counit_left(d), x)
        chk.equal("counit-right", "right counit axiom", [w], counit_right(d), x)
    rng = random.Random(f"{seed}|products")
    small = alg.basis_words(min(degree_bound, 2), mode)
    for i in range(products):
        w1, w2 = rng.choice(small), rng.choice(small)
        x = AlgElement({w1: alg.random_scalar(rng)}, mode)
        y = AlgElement({w2: alg.random_scalar(rng)}, mode)
        chk.equal("coproduct-multiplicative", "coproduct is an algebra homomorphism",
                  [w1, w2], coproduct(x * y), coproduct(x) * coproduct(y))
    for i in range(products):
        w = alg.random_word(rng, rng.randint(2, 4))
        chk.equal("coproduct-relations", "coproduct respects the defining relations",
                  [w], coproduct(AlgElement.word(w, mode)), coproduct_letters(w, mode))
    return chk


def verify_hopf(chk, degree_bound=3, seed=0):
    for w in alg.basis_words(degree_bound, SL2):
        x = AlgElement({w: _random_coef(seed, w)})
        d = coproduct(x)
        left = mul_id_antipode(d, "left")
        right = mul_id_antipode(d, "right")
        chk.equal("antipode-right-representatives", "placement of rho in m(id (x) S)",
                  [w], left, right)
        chk.equal("antipode-right", "m(id (x) S) Delta = mu_l(epsilon 1)", [w], left, eps_one(x))
        left2 = mul_antipode_id(d, "left")
        chk.equal("antipode-left-representatives", "placement of rho in m(S (x) id)",
                  [w], left2, mul_antipode_id(d, "right"))
        chk.equal("antipode-left", "m(S (x) id) Delta = mu_r(T epsilon 1)", [w],
                  left2, eps_one_right(x))
        L, R = word_degree(w)
        sx = alg.antipode(x)
        chk.truth("antipode-grading", "antipode reverses the bigrading", [w],
                  all(d_ == (-R, -L) for d_ in sx.bidegrees()), sx.bidegrees())
        chk.equal("coproduct-antipode", "Delta S = sigma (S (x) S) Delta", [w],
                  coproduct(sx), antipode_tensor(d))
        chk.equal("counit-antipode", "epsilon S = S epsilon", [w],
                  counit(sx), diffop_antipode(counit(x)))
        chk.equal("coproduct-star", "(* (x) *) Delta = Delta *", [w],
                  star_tensor(d), coproduct(alg.star(x)))
        chk.equal("counit-star", "epsilon * = * epsilon", [w],
                  counit(alg.star(x)), diffop_star(counit(x)))
        sx = alg.star(x)
        chk.equal("star-involution", "antimultiplicative involution", [w], alg.star(sx), x)
        chk.truth("star-grading", "antimultiplicative involution", [w],
                  all(d_ == (-L, -R) for d_ in sx.bidegrees()), sx.bidegrees())
        chk.equal("antipode-star", "$S$ and $\\ast$ are related by", [w],
                  alg.antipode(alg.star(alg.antipode(sx))), x)
    rng = random.Random(f"{seed}|star")
    words = alg.basis_words(degree_bound, SL2)
    for i in range(20):
        x, y = (AlgElement({rng.choice(words): alg.random_scalar(rng)}) for _ in range(2))
        chk.equal("star-antimultiplicative", "antimultiplicative involution", [i],
                  alg.star(x * y), alg.star(y) * alg.star(x))
    # L-matrix form
    S = {ch: antipode_word(ch) for ch in "abcd"}
    Lm = {(1, 1): "a", (1, -1): "b", (-1, 1): "c", (-1, -1): "d"}
    for a in (1, -1):
        for b in (1, -1):
            target = AlgElement.one() if a == b else AlgElement.zero()
            lhs = sum((S[Lm[a, x]] * AlgElement.gen(Lm[x, b]) for x in (1, -1)), AlgElement.zero())
            rhs = sum((AlgElement.gen(Lm[a, x]) * S[Lm[x, b]] for x in (1, -1)), AlgElement.zero())
            chk.equal("antipode-matrix", "S(L) L = 1", [a, b], lhs, target)
            chk.equal("antipode-matrix", "L S(L) = 1", [a, b, "right"], rhs, target)
    from .scalars import u, q
    f = (u("lam") ** 2 + q) / (u("lam") - 3)
    chk.equal("antipode-moment", "S(mu_l f) = mu_r f", ["l"],
              alg.antipode(alg.embed_l(f)), alg.embed_r(f))
    chk.equal("antipode-moment", "S(mu_r f) = mu_l f", ["r"],
              alg.antipode(alg.embed_r(f)), alg.embed_l(f))
    chk.equal("antipode-unit", "S(1) = 1", [], alg.antipode(AlgElement.one()), AlgElement.one())
    return chk


def verify_hat(chk, degree_bound=2, seed=0):
    """Multiplication A ^(x) A -> A intertwines the coproducts, with sigma23
    evaluated through both placements of the inner variable."""
    rng = random.Random(f"{seed}|hat")
    words = alg.basis_words(degree_bound)
    for i in range(12):
        w1, w2 = rng.choice(words), rng.choice(words)
        h = HatTensor({(w1, w2): alg.random_scalar(rng)})
        hc = hat_coproduct(h)
        y_c = sigma23(hc, "c")
        y_d = sigma23(hc, "d")
        keys = set(y_c) | set(y_d)
        chk.zero("sigma23-placement", "mu_r c = mu_l d inside sigma23", [w1, w2],
                 [y_c.get(k, ZERO) - y_d.get(k, ZERO) for k in keys])
        chk.equal("multiplication-intertwiner", "Delta m = (m (x) m) sigma23 (Delta (x) Delta)",
                  [w1, w2], coproduct(mul_out(h)), mul_pairs(y_c))
    return chk
