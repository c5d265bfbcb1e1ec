"""
Terminating basic hypergeometric series and the orthogonal polynomials built
from them. The base defaults to q^2; every routine takes it as an argument.
"""

from __future__ import annotations

import itertools

from .scalars import (
    ONE, ZERO, Point, Scalar, _lift, add_many, evaluate, prod, q, u, const,
    PoleAtPoint,
)

Q2 = q ** 2


class NonTerminating(ValueError):
    """No numerator parameter of the form base^(-n) was found."""


class DomainError(ValueError):
    pass


def qpoch(a, k, base=Q2):
    """(a; base)_k, with (a; base)_{-n} = 1/(a base^{-n}; base)_n."""
    a = _lift(a)
    if k >= 0:
        return prod(ONE - a * base ** j for j in range(k))
    return 1 / qpoch(a * base ** k, -k, base)


def qpochs(args, k, base=Q2):
    """(a_1, ..., a_r; base)_k."""
    return prod(qpoch(a, k, base) for a in args)


def qbinom(n, k, base=Q2):
    if not 0 <= k <= n:
        raise DomainError(f"qbinom({n}, {k})")
    return qpoch(base, n, base) / (qpoch(base, k, base) * qpoch(base, n - k, base))


def awmonomial(k, x, a, base=Q2):
    """h_k(x, a) = prod_{j<k} (1 - 2 a base^j x + a^2 base^{2j})."""
    x, a = _lift(x), _lift(a)
    return prod(ONE - 2 * a * base ** j * x + a * a * base ** (2 * j) for j in range(k))


def awmonomial_xi(k, xi, a, base=Q2):
    """(a xi, a/xi; base)_k, i.e. h_k((xi + 1/xi)/2, a)."""
    return qpoch(a * xi, k, base) * qpoch(a / xi, k, base)


def awmonomial_poly(k, a, base=Q2):
    """Coefficients of h_k(X/2, a) as a polynomial in X."""
    poly = [ONE]
    for j in range(k):
        c0 = ONE + a * a * base ** (2 * j)
        c1 = -a * base ** j
        nxt = [ZERO] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i] = nxt[i] + c * c0
            nxt[i + 1] = nxt[i + 1] + c * c1
        poly = nxt
    return poly


_PROBE = [Point("3/7", seed="probe-1"), Point("5/11", seed="probe-2")]


def termination_degree(numerators, base=Q2, limit=64):
    """Smallest n with some numerator equal to base^{-n}, found by exact
    evaluation at two fixed generic points."""
    best = None
    for a in numerators:
        a = _lift(a)
        try:
            vals = [evaluate(a, p) for p in _PROBE]
            bases = [evaluate(base, p) for p in _PROBE]
        except PoleAtPoint:
            continue
        for n in range(limit + 1):
            if best is not None and n >= best:
                break
            if all(v * b ** n == 1 for v, b in zip(vals, bases)):
                best = n
                break
    if best is None:
        raise NonTerminating("no numerator of the form base^-n")
    return best


def phi(numerators, denominators, z, base=Q2, n=None):
    """Terminating r+1 phi r (balanced/unit-argument form, no extra factor).
    n is the last summation index; detected from the numerators if omitted."""
    if n is None:
        n = termination_degree(numerators, base)
    z = _lift(z)
    terms = []
    term = ONE
    for k in range(n + 1):
        terms.append(term)
        if k == n:
            break
        num = prod(ONE - _lift(a) * base ** k for a in numerators)
        den = (ONE - base ** (k + 1)) * prod(ONE - _lift(b) * base ** k for b in denominators)
        term = term * num * z / den
    return add_many(terms)


def phi43(numerators, denominators, base=Q2, n=None, z=None):
    if len(numerators) != 4 or len(denominators) != 3:
        raise ValueError("4phi3 needs four numerator and three denominator parameters")
    return phi(numerators, denominators, base if z is None else z, base, n)


def very_well_poised(a, bs, z, base=Q2, n=None):
    """Terminating (r+1)W(r)(a; b_1, ..., b_{r-2}; base, z)."""
    if n is None:
        n = termination_degree(bs, base)
    a, z = _lift(a), _lift(z)
    bs = [_lift(b) for b in bs]
    terms = []
    ratio = ONE
    for k in range(n + 1):
        terms.append((ONE - a * base ** (2 * k)) / (ONE - a) * ratio)
        num = (ONE - a * base ** k) * prod(ONE - b * base ** k for b in bs)
        den = (ONE - base ** (k + 1)) * prod(ONE - a * base ** (k + 1) / b for b in bs)
        ratio = ratio * num * z / den
    return add_many(terms)


def w87(a, bs, z, base=Q2, n=None):
    if len(bs) != 5:
        raise ValueError("8W7 needs five parameters b_1..b_5")
    return very_well_poised(a, bs, z, base, n)


def w65(a, bs, z, base=Q2, n=None):
    if len(bs) != 3:
        raise ValueError("6W5 needs three parameters")
    return very_well_poised(a, bs, z, base, n)


def qracah_mu(x, c, d, base=Q2):
    return base ** (-x) + _lift(c) * _lift(d) * base ** (x + 1)


def qracah(n, x, a, b, c, d, base=Q2):
    """R_n(mu(x); a, b, c, d; base) for integers n, x >= 0."""
    a, b, c, d = (_lift(t) for t in (a, b, c, d))
    return phi([base ** (-n), a * b * base ** (n + 1), base ** (-x), c * d * base ** (x + 1)],
               [a * base, b * d * base, c * base], base, base, min(n, x))


# The standard Askey-Wilson normalisation uses abcd base^{n-1}; see the
# decisions ledger for why this (and not base^{n+1}) is the consistent one.
AW_EXPONENT = -1


def askey_wilson(n, xi, a, b, c, d, base=Q2):
    """p_n((xi + 1/xi)/2; a, b, c, d; base)."""
    xi, a, b, c, d = (_lift(t) for t in (xi, a, b, c, d))
    pre = qpochs([a * b, a * c, a * d], n, base) / a ** n
    series = phi([base ** (-n), a * b * c * d * base ** (n + AW_EXPONENT), a * xi, a / xi],
                 [a * b, a * c, a * d], base, base, n)
    return pre * series


def askey_wilson_poly(n, a, b, c, d, base=Q2):
    """Coefficients of p_n(X/2; a, b, c, d) as a polynomial in X."""
    a, b, c, d = (_lift(t) for t in (a, b, c, d))
    pre = qpochs([a * b, a * c, a * d], n, base) / a ** n
    out = [ZERO] * (n + 1)
    coeff = ONE
    abcd = a * b * c * d * base ** (n + AW_EXPONENT)
    for j in range(n + 1):
        h = awmonomial_poly(j, a, base)
        for i, c_i in enumerate(h):
            out[i] = out[i] + pre * coeff * c_i
        if j == n:
            break
        coeff = coeff * (ONE - base ** (j - n)) * (ONE - abcd * base ** j) * base / (
            (ONE - base ** (j + 1)) * (ONE - a * b * base ** j) * (ONE - a * c * base ** j)
            * (ONE - a * d * base ** j))
    return out


def little_qjacobi(n, x, a, b, base=Q2):
    """p_n(x; a, b; base) = 2phi1(base^-n, ab base^{n+1}; a base; base, base x)."""
    a, b, x = _lift(a), _lift(b), _lift(x)
    return phi([base ** (-n), a * b * base ** (n + 1)], [a * base], base * x, base, n)


def poly_eval(coeffs, x):
    x = _lift(x)
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# identity suites

def _gen(name):
    return u("qs_" + name)


def verify_qseries(chk, bound=4):
    """Pochhammer conventions, Pascal rules, the 8W7 transformations, the
    terminating 6W5 sum, Askey-Wilson symmetry and q-Racah degree."""
    a = _gen("a")
    for k in range(1, bound + 1):
        chk.equal("qpoch-negative-index", "negative-index Pochhammer", [k],
                  qpoch(a, -k) * qpoch(a * Q2 ** (-k), k), ONE)
    for n in range(bound + 1):
        for k in range(1, n + 1):
            chk.equal("qbinom-pascal-1", "Pascal rule (left)", [n, k],
                      qbinom(n + 1, k), Q2 ** (n - k + 1) * qbinom(n, k - 1) + qbinom(n, k))
            chk.equal("qbinom-pascal-2", "Pascal rule (right)", [n, k],
                      qbinom(n + 1, k), qbinom(n, k - 1) + Q2 ** k * qbinom(n, k))
    w87_transformations(chk, bound)
    w65_sum_check(chk, bound)
    aw_symmetry(chk, bound)
    qracah_degree(chk, bound)
    verify_symmetries(chk, min(bound, 4))
    return chk


def w87_transformations(chk, bound=4, base=q):
    a, b, c, d, e = (_gen(t) for t in "abcde")
    for n in range(bound + 1):
        qn = base ** (-n)
        z = a * a * base ** (n + 2) / (b * c * d * e)
        lhs = w87(a, [qn, b, c, d, e], z, base, n)
        rhs1 = (qpochs([a * base, a * base / (b * c), a * base / (b * d), a * base / (b * e)], n, base)
                / qpochs([a * base / b, a * base / c, a * base / d, a * base / e], n, base) * b ** n
                * phi43([qn, b, b * qn / a, base / z],
                        [b * c * qn / a, b * d * qn / a, b * e * qn / a], base, n))
        chk.equal("w87-transformation-1", "8W7 to balanced 4phi3", [n], lhs, rhs1)
        sign = -1 if n % 2 else 1
        rhs2 = (qpochs([a * base, b, base / z], n, base)
                / qpochs([a * base / c, a * base / d, a * base / e], n, base)
                * sign * base ** (-(n * (n + 1)) // 2) * z ** n
                * phi43([qn, a * base / (b * c), a * base / (b * d), a * base / (b * e)],
                        [base * qn / b, a * base / b, qn * z], base, n))
        chk.equal("w87-transformation-2", "8W7 to reversed 4phi3", [n], lhs, rhs2)


def w65_sum_check(chk, bound=4, base=q):
    a, b, c = (_gen(t) for t in "abc")
    for n in range(bound + 1):
        lhs = w65(a, [b, c, base ** (-n)], a * base ** (n + 1) / (b * c), base, n)
        rhs = qpochs([a * base, a * base / (b * c)], n, base) / qpochs([a * base / b, a * base / c], n, base)
        chk.equal("w65-summation", "terminating 6W5 summation", [n], lhs, rhs)
    return chk


def aw_symmetry(chk, bound=4, base=Q2):
    a, b, c, d, xi = (_gen(t) for t in ("a", "b", "c", "d", "xi"))
    params = [a, b, c, d]
    for n in range(bound + 1):
        ref = askey_wilson(n, xi, *params, base=base)
        for perm in itertools.permutations(range(4)):
            if perm == (0, 1, 2, 3):
                continue
            other = askey_wilson(n, xi, *(params[i] for i in perm), base=base)
            chk.equal("askey-wilson-symmetry", "Askey-Wilson parameter symmetry", [n, list(perm)],
                      ref, other)
        coeffs = askey_wilson_poly(n, *params, base=base)
        chk.equal("askey-wilson-expansion", "Askey-Wilson monomial expansion", [n],
                  ref, poly_eval(coeffs, xi + 1 / xi))


def qracah_degree(chk, bound=4, base=Q2):
    """R_n is a polynomial of degree n in mu(x): the (n+1)-st divided
    difference through n+2 nodes vanishes, the n-th does not."""
    a, b, c, d = (_gen(t) for t in "abcd")
    for n in range(bound + 1):
        nodes = [qracah_mu(x, c, d, base) for x in range(n + 2)]
        vals = [qracah(n, x, a, b, c, d, base) for x in range(n + 2)]
        chk.zero("qracah-degree", "q-Racah polynomial degree", [n],
                 [_divided_difference(nodes, vals)])
        lead = _divided_difference(nodes[:-1], vals[:-1])
        bad = chk.sampler.check_zero([lead], f"lead{n}")
        chk.truth("qracah-exact-degree", "q-Racah polynomial degree", [n], bad is not None,
                  "leading divided difference vanished")


def _divided_difference(xs, ys):
    table = list(ys)
    m = len(xs)
    for level in range(1, m):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(m - level)]
    return table[0]


def verify_symmetries(chk, N_max=4, base=q):
    """The three q-Racah symmetries for all n, x <= N <= N_max."""
    a, b, d = (_gen(t) for t in "abd")
    c = _gen("c")
    for N in range(N_max + 1):
        cN = base ** (-N - 1)
        for n in range(N + 1):
            for x in range(N + 1):
                lhs = qracah(n, x, a, b, c, d, base)
                rhs = qracah(x, n, a, d * c / a, c, b * a / c, base)
                chk.equal("qracah-duality", "q-Racah n<->x duality", [n, x, N], lhs, rhs)
                lhs = qracah(n, x, a, b, cN, d, base)
                rhs1 = (d ** n * qpochs([b * base, a * base / d], n, base)
                        / qpochs([a * base, b * d * base], n, base)
                        * qracah(N - x, n, b, cN / (b * d), cN, base ** (N + 1) * a * b, base))
                chk.equal("qracah-symmetry-1", "q-Racah reflection x -> N-x", [n, x, N], lhs, rhs1)
                rhs2 = ((d * base ** (x - N)) ** x
                        * qpochs([a * base ** (1 + N - x) / d, b * base ** (1 + N - x)], x, base)
                        / qpochs([a * base, b * d * base], x, base)
                        * qracah(N - n, x, d * cN / a, cN / (b * d), cN, d, base))
                chk.equal("qracah-symmetry-2", "q-Racah reflection n -> N-n", [n, x, N], lhs, rhs2)
    return chk
