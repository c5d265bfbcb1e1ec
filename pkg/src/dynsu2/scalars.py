"""
Exact coefficient arithmetic.

A Scalar is an expression DAG over rational constants, the indeterminate q,
exponential variables u_x = q^x and (rarely) plain linear variables x.
Nothing is ever simplified symbolically: identities are decided by exact
evaluation at random rational points.

Substitutions act on the dynamical variables by integer affine maps
x -> c + sum e_y y, which on the exponential side reads
u_x -> q^c prod u_y^e_y. Shifts, renamings, the identification
mu -> lambda and the Phi map lambda -> -2-mu are all of this type, so a
single lazy substitution node covers them.
"""

from __future__ import annotations

import random
import re
import zlib
from fractions import Fraction

from gmpy2 import mpq

__all__ = [
    "Scalar", "Point", "PoleAtPoint", "SamplingExhausted", "Sampler",
    "DifferenceOperator", "const", "q", "u", "lin", "qpow", "aff", "F", "G",
    "H", "I", "ONE", "ZERO", "shift", "subst", "bar", "is_zero", "evaluate",
    "diffop_apply", "diffop_compose", "diffop_antipode", "var_display",
]


class PoleAtPoint(ZeroDivisionError):
    """A denominator vanished at the sample point."""


class SamplingExhausted(RuntimeError):
    """Too many consecutive sample points hit a pole."""


DISPLAY = {"lam": "lambda", "om": "omega", "om1": "omega1", "om2": "omega2",
           "rho1": "rho1", "rho2": "rho2"}


def var_display(name):
    return DISPLAY.get(name, name)


# ---------------------------------------------------------------------------
# affine forms  c + sum e_y * y  (c, e_y integers)

def _aff_norm(c, coeffs):
    items = tuple(sorted((v, e) for v, e in coeffs.items() if e))
    return (c, items)


_AFF_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*\*?\s*([A-Za-z_][A-Za-z_0-9]*)?")


def aff(spec=0, **coeffs):
    """Affine form. aff('mu-1'), aff(-1, mu=1) and aff('lam+2*mu') all work."""
    if isinstance(spec, tuple):
        return spec
    if isinstance(spec, str):
        return _parse_aff(spec)
    return _aff_norm(int(spec), coeffs)


def _parse_aff(text):
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty affine form")
    if text[0] not in "+-":
        text = "+" + text
    c, coeffs, pos = 0, {}, 0
    pattern = re.compile(r"([+-])(\d*)\*?([A-Za-z_][A-Za-z_0-9]*)?")
    while pos < len(text):
        m = pattern.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad affine form {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        num = int(m.group(2)) if m.group(2) else None
        name = m.group(3)
        if name is None:
            if num is None:
                raise ValueError(f"bad affine form {text!r}")
            c += sign * num
        else:
            name = {"lambda": "lam", "omega": "om"}.get(name, name)
            coeffs[name] = coeffs.get(name, 0) + sign * (1 if num is None else num)
        pos = m.end()
    return _aff_norm(c, coeffs)


def _aff_compose(form, mapping):
    """Substitute mapping[y] (an affine form) for each variable y of form."""
    c, items = form
    coeffs = {}
    for v, e in items:
        if v in mapping:
            c2, items2 = mapping[v]
            c += e * c2
            for w, f in items2:
                coeffs[w] = coeffs.get(w, 0) + e * f
        else:
            coeffs[v] = coeffs.get(v, 0) + e
    return _aff_norm(c, coeffs)


def _aff_str(form):
    c, items = form
    out = ""
    for v, e in items:
        name = var_display(v)
        if e == 1:
            term = name
        elif e == -1:
            term = "-" + name
        else:
            term = f"{e}*{name}"
        if out and not term.startswith("-"):
            out += "+"
        out += term
    if c or not out:
        out += (f"+{c}" if c > 0 and out else str(c))
    return out


# ---------------------------------------------------------------------------
# named auxiliary functions, all in terms of t = q^arg

def _F(qv, t):
    U = qv * qv * t * t
    return (U - 1 / (qv * qv)) / (U - 1)


def _G(qv, t):
    U = qv * qv * t * t
    q2 = qv * qv
    return (U - q2) * (U - 1 / q2) / ((U - 1) * (U - 1))


def _H(qv, t, s):
    q2 = qv * qv
    return (qv - 1 / qv) * (q2 * q2 * t * t * s * s - 1) / ((q2 * t * t - 1) * (q2 * s * s - 1))


def _I(qv, t, s):
    q2 = qv * qv
    return (qv - 1 / qv) * (q2 * s * s - q2 * t * t) / ((q2 * t * t - 1) * (q2 * s * s - 1))


FUNCS = {"F": _F, "G": _G, "H": _H, "I": _I}


# ---------------------------------------------------------------------------
# points

def _rat(x):
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        return mpq(Fraction(x).numerator, Fraction(x).denominator)
    return mpq(x)


class Point:
    """A sample point. Values of variables not given explicitly are drawn
    lazily and deterministically from (seed, name)."""

    __slots__ = ("q", "_u", "_x", "seed", "key", "base", "_rng_seed")

    def __init__(self, qv, u=None, x=None, seed=None, bound=97):
        self.q = _rat(qv)
        if self.q in (0, 1, -1):
            raise ValueError("q must avoid 0 and +-1")
        self._u = {k: _rat(v) for k, v in (u or {}).items()}
        self._x = {k: _rat(v) for k, v in (x or {}).items()}
        self.seed = seed
        self.base = self
        # lazily drawn values are a function of the seed, so the seed and the
        # explicit values identify the point
        self.key = ("P", seed, self.q, tuple(sorted(self._u.items())), tuple(sorted(self._x.items())))
        self._rng_seed = seed

    def _draw(self, kind, name):
        if self._rng_seed is None:
            raise KeyError(f"no value for variable {name!r} at point")
        rng = random.Random(zlib.crc32(f"{self._rng_seed}|{kind}|{name}".encode()))
        return _random_nonzero(rng)

    def get_u(self, name):
        v = self._u.get(name)
        if v is None:
            v = self._u[name] = self._draw("u", name)
            if v == 0:
                raise PoleAtPoint(name)
        return v

    def get_x(self, name):
        v = self._x.get(name)
        if v is None:
            v = self._x[name] = self._draw("x", name)
        return v

    def describe(self, names=()):
        out = {"q": str(self.q)}
        for n in sorted(set(names)):
            out["q^" + var_display(n)] = str(self.get_u(n))
        return out

    def __repr__(self):
        return f"Point(q={self.q}, u={self._u})"


class _Derived:
    """A point obtained from a base point by overriding some variables."""

    __slots__ = ("q", "base", "ou", "ox", "key")

    def __init__(self, base, ou, ox):
        self.q = base.q
        self.base = base
        self.ou = ou
        self.ox = ox
        self.key = (base.key, tuple(sorted(ou.items())), tuple(sorted(ox.items())))

    def get_u(self, name):
        v = self.ou.get(name)
        return self.base.get_u(name) if v is None else v

    def get_x(self, name):
        v = self.ox.get(name)
        return self.base.get_x(name) if v is None else v


def _random_nonzero(rng, bound=97):
    while True:
        a = rng.randint(-bound, bound)
        b = rng.randint(-bound, bound)
        if a and b:
            return mpq(a, b)


def random_point(seed, bound=97):
    rng = random.Random(zlib.crc32(f"q|{seed}".encode()))
    b = rng.randint(2, bound)
    a = rng.randint(1, b - 1)
    return Point(mpq(a, b), seed=seed)


# ---------------------------------------------------------------------------
# expression nodes

class Scalar:
    """Immutable expression node. Build with the module helpers and the
    arithmetic operators; compare with is_zero, never with ==."""

    __slots__ = ("kind", "args", "free", "__weakref__")

    def __init__(self, kind, args, free):
        self.kind = kind
        self.args = args
        self.free = free

    # --- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return _add((self, other))

    __radd__ = __add__

    def __sub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return _add((self, -other))

    def __rsub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return _add((other, -self))

    def __neg__(self):
        if self.kind == "c":
            return Scalar("c", -self.args, frozenset())
        return _mul((MINUS_ONE, self))

    def __mul__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return _mul((self, other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return _mul((self, _pow(other, -1)))

    def __rtruediv__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return _mul((other, _pow(self, -1)))

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return _pow(self, n)

    # --- inspection -------------------------------------------------------
    def is_const(self):
        return self.kind == "c"

    def const_value(self):
        return Fraction(int(self.args.numerator), int(self.args.denominator))

    def is_structural_zero(self):
        return self.kind == "c" and self.args == 0

    def eval(self, point):
        return evaluate(self, point)

    def __str__(self):
        return _render(self, 0)

    def __repr__(self):
        return f"Scalar({self})"

    def __bool__(self):
        raise TypeError("truth value of a Scalar is undecided; use is_zero")


def _lift(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)) or type(x).__name__ == "mpq":
        return const(x)
    return None


_CONST_CACHE = {}


def const(v):
    v = _rat(v)
    if v in _CONST_CACHE:
        return _CONST_CACHE[v]
    s = Scalar("c", v, frozenset())
    if len(_CONST_CACHE) < 512 and v.denominator < 1000 and abs(v.numerator) < 1000:
        _CONST_CACHE[v] = s
    return s


ZERO = const(0)
ONE = const(1)
MINUS_ONE = const(-1)
q = Scalar("q", None, frozenset())


def u(name):
    """The exponential variable q^name."""
    return Scalar("u", name, frozenset((name,)))


def lin(name):
    """The plain (additive) variable name."""
    return Scalar("x", name, frozenset((name,)))


def qpow(spec=0, **coeffs):
    """q raised to an integer affine form: qpow('2*lam-mu+1')."""
    c, items = aff(spec, **coeffs)
    factors = []
    if c:
        factors.append(_pow(q, c))
    for v, e in items:
        factors.append(_pow(u(v), e))
    if not factors:
        return ONE
    return _mul(tuple(factors))


def _func(name, *args):
    forms = tuple(aff(a) for a in args)
    free = frozenset(v for c, items in forms for v, _ in items)
    return Scalar("f", (name, forms), free)


def F(arg):
    """F(x) = (q^{2(x+1)} - q^{-2}) / (q^{2(x+1)} - 1)."""
    return _func("F", arg)


def G(arg):
    """G(x) = F(x)/F(x-1)."""
    return _func("G", arg)


def H(a1, a2):
    return _func("H", a1, a2)


def I(a1, a2):  # noqa: E743
    return _func("I", a1, a2)


def _add(terms):
    flat = []
    cval = mpq(0)
    for t in terms:
        if t.kind == "c":
            cval += t.args
        elif t.kind == "+" and len(t.args) <= 8:
            for s in t.args:
                if s.kind == "c":
                    cval += s.args
                else:
                    flat.append(s)
        else:
            flat.append(t)
    if cval != 0:
        flat.append(const(cval))
    if not flat:
        return ZERO
    if len(flat) == 1:
        return flat[0]
    free = frozenset().union(*(t.free for t in flat))
    return Scalar("+", tuple(flat), free)


def _mul(factors):
    flat = []
    cval = mpq(1)
    for t in factors:
        if t.kind == "c":
            if t.args == 0:
                return ZERO
            cval *= t.args
        elif t.kind == "*" and len(t.args) <= 8:
            for s in t.args:
                if s.kind == "c":
                    cval *= s.args
                else:
                    flat.append(s)
        else:
            flat.append(t)
    if not flat:
        return const(cval)
    if cval != 1:
        flat.insert(0, const(cval))
    if len(flat) == 1:
        return flat[0]
    free = frozenset().union(*(t.free for t in flat))
    return Scalar("*", tuple(flat), free)


def _pow(s, n):
    if n == 0:
        return ONE
    if n == 1:
        return s
    if s.kind == "c":
        if s.args == 0 and n < 0:
            raise PoleAtPoint("constant zero inverted")
        return const(s.args ** n)
    if s.kind == "^":
        return _pow(s.args[0], s.args[1] * n)
    return Scalar("^", (s, n), s.free)


def add_many(terms):
    """Sum of a list of Scalars as one node (keeps the DAG shallow)."""
    terms = [t for t in terms if not t.is_structural_zero()]
    if not terms:
        return ZERO
    if len(terms) == 1:
        return terms[0]
    flat, cval = [], mpq(0)
    for t in terms:
        if t.kind == "c":
            cval += t.args
        else:
            flat.append(t)
    if cval != 0:
        flat.append(const(cval))
    if not flat:
        return ZERO
    if len(flat) == 1:
        return flat[0]
    return Scalar("+", tuple(flat), frozenset().union(*(t.free for t in flat)))


def prod(factors):
    return _mul(tuple(factors))


# ---------------------------------------------------------------------------
# substitutions

def subst(s, mapping):
    """Simultaneous substitution of dynamical variables by affine forms,
    e.g. subst(s, {'mu': aff('lam')}) identifies mu with lambda."""
    s = _lift(s)
    mapping = {k: aff(v) for k, v in mapping.items()}
    mapping = {k: v for k, v in mapping.items() if k in s.free and v != (0, ((k, 1),))}
    if not mapping:
        return s
    kind = s.kind
    if kind == "u":
        return qpow(mapping[s.args])
    if kind == "x":
        c, items = mapping[s.args]
        out = const(c)
        for v, e in items:
            out = out + e * lin(v)
        return out
    if kind == "f":
        name, forms = s.args
        return _func(name, *(_aff_compose(f, mapping) for f in forms))
    if kind == "s":
        inner, m1 = s.args
        combined = {v: _aff_compose(form, mapping) for v, form in m1}
        for v, form in mapping.items():
            if v not in combined:
                combined[v] = form
        return _make_subst(inner, combined)
    if kind == "^":
        return _pow(subst(s.args[0], mapping), s.args[1])
    return _make_subst(s, mapping)


def _make_subst(inner, mapping):
    mapping = {k: v for k, v in mapping.items() if k in inner.free and v != (0, ((k, 1),))}
    if not mapping:
        return inner
    free = set(inner.free) - set(mapping)
    for form in mapping.values():
        free.update(v for v, _ in form[1])
    return Scalar("s", (inner, tuple(sorted(mapping.items()))), frozenset(free))


def shift(s, x, a):
    """T_a in the variable x: replaces u_x by q^a u_x."""
    if a == 0:
        return _lift(s)
    return subst(s, {x: (a, ((x, 1),))})


def shifts(s, **amounts):
    """Simultaneous shifts, e.g. shifts(f, lam=-1, mu=1)."""
    return subst(s, {x: (a, ((x, 1),)) for x, a in amounts.items() if a})


def rename(s, **names):
    """rename(s, mu='rho') replaces the variable mu by rho."""
    return subst(s, {x: (0, ((y, 1),)) for x, y in names.items()})


def bar(s):
    """Complex conjugation for the fixed real form: the identity."""
    return s


# ---------------------------------------------------------------------------
# evaluation

class Evaluator:
    """Evaluates Scalars with memoisation shared across calls."""

    def __init__(self):
        self.memos = {}
        self.derived = {}

    def clear(self):
        self.memos.clear()
        self.derived.clear()

    def _memo(self, point):
        m = self.memos.get(point.key)
        if m is None:
            m = self.memos[point.key] = {}
        return m

    def _transform(self, point, mapping):
        dkey = (point.key, mapping)
        p = self.derived.get(dkey)
        if p is not None:
            return p
        qv = point.q
        ou, ox = {}, {}
        for v, (c, items) in mapping:
            val = qv ** c if c else mpq(1)
            xv = mpq(c)
            for y, e in items:
                val *= point.get_u(y) ** e
                xv += e * point.get_x(y)
            ou[v] = val
            ox[v] = xv
        if isinstance(point, _Derived):
            nu = dict(point.ou)
            nu.update(ou)
            nx = dict(point.ox)
            nx.update(ox)
            p = _Derived(point.base, nu, nx)
        else:
            p = _Derived(point, ou, ox)
        self.derived[dkey] = p
        return p

    def value(self, node, point):
        memo = self._memo(point)
        got = memo.get(node)
        if got is not None:
            return got
        stack = [(node, point, memo)]
        while stack:
            n, p, m = stack[-1]
            if n in m:
                stack.pop()
                continue
            kind = n.kind
            try:
                if kind == "c":
                    m[n] = n.args
                elif kind == "q":
                    m[n] = p.q
                elif kind == "u":
                    m[n] = p.get_u(n.args)
                elif kind == "x":
                    m[n] = p.get_x(n.args)
                elif kind == "f":
                    name, forms = n.args
                    vals = []
                    for c, items in forms:
                        t = p.q ** c if c else mpq(1)
                        for y, e in items:
                            t *= p.get_u(y) ** e
                        vals.append(t)
                    m[n] = FUNCS[name](p.q, *vals)
                elif kind == "s":
                    inner, mapping = n.args
                    p2 = self._transform(p, mapping)
                    m2 = self._memo(p2)
                    v = m2.get(inner)
                    if v is None:
                        stack.append((inner, p2, m2))
                        continue
                    m[n] = v
                elif kind == "^":
                    child = n.args[0]
                    v = m.get(child)
                    if v is None:
                        stack.append((child, p, m))
                        continue
                    m[n] = v ** n.args[1]
                else:
                    pending = False
                    for child in n.args:
                        if child not in m:
                            stack.append((child, p, m))
                            pending = True
                    if pending:
                        continue
                    if kind == "+":
                        acc = mpq(0)
                        for child in n.args:
                            acc += m[child]
                    else:
                        acc = mpq(1)
                        for child in n.args:
                            acc *= m[child]
                    m[n] = acc
            except ZeroDivisionError as exc:
                raise PoleAtPoint(str(n)[:200]) from exc
            stack.pop()
        return memo[node]


def evaluate(s, point):
    """Exact value of s at point, as a Fraction."""
    v = Evaluator().value(_lift(s), point)
    return Fraction(int(v.numerator), int(v.denominator))


class Sampler:
    """Provides the sample points of one verification run.

    All identities share the same base points (so shared subexpressions are
    evaluated once); an identity that hits a pole at a base point gets a
    replacement drawn from a seed derived from its own id."""

    def __init__(self, seed=0, points=20, retries=50):
        self.seed = seed
        self.npoints = points
        self.retries = retries
        self.base = [random_point(f"{seed}|{j}") for j in range(points)]
        self.evaluator = Evaluator()

    def check_zero(self, exprs, ident=""):
        """Returns None if every expression vanishes at every point, else
        (point, index of offending expression)."""
        exprs = [_lift(e) for e in exprs]
        exprs = [e for e in exprs if not e.is_structural_zero()]
        if not exprs:
            return None
        ev = self.evaluator
        for j, pt in enumerate(self.base):
            attempt = 0
            while True:
                try:
                    for i, e in enumerate(exprs):
                        if ev.value(e, pt) != 0:
                            return pt, i
                    break
                except PoleAtPoint:
                    attempt += 1
                    if attempt > self.retries:
                        raise SamplingExhausted(ident)
                    pt = random_point(f"{self.seed}|{ident}|{j}|{attempt}")
        return None

    def values(self, s, j=0):
        return self.evaluator.value(_lift(s), self.base[j])


def is_zero(s, trials=20, seed=0):
    """True iff s vanishes exactly at `trials` random pole-free points."""
    return Sampler(seed, trials).check_zero([s], "is_zero") is None


# ---------------------------------------------------------------------------
# rendering

def _render(s, prec):
    kind = s.kind
    if kind == "c":
        v = s.args
        text = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        if (v < 0 and prec > 0) or (v.denominator != 1 and prec > 1):
            return f"({text})"
        return text
    if kind == "q":
        return "q"
    if kind == "u":
        return "q^" + var_display(s.args)
    if kind == "x":
        return var_display(s.args)
    if kind == "f":
        name, forms = s.args
        return f"{name}(" + ",".join(_aff_str(f) for f in forms) + ")"
    if kind == "^":
        base, n = s.args
        inner = _render(base, 3)
        text = f"{inner}^{n}" if n > 0 else f"{inner}^({n})"
        return text
    if kind == "s":
        inner, mapping = s.args
        sub = ",".join(f"{var_display(v)}->{_aff_str(f)}" for v, f in mapping)
        return f"[{_render(inner, 0)}]{{{sub}}}"
    if kind == "+":
        parts = [_render(t, 1) for t in s.args]
        text = " + ".join(parts).replace("+ -", "- ")
        return f"({text})" if prec > 0 else text
    if kind == "*":
        args = list(s.args)
        sign = ""
        if args[0].kind == "c" and args[0].args == -1:
            sign = "-"
            args = args[1:]
        text = sign + "*".join(_render(t, 2) for t in args)
        return f"({text})" if prec > 1 and sign else text
    raise ValueError(kind)


# ---------------------------------------------------------------------------
# difference operators

class DifferenceOperator:
    """Finite sum of f_i T_{b_i}; the f_i are Scalars in the single variable
    `var` (default lambda)."""

    def __init__(self, terms=None, var="lam"):
        self.var = var
        merged = {}
        for b, f in (terms.items() if isinstance(terms, dict) else (terms or [])):
            f = _lift(f)
            merged[b] = merged[b] + f if b in merged else f
        self.terms = {b: f for b, f in merged.items() if not f.is_structural_zero()}

    @classmethod
    def T(cls, b, var="lam"):
        return cls({b: ONE}, var)

    def __add__(self, other):
        terms = dict(self.terms)
        for b, f in other.terms.items():
            terms[b] = terms[b] + f if b in terms else f
        return DifferenceOperator(terms, self.var)

    def __sub__(self, other):
        return self + other.scale(MINUS_ONE)

    def scale(self, f):
        return DifferenceOperator({b: _lift(f) * g for b, g in self.terms.items()}, self.var)

    def __mul__(self, other):
        return diffop_compose(self, other)

    def apply(self, g):
        return diffop_apply(self, g)

    def coefficient_list(self):
        return sorted(self.terms.items())

    def difference(self, other):
        if not isinstance(other, DifferenceOperator):
            other = DifferenceOperator({0: other}, self.var)
        return diffop_difference(self, other)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({f})*T[{b}]" for b, f in sorted(self.terms.items()))

    __repr__ = __str__


def diffop_apply(D, g):
    return add_many([f * shift(g, D.var, b) for b, f in D.terms.items()])


def diffop_compose(D1, D2):
    """(f T_a)(g T_b) = f (T_a g) T_{a+b}."""
    out = {}
    for a, f in D1.terms.items():
        for b, g in D2.terms.items():
            out.setdefault(a + b, []).append(f * shift(g, D1.var, a))
    return DifferenceOperator({k: add_many(v) for k, v in out.items()}, D1.var)


def diffop_antipode(D):
    """S(f T_a) = T_{-a} o f = (T_{-a} f) T_{-a}."""
    return DifferenceOperator({-a: shift(f, D.var, -a) for a, f in D.terms.items()}, D.var)


def diffop_star(D):
    """(f T_a)^* = (T_{-a} bar f) T_{-a}."""
    return DifferenceOperator({-a: shift(bar(f), D.var, -a) for a, f in D.terms.items()}, D.var)


def diffop_difference(D1, D2):
    """Coefficient Scalars of D1 - D2 (all must vanish for equality)."""
    out = []
    for b in set(D1.terms) | set(D2.terms):
        out.append(D1.terms.get(b, ZERO) - D2.terms.get(b, ZERO))
    return out


# ---------------------------------------------------------------------------
# conversion to sympy, for display

def to_sympy(s):
    """s as a sympy rational function of q and the symbols q^v (and v for
    additive variables)."""
    import sympy

    qs_ = sympy.Symbol("q")
    usym = lambda v: sympy.Symbol("q^" + var_display(v))
    xsym = lambda v: sympy.Symbol(var_display(v))
    memo = {}

    def conv(n):
        got = memo.get(n)
        if got is not None:
            return got
        kind = n.kind
        if kind == "c":
            out = sympy.Rational(int(n.args.numerator), int(n.args.denominator))
        elif kind == "q":
            out = qs_
        elif kind == "u":
            out = usym(n.args)
        elif kind == "x":
            out = xsym(n.args)
        elif kind == "f":
            name, forms = n.args
            vals = [qs_ ** c * sympy.Mul(*[usym(y) ** e for y, e in items]) for c, items in forms]
            out = FUNCS[name](qs_, *vals)
        elif kind == "s":
            inner, mapping = n.args
            rep = {}
            for v, (c, items) in mapping:
                rep[usym(v)] = qs_ ** c * sympy.Mul(*[usym(y) ** e for y, e in items])
                rep[xsym(v)] = c + sympy.Add(*[e * xsym(y) for y, e in items])
            out = conv(inner).xreplace(rep)
        elif kind == "^":
            out = conv(n.args[0]) ** n.args[1]
        elif kind == "+":
            out = sympy.Add(*[conv(c) for c in n.args])
        else:
            out = sympy.Mul(*[conv(c) for c in n.args])
        memo[n] = out
        return out

    return sympy.factor(sympy.cancel(conv(_lift(s))))


def pretty(s):
    """A simplified string form of s."""
    return str(to_sympy(s)).replace("**", "^")
