"""
Parser for algebra expressions.

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' integer)?
    atom   := integer | integer '/' integer | 'q' | alpha | beta | gamma | delta
            | 'f' '[' lambda|mu ']' '(' scalar ')' | '(' expr ')'

Inside f[v](...) the scalar grammar additionally allows '/', the exponential
q^v written as q^v or q^(2*v+1), and the functions F(v+k), G(v+k) of one
affine argument in v.
"""

from __future__ import annotations

import re

from .algebra import SL2, AlgElement, LETTER
from .scalars import F, G, ONE, aff, const, q, qpow

TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]+)|(.))")

VARS = {"lambda": "lam", "mu": "mu"}


class ParseError(ValueError):
    def __init__(self, message, column):
        super().__init__(f"column {column}: {message}")
        self.message = message
        self.column = column


class _Tokens:
    def __init__(self, text):
        self.text = text
        self.items = []
        pos = 0
        while pos < len(text):
            m = TOKEN.match(text, pos)
            if m.group(0).strip() == "":
                break
            start = m.start(m.lastindex)
            kind = {1: "num", 2: "id", 3: "op"}[m.lastindex]
            self.items.append((kind, m.group(m.lastindex), start + 1))
            pos = m.end()
        self.i = 0
        self.eof_column = len(text) + 1

    def peek(self):
        return self.items[self.i] if self.i < len(self.items) else ("eof", "", self.eof_column)

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def accept(self, value):
        tok = self.peek()
        if tok[0] != "eof" and tok[1] == value:
            self.i += 1
            return True
        return False

    def expect(self, value):
        tok = self.peek()
        if tok[0] == "eof" or tok[1] != value:
            found = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise ParseError(f"expected {value!r}, found {found}", tok[2])
        self.i += 1
        return tok


class _Parser:
    def __init__(self, text, mode):
        self.t = _Tokens(text)
        self.mode = mode

    def parse(self):
        if self.t.peek()[0] == "eof":
            raise ParseError("empty expression", self.t.peek()[2])
        out = self.expr()
        tok = self.t.peek()
        if tok[0] != "eof":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return out

    # --- algebra level ----------------------------------------------------
    def expr(self):
        out = self.term()
        while True:
            if self.t.accept("+"):
                out = out + self.term()
            elif self.t.accept("-"):
                out = out - self.term()
            else:
                return out

    def term(self):
        out = self.unary()
        while self.t.accept("*"):
            out = out * self.unary()
        return out

    def unary(self):
        if self.t.accept("-"):
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.t.accept("^"):
            n = self.integer()
            if n < 0:
                if set(base.terms) - {""}:
                    raise ParseError("negative power of a non-scalar", self.t.peek()[2])
                return AlgElement.scalar(base.terms.get("", ONE) ** n, self.mode)
            return base ** n
        return base

    def integer(self):
        sign = -1 if self.t.accept("-") else 1
        tok = self.t.next()
        if tok[0] != "num":
            raise ParseError("expected an integer exponent", tok[2])
        return sign * int(tok[1])

    def atom(self):
        kind, val, col = self.t.next()
        if kind == "eof":
            raise ParseError("unexpected end of input", col)
        if kind == "num":
            num = int(val)
            if self.t.peek()[1] == "/" and self.t.i + 1 < len(self.t.items) and self.t.items[self.t.i + 1][0] == "num":
                self.t.next()
                den = int(self.t.next()[1])
                if den == 0:
                    raise ParseError("zero denominator", col)
                return AlgElement.scalar(const(num) / den, self.mode)
            return AlgElement.scalar(const(num), self.mode)
        if kind == "id":
            if val in LETTER:
                return AlgElement.gen(val, self.mode)
            if val == "q":
                return AlgElement.scalar(q, self.mode)
            if val == "f":
                self.t.expect("[")
                vk, vname, vcol = self.t.next()
                if vname not in VARS:
                    raise ParseError("expected lambda or mu", vcol)
                self.t.expect("]")
                self.t.expect("(")
                s = _ScalarParser(self.t, VARS[vname]).sexpr()
                self.t.expect(")")
                return AlgElement.scalar(s, self.mode)
            raise ParseError(f"unknown identifier {val!r}", col)
        if val == "(":
            out = self.expr()
            self.t.expect(")")
            return out
        raise ParseError(f"unexpected {val!r}", col)


class _ScalarParser:
    """Rational expressions in q and q^v for one dynamical variable v."""

    def __init__(self, tokens, var):
        self.t = tokens
        self.var = var
        self.display = "lambda" if var == "lam" else "mu"

    def sexpr(self):
        out = self.sterm()
        while True:
            if self.t.accept("+"):
                out = out + self.sterm()
            elif self.t.accept("-"):
                out = out - self.sterm()
            else:
                return out

    def sterm(self):
        out = self.sunary()
        while True:
            if self.t.accept("*"):
                out = out * self.sunary()
            elif self.t.peek()[1] == "/" and self.t.peek()[0] == "op":
                tok = self.t.next()
                den = self.sunary()
                if den.kind == "c" and den.args == 0:
                    raise ParseError("division by zero", tok[2])
                out = out / den
            else:
                return out

    def sunary(self):
        if self.t.accept("-"):
            return -self.sunary()
        return self.spower()

    def spower(self):
        kind, val, col = self.t.peek()
        if kind == "id" and val == "q":
            self.t.next()
            if self.t.accept("^"):
                tok = self.t.peek()
                if tok[1] == self.display or tok[1] == "(":
                    return qpow(self.affine())
                return q ** self.integer()
            return q
        base = self.satom()
        if self.t.accept("^"):
            return base ** self.integer()
        return base

    def integer(self):
        sign = -1 if self.t.accept("-") else 1
        tok = self.t.next()
        if tok[0] != "num":
            raise ParseError("expected an integer exponent", tok[2])
        return sign * int(tok[1])

    def affine(self):
        """v, or a parenthesised integer affine form in v."""
        if self.t.accept("("):
            out = self.affine_sum()
            self.t.expect(")")
            return out
        self.t.expect(self.display)
        return aff(**{self.var: 1})

    def affine_sum(self):
        c = e = 0
        sign = -1 if self.t.accept("-") else 1
        while True:
            kind, val, col = self.t.next()
            if kind == "num":
                n = int(val)
                if self.t.accept("*"):
                    self.t.expect(self.display)
                    e += sign * n
                else:
                    c += sign * n
            elif val == self.display:
                e += sign
            else:
                raise ParseError(f"expected an affine expression in {self.display}", col)
            if self.t.accept("+"):
                sign = 1
            elif self.t.accept("-"):
                sign = -1
            else:
                return aff(c, **{self.var: e})

    def satom(self):
        kind, val, col = self.t.next()
        if kind == "eof":
            raise ParseError("unexpected end of input", col)
        if kind == "num":
            return const(int(val))
        if kind == "id" and val in ("F", "G"):
            self.t.expect("(")
            arg = self.affine_sum()
            self.t.expect(")")
            return F(arg) if val == "F" else G(arg)
        if val == "(":
            out = self.sexpr()
            self.t.expect(")")
            return out
        raise ParseError(f"unexpected {val!r} in scalar", col)


def parse(text, mode=SL2):
    """Parse and normalize an expression into an AlgElement."""
    return _Parser(text, mode).parse().pruned()
