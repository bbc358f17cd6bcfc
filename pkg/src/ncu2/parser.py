"""Recursive-descent parser for algebra expressions.

Grammar (whitespace insignificant, '*' mandatory, no juxtaposition):

    expr    := ['-'] term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := primary ('^' integer)?
    primary := symbol | number | '(' expr ')' | 'inv' '(' expr ')'
    symbol  := t | x | y | z | rho | hbar | i | g
    number  := digits ('/' digits)?

Exponents are nonnegative (negative powers are spelled with inv).  The
leading minus is a convenience so that every printed canonical form parses
back.  Ast nodes are plain tuples:

    ("num", GaussRat) ("sym", name) ("neg", a) ("add", a, b) ("sub", a, b)
    ("mul", a, b) ("pow", a, int) ("inv", a)

with the written multiplication order preserved exactly.
"""

from __future__ import annotations

from .errors import ParseError
from .scalars import GaussRat

__all__ = ["parse", "parse_gauss_rat", "SYMBOLS"]

SYMBOLS = ("t", "x", "y", "z", "rho", "hbar", "i", "g")

_PUNCT = {"+", "-", "*", "^", "(", ")"}


def _tokenize(src):
    toks = []
    k = 0
    n = len(src)
    while k < n:
        ch = src[k]
        if ch.isspace():
            k += 1
            continue
        if ch in _PUNCT:
            toks.append((ch, ch, k))
            k += 1
            continue
        if ch.isdigit():
            start = k
            while k < n and src[k].isdigit():
                k += 1
            num = src[start:k]
            den = None
            if k < n and src[k] == "/":
                k2 = k + 1
                if k2 < n and src[k2].isdigit():
                    k = k2
                    while k < n and src[k].isdigit():
                        k += 1
                    den = src[k2:k]
            toks.append(("num", (num, den), start))
            continue
        if ch.isalpha() or ch == "_":
            start = k
            while k < n and (src[k].isalnum() or src[k] == "_"):
                k += 1
            toks.append(("name", src[start:k], start))
            continue
        raise ParseError(f"unexpected character {ch!r}", k,
                         ("symbol", "number", "operator"))
    toks.append(("eof", None, n))
    return toks


class _Parser:
    def __init__(self, src):
        self.src = src
        self.toks = _tokenize(src)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def advance(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind):
        t = self.peek()
        if t[0] != kind:
            raise ParseError(f"got {t[0]!r}", t[2], (kind,))
        return self.advance()

    def parse_expr(self):
        negate = False
        if self.peek()[0] == "-":
            self.advance()
            negate = True
        node = self.parse_term()
        if negate:
            node = ("neg", node)
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.parse_term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def parse_term(self):
        node = self.parse_factor()
        while self.peek()[0] == "*":
            self.advance()
            node = ("mul", node, self.parse_factor())
        return node

    def parse_factor(self):
        node = self.parse_primary()
        if self.peek()[0] == "^":
            self.advance()
            t = self.peek()
            if t[0] != "num" or t[1][1] is not None:
                raise ParseError("exponent must be a nonnegative integer "
                                 "(negative powers are written with inv)",
                                 t[2], ("integer",))
            self.advance()
            node = ("pow", node, int(t[1][0]))
        return node

    def parse_primary(self):
        t = self.peek()
        if t[0] == "num":
            self.advance()
            num, den = t[1]
            if den is not None:
                return ("num", GaussRat(f"{num}/{den}"))
            return ("num", GaussRat(int(num)))
        if t[0] == "(":
            self.advance()
            node = self.parse_expr()
            self.expect(")")
            return node
        if t[0] == "name":
            name = t[1]
            if name == "inv":
                self.advance()
                self.expect("(")
                node = self.parse_expr()
                self.expect(")")
                return ("inv", node)
            if name in SYMBOLS:
                self.advance()
                return ("sym", name)
            raise ParseError(f"unknown symbol {name!r}", t[2],
                             SYMBOLS + ("inv",))
        raise ParseError(f"got {t[0]!r}", t[2],
                         ("symbol", "number", "(", "inv("))


def parse(src):
    """Parse a source string to an Ast; raises ParseError with offsets."""
    p = _Parser(src)
    node = p.parse_expr()
    t = p.peek()
    if t[0] != "eof":
        raise ParseError(f"trailing input starting with {t[0]!r}", t[2],
                         ("end of input",))
    return node


def parse_gauss_rat(src):
    """Parse Gaussian-rational literals of the forms p, p/q, i, ip, ip/q,
    with an optional leading minus (used by the --hbar flag)."""
    s = src.strip()
    neg = s.startswith("-")
    if neg:
        s = s[1:]
    imag = s.startswith("i")
    if imag:
        s = s[1:]
    if not s:
        val = GaussRat(1)
    else:
        parts = s.split("/")
        if len(parts) == 1 and parts[0].isdigit():
            val = GaussRat(int(parts[0]))
        elif (len(parts) == 2 and parts[0].isdigit() and parts[1].isdigit()
              and int(parts[1]) != 0):
            val = GaussRat(f"{parts[0]}/{parts[1]}")
        else:
            raise ParseError(f"bad rational literal {src!r}", 0,
                             ("p", "p/q", "ip/q"))
    if imag:
        val = val * GaussRat(0, 1)
    if neg:
        val = -val
    return val
