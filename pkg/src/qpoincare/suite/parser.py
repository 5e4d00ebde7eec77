"""Recursive-descent parser for operator expressions.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ['^' ['-'] int] ['†']
    atom   := generator | param | rational | 'i' | '(' expr ')' | '[' expr ',' expr ']'

Division is only allowed by a parameter-valued factor.  ``W11``..``W22``,
``O11``..``O22``, ``K1``..``K5``, ``C1`` and ``C2`` expand into base
generators.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from ..ncpoly import ALPHABET, NCPoly, commutator
from ..scalars import I, ONE, param

__all__ = ["ParseError", "parse_expression", "tokenize", "sugar_table"]

DAGGER = "†"

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<name>[^\W\d]\w*)
  | (?P<op>[-+*/^(),\[\]]|†)
""", re.VERBOSE)


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        where = f"\n  {text}\n  {' ' * position}^" if text else ""
        super().__init__(f"{message} at position {position}{where}")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


@lru_cache(maxsize=1)
def sugar_table() -> dict:
    """Derived symbols and their expansions into base generators."""
    from ..presentation import define_casimirs, define_omega_and_K, derived_table

    table = dict(derived_table())
    k = define_omega_and_K()
    for n in range(1, 6):
        table[f"K{n}"] = k[f"K{n}"]
    c = define_casimirs()
    table["C1"] = c["C1"]
    table["C2"] = c["C2a"]
    return table


_PARAM_NAMES = {"q", "s", "hbar", "ħ", "lambda", "lam", "λ", "a", "beta", "β"}


class _Parser:
    def __init__(self, text: str, sugar: bool):
        self.text = text
        self.toks = tokenize(text)
        self.k = 0
        self.sugar = sugar

    def peek(self):
        return self.toks[self.k]

    def take(self, value=None):
        tok = self.toks[self.k]
        if value is not None and tok[1] != value:
            self.fail(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok)
        self.k += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def parse(self) -> NCPoly:
        x = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return x

    def expr(self) -> NCPoly:
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        x = self.term()
        if sign < 0:
            x = -x
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            y = self.term()
            x = x + y if op == "+" else x - y
        return x

    def term(self) -> NCPoly:
        x = self.factor()
        while self.peek()[1] in ("*", "/"):
            op = self.take()
            y = self.factor()
            if op[1] == "*":
                x = x * y
            else:
                if y.degree() > 0 or y.is_zero():
                    self.fail("can only divide by a nonzero parameter expression", op)
                x = x.scale(ONE / y.constant_term())
        return x

    def factor(self) -> NCPoly:
        x = self.atom()
        if self.peek()[1] == "^":
            tok = self.take()
            neg = False
            if self.peek()[1] == "-":
                self.take()
                neg = True
            num = self.peek()
            if num[0] != "num" or "/" in num[1]:
                self.fail("exponent must be an integer")
            self.take()
            n = int(num[1])
            if neg:
                if x.degree() > 0 or x.is_zero():
                    self.fail("negative powers need a nonzero parameter base", tok)
                c = x.constant_term() ** n
                x = NCPoly.const(ONE / c)
            else:
                out = NCPoly.const(1)
                for _ in range(n):
                    out = out * x
                x = out
        if self.peek()[1] == DAGGER:
            self.take()
            x = x.dagger()
        return x

    def atom(self) -> NCPoly:
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            return NCPoly.const(Fraction(val))
        if val == "(":
            self.take()
            x = self.expr()
            self.take(")")
            return x
        if val == "[":
            self.take()
            x = self.expr()
            self.take(",")
            y = self.expr()
            self.take("]")
            return commutator(x, y)
        if kind == "name":
            self.take()
            return self.symbol(val, (kind, val, pos))
        self.fail(f"unexpected {val or 'end of input'!r}")

    def symbol(self, name, tok) -> NCPoly:
        if name == "i":
            return NCPoly.const(I)
        if name in ALPHABET:
            return NCPoly.word((name,))
        if name in _PARAM_NAMES:
            return NCPoly.const(param(name))
        if self.sugar:
            table = sugar_table()
            if name in table:
                return table[name]
        self.fail(f"unknown symbol {name!r}", tok)


def parse_expression(text: str, sugar: bool = True) -> NCPoly:
    """Parse ``text`` into an exact NCPoly; sugar symbols expand unless ``sugar`` is False."""
    return _Parser(text, sugar).parse()
