"""Recursive-descent parser for the element mini-language of the CLI.

Grammar (whitespace ignored, positions reported on error):

    element := [sign] term { sign term }
    term    := [coeff ['*']] basis
    basis   := 'h' INT | 'e' '(' root ')' | 'e' | 'f' | 'h'
    root    := [sign] rterm { sign rterm }
    rterm   := [INT ['*']] ('alpha' | 'a') INT
    coeff   := atom | '(' scalar ')'
    scalar  := [sign] atom { sign atom }
    atom    := INT ['/' INT] ['*' zpow] | zpow
    zpow    := ('z' | 'zeta' | 'i') ['^' INT]

Bare 'e', 'f', 'h' are rank-one shorthand for e(a1), e(-a1), h1.
"""

from __future__ import annotations

from .chevalley import LieAlgebra, LieVec
from .cyclotomic import Cyc, CyclotomicField
from .errors import ParseError


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> tuple[str, str, int]:
        """(kind, value, position) without consuming; kind in
        {'int', 'name', 'sym', 'end'}."""
        self._skip_ws()
        if self.pos >= len(self.text):
            return ("end", "", self.pos)
        c = self.text[self.pos]
        if c.isdigit():
            j = self.pos
            while j < len(self.text) and self.text[j].isdigit():
                j += 1
            return ("int", self.text[self.pos : j], self.pos)
        if c.isalpha():
            j = self.pos
            while j < len(self.text) and self.text[j].isalpha():
                j += 1
            return ("name", self.text[self.pos : j], self.pos)
        return ("sym", c, self.pos)

    def take(self) -> tuple[str, str, int]:
        kind, value, pos = self.peek()
        self.pos = pos + len(value) if kind != "end" else pos
        return kind, value, pos

    def expect_sym(self, sym: str):
        kind, value, pos = self.take()
        if kind != "sym" or value != sym:
            raise ParseError(f"expected {sym!r}", pos)


def parse_element(text: str, algebra: LieAlgebra) -> LieVec:
    """Parse an element expression in the algebra's coordinates."""
    lex = _Lexer(text)
    total = algebra.zero()
    sign = 1
    kind, value, pos = lex.peek()
    if kind == "sym" and value in "+-":
        lex.take()
        sign = -1 if value == "-" else 1
    while True:
        total = total + _parse_term(lex, algebra).scale(sign)
        kind, value, pos = lex.peek()
        if kind == "end":
            return total
        if kind == "sym" and value in "+-":
            lex.take()
            sign = -1 if value == "-" else 1
            continue
        raise ParseError(f"unexpected {value!r}", pos)


def parse_scalar(text: str, field: CyclotomicField) -> Cyc:
    """Parse a standalone scalar expression (sums allowed without parens)."""
    lex = _Lexer(text)
    value = _parse_scalar_sum(lex, field)
    kind, tok, pos = lex.peek()
    if kind != "end":
        raise ParseError(f"unexpected {tok!r}", pos)
    return value


def _parse_term(lex: _Lexer, algebra: LieAlgebra) -> LieVec:
    field = algebra.field
    kind, value, pos = lex.peek()
    coeff = field.one
    have_coeff = False
    if kind == "int" or (kind == "sym" and value == "(") or (
        kind == "name" and value in ("z", "zeta", "i")
    ):
        coeff = _parse_coeff(lex, field)
        have_coeff = True
        kind, value, pos = lex.peek()
        if kind == "sym" and value == "*":
            lex.take()
            kind, value, pos = lex.peek()
    if kind != "name":
        if have_coeff:
            raise ParseError("coefficient must multiply a basis element", pos)
        raise ParseError("expected a basis element", pos)
    return _parse_basis(lex, algebra).scale(coeff)


def _parse_basis(lex: _Lexer, algebra: LieAlgebra) -> LieVec:
    kind, value, pos = lex.take()
    if value == "h":
        kind2, value2, pos2 = lex.peek()
        if kind2 == "int":
            lex.take()
            i = int(value2)
            if not 1 <= i <= algebra.rank:
                raise ParseError(f"h{i} is out of range", pos2)
            return algebra.h(i - 1)
        if algebra.rank == 1:
            return algebra.h(0)
        raise ParseError("bare 'h' needs rank one", pos)
    if value == "e":
        kind2, value2, pos2 = lex.peek()
        if kind2 == "sym" and value2 == "(":
            lex.take()
            root = _parse_root(lex, algebra)
            lex.expect_sym(")")
            return algebra.e(root)
        if algebra.rank == 1:
            return algebra.e(algebra.roots.simple(0))
        raise ParseError("bare 'e' needs rank one", pos)
    if value == "f":
        if algebra.rank == 1:
            return algebra.e(algebra.roots.negate(algebra.roots.simple(0)))
        raise ParseError("bare 'f' needs rank one", pos)
    raise ParseError(f"unknown basis element {value!r}", pos)


def _parse_root(lex: _Lexer, algebra: LieAlgebra):
    coeffs = [0] * algebra.rank
    sign = 1
    kind, value, pos = lex.peek()
    if kind == "sym" and value in "+-":
        lex.take()
        sign = -1 if value == "-" else 1
    while True:
        mult = 1
        kind, value, pos = lex.peek()
        if kind == "int":
            lex.take()
            mult = int(value)
            kind, value, pos = lex.peek()
            if kind == "sym" and value == "*":
                lex.take()
                kind, value, pos = lex.peek()
        if kind != "name" or value not in ("a", "alpha"):
            raise ParseError("expected a simple root 'a<i>'", pos)
        lex.take()
        kind, value, pos = lex.take()
        if kind != "int":
            raise ParseError("expected a root index", pos)
        i = int(value)
        if not 1 <= i <= algebra.rank:
            raise ParseError(f"root index {i} is out of range", pos)
        coeffs[i - 1] += sign * mult
        kind, value, pos = lex.peek()
        if kind == "sym" and value in "+-":
            lex.take()
            sign = -1 if value == "-" else 1
            continue
        root = tuple(coeffs)
        if not algebra.roots.is_root(root):
            raise ParseError(f"{root} is not a root", pos)
        return root


def _parse_coeff(lex: _Lexer, field: CyclotomicField) -> Cyc:
    kind, value, pos = lex.peek()
    if kind == "sym" and value == "(":
        lex.take()
        out = _parse_scalar_sum(lex, field)
        lex.expect_sym(")")
        return out
    return _parse_scalar_atom(lex, field)


def _parse_scalar_sum(lex: _Lexer, field: CyclotomicField) -> Cyc:
    total = field.zero
    sign = 1
    kind, value, pos = lex.peek()
    if kind == "sym" and value in "+-":
        lex.take()
        sign = -1 if value == "-" else 1
    while True:
        atom = _parse_scalar_atom(lex, field)
        total = total + (atom if sign == 1 else -atom)
        kind, value, pos = lex.peek()
        if kind == "sym" and value in "+-":
            lex.take()
            sign = -1 if value == "-" else 1
            continue
        return total


def _parse_scalar_atom(lex: _Lexer, field: CyclotomicField) -> Cyc:
    kind, value, pos = lex.peek()
    if kind == "int":
        lex.take()
        num = int(value)
        den = 1
        kind, value, pos = lex.peek()
        if kind == "sym" and value == "/":
            lex.take()
            kind, value, pos = lex.take()
            if kind != "int":
                raise ParseError("expected a denominator", pos)
            den = int(value)
            if den == 0:
                raise ParseError("zero denominator", pos)
            kind, value, pos = lex.peek()
        scalar = field.rational(num, den)
        if kind == "sym" and value == "*":
            save = lex.pos
            lex.take()
            kind, value, pos = lex.peek()
            if kind == "name" and value in ("z", "zeta", "i"):
                return scalar * _parse_zpow(lex, field)
            lex.pos = save
        return scalar
    if kind == "name" and value in ("z", "zeta", "i"):
        return _parse_zpow(lex, field)
    raise ParseError("expected a scalar", pos)


def _parse_zpow(lex: _Lexer, field: CyclotomicField) -> Cyc:
    kind, value, pos = lex.take()
    base = field.i if value == "i" else field.zeta(1)
    kind, value, pos = lex.peek()
    if kind == "sym" and value == "^":
        lex.take()
        sign = 1
        kind, value, pos = lex.peek()
        if kind == "sym" and value == "-":
            lex.take()
            sign = -1
        kind, value, pos = lex.take()
        if kind != "int":
            raise ParseError("expected an exponent", pos)
        return base ** (sign * int(value))
    return base
