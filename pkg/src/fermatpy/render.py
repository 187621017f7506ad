# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

"""
Text rendering and parsing of elements of F_p[ε0, ε1]/(ε0^p - 1, ε1^p - 1) in the
variables x = y0 = ε0 - 1 and y = y1 = ε1 - 1.
"""

import re
from typing import Iterator, List, Optional, Tuple

import numpy as np

from .errors import DimensionMismatchError
from .group_ring import Ring1Elt
from .scalars import prime_field

STYLES = ("factored", "table")


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


def _term(c: int, body: str) -> str:
    if body == "":
        return str(c)
    return body if c == 1 else f"{c}{body}"


def _grid(u: Ring1Elt) -> np.ndarray:
    if u.ring().is_lift():
        raise DimensionMismatchError("only elements with mod-p coefficients can be rendered")
    return u.descend().to_y().to_numpy()


def to_xy_string(u: Ring1Elt, style: str = "factored") -> str:
    """
    Render u as a polynomial in x, y with coefficients in [0, p).

    ``"table"`` lists every monomial by decreasing x-degree then decreasing y-degree.
    ``"factored"`` orders monomials by total degree and merges pairs c x^i y^j + c x^j y^i
    into c x^b y^b (x^k + y^k).
    """
    if style not in STYLES:
        raise ValueError(f"style must be one of {STYLES}, found {style!r}")
    grid = _grid(u)
    p = grid.shape[0]

    if style == "table":
        terms = [
            _term(int(grid[i, j]), _power("x", i) + _power("y", j))
            for i in range(p - 1, -1, -1)
            for j in range(p - 1, -1, -1)
            if grid[i, j]
        ]
        return " + ".join(terms) if terms else "0"

    order = sorted(((i, j) for i in range(p) for j in range(p)), key=lambda e: (e[0] + e[1], -e[0]))
    seen = set()
    terms = []
    for i, j in order:
        c = int(grid[i, j])
        if c == 0 or (i, j) in seen:
            continue
        seen.add((i, j))
        if i != j and int(grid[j, i]) == c:
            seen.add((j, i))
            b, k = min(i, j), abs(i - j)
            exp = "" if k == 1 else f"^{k}"
            terms.append(_term(c, _power("x", b) + _power("y", b) + f"(x{exp}+y{exp})"))
        else:
            terms.append(_term(c, _power("x", i) + _power("y", j)))
    return " + ".join(terms) if terms else "0"


_TOKEN = re.compile(r"\s*(?:(\d+)|([xy])|(\^)|([-+*()]))")


def _tokenize(text: str) -> List[str]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ValueError(f"unexpected character {text[pos:].lstrip()[:1]!r} at position {pos} of {text!r}")
        tokens.append(m.group(m.lastindex or 0))
        pos = m.end()
    return tokens


class _Parser:
    """
    Recursive descent over

        expr = ['-'] term (('+'|'-') term)*; term = factor+; factor = int | var ['^' int] | '(' expr ')'
    """

    def __init__(self, p: int, text: str):
        self.p = p
        self.ring = prime_field(p)
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> Optional[str]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of expression")
        self.pos += 1
        return tok

    def parse(self) -> Ring1Elt:
        value = self.expr()
        if self.peek() is not None:
            raise ValueError(f"unexpected token {self.peek()!r}")
        return value

    def expr(self) -> Ring1Elt:
        sign = 1
        if self.peek() in ("-", "+"):
            sign = -1 if self.take() == "-" else 1
        value = self.term() * sign
        while self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            value = value + self.term() * sign
        return value

    def _starts_factor(self, tok: Optional[str]) -> bool:
        return tok is not None and (tok.isdigit() or tok in ("x", "y", "(", "*"))

    def term(self) -> Ring1Elt:
        value = Ring1Elt.one(self.ring)
        if not self._starts_factor(self.peek()) or self.peek() == "*":
            raise ValueError(f"expected a term, found {self.peek()!r}")
        while self._starts_factor(self.peek()):
            if self.peek() == "*":
                self.take()
            value = value * self.factor()
        return value

    def exponent(self) -> int:
        if self.peek() != "^":
            return 1
        self.take()
        tok = self.take()
        if not tok.isdigit():
            raise ValueError(f"expected an exponent, found {tok!r}")
        return int(tok)

    def factor(self) -> Ring1Elt:
        tok = self.take()
        if tok.isdigit():
            return Ring1Elt.from_scalar(self.ring, int(tok))
        if tok in ("x", "y"):
            k = self.exponent()
            if k >= self.p:
                return Ring1Elt.zero(self.ring)
            exps = (k, 0) if tok == "x" else (0, k)
            return Ring1Elt.from_monomials(self.ring, {exps: 1})
        if tok == "(":
            value = self.expr()
            if self.take() != ")":
                raise ValueError("unbalanced parenthesis")
            return value ** self.exponent()
        raise ValueError(f"unexpected token {tok!r}")


def parse_xy(p: int, text: str) -> Ring1Elt:
    """
    Parse a polynomial in x = y0 and y = y1 into an element of Λ1 over F_p (y-basis).
    Accepts both output styles of :py:func:`to_xy_string` as well as signs and parentheses.
    """
    return _Parser(p, text).parse()


def monomials(u: Ring1Elt) -> Iterator[Tuple[int, int, int]]:
    """Non-zero (i, j, coefficient) of u in the y-basis."""
    grid = _grid(u)
    for i, j in zip(*np.nonzero(grid)):
        yield int(i), int(j), int(grid[i, j])
