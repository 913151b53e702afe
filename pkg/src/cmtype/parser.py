"""Text front-end for polynomial expressions.

Grammar (whitespace insignificant)::

    expr     := ('-')? term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' natural)?
    base     := variable | rational | '(' expr ')'
    rational := integer ('/' positive-integer)?

Variables match [a-zA-Z][a-zA-Z0-9_]*.  '/' is only legal inside a
rational literal; anything else involving division is rejected.  The
leading unary minus is a small extension so that matrix entries such as
"-y" round-trip through the matrix text format.
"""

from __future__ import annotations

import re

from .errors import DivisionInTextError, ParseError, UnknownVariableError
from .fields import FieldSpec
from .series import TruncatedSeries

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-zA-Z][a-zA-Z0-9_]*)|([()^*/+-]))")

VARIABLE_PATTERN = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")


def tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            rest = text[pos:].strip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r} at position {pos}")
        if m.group(1) is not None:
            tokens.append(("num", m.group(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2)))
        else:
            tokens.append(("op", m.group(3)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, variables, field: FieldSpec, precision: int):
        self.tokens = tokens
        self.i = 0
        self.variables = tuple(variables)
        self.field = field
        self.precision = precision

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val!r}")

    def parse_expr(self) -> TruncatedSeries:
        negate = False
        if self.peek() == ("op", "-"):
            self.next()
            negate = True
        result = self.parse_term()
        if negate:
            result = -result
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                term = self.parse_term()
                result = result + (-term if val == "-" else term)
            elif kind == "op" and val == "/":
                raise DivisionInTextError("'/' is only allowed inside a rational literal")
            else:
                return result

    def parse_term(self) -> TruncatedSeries:
        result = self.parse_factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.next()
                result = result * self.parse_factor()
            elif kind == "op" and val == "/":
                raise DivisionInTextError("'/' is only allowed inside a rational literal")
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                raise ParseError(f"missing operator before {val!r}")
            else:
                return result

    def parse_factor(self) -> TruncatedSeries:
        base = self.parse_base()
        if self.peek() == ("op", "^"):
            self.next()
            kind, val = self.next()
            if kind != "num":
                raise ParseError(f"exponent must be a natural number, found {val!r}")
            return base ** int(val)
        return base

    def parse_base(self) -> TruncatedSeries:
        kind, val = self.next()
        if kind == "num":
            num = int(val)
            den = 1
            if self.peek() == ("op", "/"):
                save = self.i
                self.next()
                k2, v2 = self.next()
                if k2 != "num":
                    # not a rational literal after all: division error
                    raise DivisionInTextError("'/' is only allowed inside a rational literal")
                den = int(v2)
                if den == 0:
                    raise ParseError("zero denominator in rational literal")
                del save
            try:
                c = self.field.from_fraction(num, den)
            except ZeroDivisionError as exc:
                raise ParseError(str(exc)) from exc
            return TruncatedSeries.constant(c, self.variables, self.field, self.precision)
        if kind == "name":
            if val not in self.variables:
                raise UnknownVariableError(f"unknown variable {val!r}")
            return TruncatedSeries.variable(val, self.variables, self.field, self.precision)
        if kind == "op" and val == "(":
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected token {val!r}")


def parse_series(text: str, variables, field: FieldSpec, precision: int) -> TruncatedSeries:
    """Parse a polynomial expression into an exact TruncatedSeries."""
    if precision < 1:
        raise ValueError("precision must be >= 1")
    tokens = tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    parser = _Parser(tokens, variables, field, precision)
    result = parser.parse_expr()
    if parser.i != len(tokens):
        kind, val = parser.peek()
        if kind == "op" and val == "/":
            raise DivisionInTextError("'/' is only allowed inside a rational literal")
        raise ParseError(f"trailing input at token {val!r}")
    return result


def infer_variables(text: str) -> list[str]:
    """Variables of an expression, ordered by first appearance."""
    seen = []
    for m in VARIABLE_PATTERN.finditer(text):
        name = m.group(0)
        if name not in seen:
            seen.append(name)
    return seen


def parse_matrix(text: str, variables, field: FieldSpec, precision: int):
    """Matrix text format: rows separated by ';', entries by ','."""
    rows = []
    for row_text in text.split(";"):
        entries = [parse_series(e, variables, field, precision)
                   for e in row_text.split(",")]
        rows.append(entries)
    if len({len(r) for r in rows}) > 1:
        raise ParseError("ragged matrix text")
    return rows


def matrix_to_text(rows) -> str:
    return "; ".join(", ".join(str(e).replace(" ", "") for e in row) for row in rows)
