"""Parser for group-algebra expressions such as ``g - 1`` or ``g1 + 2*g2^2``.

Grammar::

    expr   := [sign] term (sign term)*
    term   := factor ('*' factor)*
    factor := INT | 't' ['^' INT] | '(' field literal ')' | gen ['^' INT]
    gen    := 'g' | 'g' INT

``t`` is the generator of the scalar field, so ``(t+1)*g`` is a valid
coefficient in F_{p^m}. Exponents are reduced mod p.
"""

import re
from typing import List, Optional, Tuple, TYPE_CHECKING

import galois

from ..scalars.field import FieldType, field_literal, scalar
from .errors import ParseError

if TYPE_CHECKING:
    from ..group_algebra.element import GroupAlgebra, GroupAlgebraElement

_TOKEN = re.compile(r"\s*(?:(\d+)|(g\d*)|(t)|([-+*^()]))")


def _tokenize(expr: str) -> List[Tuple[str, str, int]]:
    tokens = []
    position = 0
    stripped = expr.rstrip()
    while position < len(stripped):
        match = _TOKEN.match(stripped, position)
        if not match:
            raise ParseError(f"unexpected character {stripped[position]!r}", position)
        start = match.start(match.lastindex or 0)
        if match.group(1):
            tokens.append(("int", match.group(1), start))
        elif match.group(2):
            tokens.append(("gen", match.group(2), start))
        elif match.group(3):
            tokens.append(("t", "t", start))
        else:
            tokens.append(("op", match.group(4), start))
        position = match.end()
    return tokens


class _Parser:
    def __init__(self, expr: str, algebra: "GroupAlgebra"):
        self.expr = expr
        self.algebra = algebra
        self.tokens = _tokenize(expr)
        self.pos = 0

    def peek(self) -> Optional[Tuple[str, str, int]]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> Tuple[str, str, int]:
        token = self.peek()
        if token is None:
            raise ParseError("unexpected end of expression", len(self.expr))
        self.pos += 1
        return token

    def parse(self) -> galois.FieldArray:
        if not self.tokens:
            raise ParseError("empty expression", 0)
        total = self.algebra.zero()
        sign = 1
        token = self.peek()
        if token and token[1] in "+-" and token[0] == "op":
            sign = -1 if token[1] == "-" else 1
            self.pos += 1
        total = total + self.term() * scalar(self.algebra.F, sign)
        while self.peek() is not None:
            kind, text, position = self.take()
            if kind != "op" or text not in "+-":
                raise ParseError(f"expected '+' or '-', found {text!r}", position)
            sign = -1 if text == "-" else 1
            total = total + self.term() * scalar(self.algebra.F, sign)
        return total

    def term(self) -> galois.FieldArray:
        value = self.factor()
        while self.peek() is not None and self.peek()[1] == "*":  # type: ignore[index]
            self.pos += 1
            value = self.algebra.mul(value, self.factor())
        return value

    def exponent(self) -> int:
        token = self.peek()
        if token is None or token[1] != "^":
            return 1
        self.pos += 1
        kind, text, position = self.take()
        if kind != "int":
            raise ParseError(f"exponent must be an integer, found {text!r}", position)
        return int(text)

    def factor(self) -> galois.FieldArray:
        kind, text, position = self.take()
        F = self.algebra.F
        if kind == "int":
            return self.algebra.constant(scalar(F, int(text)))
        if kind == "t":
            n = self.exponent()
            return self.algebra.constant(field_literal(F, "t") ** n)
        if kind == "gen":
            index = 1 if text == "g" else int(text[1:])
            if text == "g" and self.algebra.r != 1:
                raise ParseError("bare 'g' is ambiguous when r > 1; use g1..gr", position)
            if not 1 <= index <= self.algebra.r:
                raise ParseError(f"unknown generator {text!r} (r = {self.algebra.r})", position)
            exps = [0] * self.algebra.r
            exps[index - 1] = self.exponent() % self.algebra.p
            return self.algebra.group_element(exps)
        if text == "(":
            depth, start = 1, self.pos
            while depth:
                k, t_text, _ = self.take()
                depth += {"(": 1, ")": -1}.get(t_text, 0)
            inner_tokens = self.tokens[start : self.pos - 1]
            if not inner_tokens:
                raise ParseError("empty parentheses", position)
            literal = self.expr[inner_tokens[0][2] : self.tokens[self.pos - 1][2]]
            return self.algebra.constant(field_literal(F, literal))
        raise ParseError(f"unexpected token {text!r}", position)


def parse_lambda(expr: str, algebra: "GroupAlgebra") -> "GroupAlgebraElement":
    """Parse an expression over g1..gr into an element of kE.

    Args:
        expr: Expression string, e.g. ``"g - 1"`` or ``"g1 + 2*g2^2"``
        algebra: Target group algebra

    Returns:
        GroupAlgebraElement

    Raises:
        ParseError: With the offending position
    """
    from ..group_algebra.element import GroupAlgebraElement

    return GroupAlgebraElement(algebra, _Parser(expr, algebra).parse())


def parse_scalar(text: str, F: FieldType) -> galois.FieldArray:
    """Parse a field literal such as ``2`` or ``t+1``, re-raised as a ParseError."""
    try:
        return field_literal(F, text)
    except Exception as e:
        raise ParseError(f"invalid field value {text!r}: {e}")
