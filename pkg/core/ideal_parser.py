"""
Ideal Parser - read ideal files into IdealPresentation
Grammar:
    vars: v1, v2, ..., vn
    gens: p1; p2
          p3
Polynomials use integer or p/q coefficients, + - * ^ ( ), explicit * between factors.
Comments start with '#'.
"""
import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from core.errors import (
    IdealSyntaxError,
    NegativeExponentError,
    UnknownVariableError,
    ZeroGeneratorError,
)
from core.ideal import IdealPresentation
from core.polynomial import Polynomial

logger = logging.getLogger(__name__)

IDENTIFIER = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*$")
TOKEN = re.compile(
    r"\s*(?:(?P<number>[0-9]+(?:/[0-9]+)?)|(?P<name>[a-zA-Z][a-zA-Z0-9_]*)|(?P<op>[-+*^()]))"
)


class _Token:
    __slots__ = ("kind", "text", "column")

    def __init__(self, kind: str, text: str, column: int):
        self.kind = kind
        self.text = text
        self.column = column


class _ExpressionParser:
    """Recursive descent over one generator's token stream."""

    def __init__(self, text: str, line: int, column: int, variables: Dict[str, int], n: int):
        self.line = line
        self.n = n
        self.variables = variables
        self.tokens = self._tokenize(text, column)
        self.position = 0

    def _tokenize(self, text: str, offset: int) -> List[_Token]:
        tokens = []
        index = 0
        stripped_end = len(text.rstrip())
        while index < stripped_end:
            match = TOKEN.match(text, index)
            if not match or match.end() == index:
                bad = len(text) - len(text[index:].lstrip())
                raise IdealSyntaxError(
                    f"unexpected character {text[bad]!r}", self.line, offset + bad + 1
                )
            kind = match.lastgroup
            start = match.start(kind)
            tokens.append(_Token(kind, match.group(kind), offset + start + 1))
            index = match.end()
        return tokens

    def _peek(self) -> Optional[_Token]:
        if self.position < len(self.tokens):
            return self.tokens[self.position]
        return None

    def _next(self) -> _Token:
        token = self._peek()
        if token is None:
            raise IdealSyntaxError("unexpected end of polynomial", self.line)
        self.position += 1
        return token

    def _fail(self, message: str, token: Optional[_Token]):
        column = token.column if token is not None else None
        raise IdealSyntaxError(message, self.line, column)

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise IdealSyntaxError("empty generator", self.line)
        result = self._expression()
        token = self._peek()
        if token is not None:
            if token.kind in ("number", "name", "op") and token.text not in ")":
                self._fail(f"unexpected {token.text!r} (use '*' between factors)", token)
            self._fail(f"unbalanced {token.text!r}", token)
        return result

    def _expression(self) -> Polynomial:
        token = self._peek()
        negate = False
        if token is not None and token.kind == "op" and token.text in "+-":
            negate = token.text == "-"
            self._next()
        result = self._term()
        if negate:
            result = -result
        while True:
            token = self._peek()
            if token is None or token.kind != "op" or token.text not in "+-":
                return result
            self._next()
            if token.text == "+":
                result = result + self._term()
            else:
                result = result - self._term()

    def _term(self) -> Polynomial:
        result = self._factor()
        while True:
            token = self._peek()
            if token is None or token.kind != "op" or token.text != "*":
                return result
            self._next()
            result = result * self._factor()

    def _factor(self) -> Polynomial:
        base = self._atom()
        token = self._peek()
        if token is None or token.kind != "op" or token.text != "^":
            return base
        self._next()
        exponent = self._next()
        if exponent.kind == "op" and exponent.text == "-":
            raise NegativeExponentError("negative exponent", self.line, exponent.column)
        if exponent.kind != "number" or "/" in exponent.text:
            self._fail("exponent must be a non-negative integer", exponent)
        return base ** int(exponent.text)

    def _atom(self) -> Polynomial:
        token = self._next()
        if token.kind == "number":
            try:
                value = Fraction(token.text)
            except ZeroDivisionError:
                raise IdealSyntaxError("zero denominator", self.line, token.column)
            return Polynomial.constant(self.n, value)
        if token.kind == "name":
            if token.text not in self.variables:
                raise UnknownVariableError(
                    f"unknown variable {token.text!r}", self.line, token.column
                )
            return Polynomial.variable(self.n, self.variables[token.text])
        if token.text == "(":
            inner = self._expression()
            closing = self._peek()
            if closing is None or closing.text != ")":
                self._fail("missing ')'", closing)
            self._next()
            return inner
        self._fail(f"unexpected {token.text!r}", token)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def parse_ideal(text: str) -> IdealPresentation:
    """
    Parse ideal file text.

    Args:
        text: file contents following the vars:/gens: grammar

    Returns:
        IdealPresentation: expanded generators, variables in declared order
    """
    variables: Optional[Dict[str, int]] = None
    names: Tuple[str, ...] = ()
    pending: List[Tuple[str, int, int]] = []
    in_gens = False

    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        if stripped.startswith("vars:"):
            if variables is not None:
                raise IdealSyntaxError("duplicate 'vars:' line", number, indent + 1)
            body = stripped[len("vars:"):]
            parts = [p.strip() for p in body.split(",")]
            if not parts or any(not IDENTIFIER.match(p) for p in parts):
                raise IdealSyntaxError("malformed variable list", number, indent + 6)
            if len(set(parts)) != len(parts):
                raise IdealSyntaxError("repeated variable name", number, indent + 6)
            names = tuple(parts)
            variables = {name: i for i, name in enumerate(names)}
            continue
        if stripped.startswith("gens:"):
            if variables is None:
                raise IdealSyntaxError("'gens:' before 'vars:'", number, indent + 1)
            in_gens = True
            line = " " * (indent + len("gens:")) + stripped[len("gens:"):]
        elif not in_gens:
            raise IdealSyntaxError("expected 'vars:' or 'gens:'", number, indent + 1)
        column = 0
        for chunk in line.split(";"):
            if chunk.strip():
                pending.append((chunk, number, column))
            column += len(chunk) + 1

    if variables is None:
        raise IdealSyntaxError("missing 'vars:' line", 1)
    if not pending:
        raise IdealSyntaxError("no generators given", None)

    n = len(names)
    generators = []
    for chunk, number, column in pending:
        polynomial = _ExpressionParser(chunk, number, column, variables, n).parse()
        if polynomial.is_zero():
            raise ZeroGeneratorError("zero generator", number, column + 1)
        generators.append(polynomial)
    return IdealPresentation(tuple(generators), names)


def load_ideal(path) -> IdealPresentation:
    """Read and parse an ideal file."""
    path = Path(path)
    with open(path, "r", encoding="utf-8") as f:
        ideal = parse_ideal(f.read())
    logger.info("✓ Ideal loaded: %s (%d generators, n=%d)", path.name, len(ideal.generators), ideal.n)
    return ideal
