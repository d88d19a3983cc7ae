"""
Recursive descent parser and evaluator for Clifford element expressions.

Grammar (whitespace insensitive):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | INT ['/' INT] | 'i' | 'e' INT | '(' expr ')'

'i' is the imaginary unit and is only accepted under a complex signature.
Single-term sums and single-factor products collapse to their only child,
so format_expr(parse_expr(t)) reparses to an equal tree.
"""

import re
from dataclasses import dataclass
from typing import Tuple

from algebra.errors import GeneratorOutOfRange, ParseError
from algebra.scalars import Field, Scalar
from algebra.superalgebra import from_signature


@dataclass(frozen=True)
class Sum:
    # (sign, term) pairs; the first sign is always "+"
    terms: Tuple[Tuple[str, object], ...]


@dataclass(frozen=True)
class Product:
    factors: Tuple[object, ...]


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class ScalarLit:
    numerator: int
    denominator: int = 1


@dataclass(frozen=True)
class GeneratorRef:
    index: int


@dataclass(frozen=True)
class Imag:
    pass


@dataclass(frozen=True)
class Paren:
    inner: object


ExprAst = (Sum, Product, Neg, ScalarLit, GeneratorRef, Imag, Paren)

_TOKEN = re.compile(r"\s*(?:(?P<gen>e\d+)|(?P<int>\d+)|(?P<imag>i)|(?P<op>[-+*/()])|(?P<bad>\S))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text):
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            break
        kind = match.lastgroup
        if kind == "bad":
            raise ParseError(f"unexpected character '{match.group(kind)}'", match.start(kind))
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class Parser:
    """One-token-lookahead parser over the token list of a single expression."""

    def __init__(self, text, sig):
        self.tokens = tokenize(text)
        self.index = 0
        self.sig = sig

    @property
    def current(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.current
        self.index += 1
        return token

    def accept(self, op):
        if self.current.kind == "op" and self.current.text == op:
            return self.advance()
        return None

    def expect(self, op):
        token = self.accept(op)
        if token is None:
            found = self.current.text or "end of input"
            raise ParseError(f"expected '{op}', found '{found}'", self.current.position)
        return token

    def parse(self):
        if self.current.kind == "end":
            raise ParseError("empty expression", 0)
        tree = self.expr()
        if self.current.kind != "end":
            raise ParseError(f"unexpected '{self.current.text}'", self.current.position)
        return tree

    def expr(self):
        terms = [("+", self.term())]
        while self.current.kind == "op" and self.current.text in "+-":
            sign = self.advance().text
            terms.append((sign, self.term()))
        return terms[0][1] if len(terms) == 1 else Sum(tuple(terms))

    def term(self):
        factors = [self.factor()]
        while self.accept("*"):
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self):
        token = self.current
        if self.accept("-"):
            return Neg(self.factor())
        if self.accept("("):
            inner = self.expr()
            self.expect(")")
            return Paren(inner)
        if token.kind == "int":
            self.advance()
            denominator = 1
            if self.accept("/"):
                if self.current.kind != "int":
                    raise ParseError("expected an integer denominator", self.current.position)
                denominator = int(self.advance().text)
                if denominator == 0:
                    raise ParseError("zero denominator", token.position)
            return ScalarLit(int(token.text), denominator)
        if token.kind == "imag":
            if self.sig.field is not Field.COMPLEX:
                raise ParseError("the imaginary unit needs a complex signature", token.position)
            self.advance()
            return Imag()
        if token.kind == "gen":
            index = int(token.text[1:])
            if not 1 <= index <= self.sig.n:
                raise GeneratorOutOfRange(
                    f"generator e{index} outside e1..e{self.sig.n} of {self.sig.label()}", token.position
                )
            self.advance()
            return GeneratorRef(index)
        found = token.text or "end of input"
        raise ParseError(f"expected a scalar, generator or '(', found '{found}'", token.position)


def parse_expr(text, sig):
    """
    Parse an element expression under a signature.

    Raises:
        ParseError: syntax error, with the offending position
        GeneratorOutOfRange: e<k> with k outside 1..n
    """
    return Parser(text, sig).parse()


def format_expr(ast):
    if isinstance(ast, Sum):
        text = format_expr(ast.terms[0][1])
        for sign, term in ast.terms[1:]:
            text += f" {sign} {format_expr(term)}"
        return text
    if isinstance(ast, Product):
        return "*".join(format_expr(f) for f in ast.factors)
    if isinstance(ast, Neg):
        return f"-{format_expr(ast.operand)}"
    if isinstance(ast, ScalarLit):
        return str(ast.numerator) if ast.denominator == 1 else f"{ast.numerator}/{ast.denominator}"
    if isinstance(ast, GeneratorRef):
        return f"e{ast.index}"
    if isinstance(ast, Imag):
        return "i"
    if isinstance(ast, Paren):
        return f"({format_expr(ast.inner)})"
    raise TypeError(f"not an expression node: {ast!r}")


def eval_expr(ast, sig):
    """Evaluate a parsed expression to a canonical Element of the algebra of sig."""
    A = from_signature(sig)
    domain = A.field.domain

    def walk(node):
        if isinstance(node, Sum):
            total = A.zero()
            for sign, term in node.terms:
                value = walk(term)
                total = total - value if sign == "-" else total + value
            return total
        if isinstance(node, Product):
            value = A.unit
            for factor in node.factors:
                value = A.mul(value, walk(factor))
            return value
        if isinstance(node, Neg):
            return -walk(node.operand)
        if isinstance(node, ScalarLit):
            return A.unit.scaled(domain.convert(node.numerator) / domain.convert(node.denominator))
        if isinstance(node, GeneratorRef):
            return A.basis(1 << (node.index - 1))
        if isinstance(node, Imag):
            return A.unit.scaled(Scalar.imaginary_unit())
        if isinstance(node, Paren):
            return walk(node.inner)
        raise TypeError(f"not an expression node: {node!r}")

    return walk(ast)


def evaluate(text, sig):
    return eval_expr(parse_expr(text, sig), sig)
