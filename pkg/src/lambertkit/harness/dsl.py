"""Expression language: tokenizer, parser, pretty-printer and evaluator.

Grammar::

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := '-' unary | power
    power := atom ('^' unary)?
    atom  := NUMBER | NAME | NAME '(' [arg (',' arg)*] ')' | '(' expr ')'
    arg   := NAME '=' expr | expr
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from ..arith import ArithmeticFunction
from ..fps import DomainError, LogLinear, TruncatedSeries, normalize
from . import registry
from .values import SCALARS, EvalError, LogQSeries, Word, as_int, type_name


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


# -- AST -------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction
    pos: tuple = field(default=(1, 1), compare=False, repr=False)


@dataclass(frozen=True)
class Name:
    id: str
    pos: tuple = field(default=(1, 1), compare=False, repr=False)


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple = ()
    kwargs: tuple = ()  # ((name, node), ...)
    pos: tuple = field(default=(1, 1), compare=False, repr=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"
    pos: tuple = field(default=(1, 1), compare=False, repr=False)


@dataclass(frozen=True)
class Neg:
    operand: "Node"
    pos: tuple = field(default=(1, 1), compare=False, repr=False)


Node = Union[Num, Name, Call, BinOp, Neg]


# -- tokenizer -------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<num>\d+(?:\.\d+)?(?:[A-Za-z_.][\w.]*)?)
  | (?P<name>[A-Za-z_]\w*)
  | (?P<op>[-+*/^(),=])
""", re.VERBOSE)

_NUMBER = re.compile(r"^\d+(?:\.\d+)?$")


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    out = []
    i, line, col = 0, 1, 1
    while i < len(text):
        m = _TOKEN.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", line, col)
        kind, s = m.lastgroup, m.group()
        if kind == "num" and not _NUMBER.match(s):
            raise ParseError(f"malformed literal {s!r}", line, col)
        if kind != "ws":
            out.append(Token(kind, s, line, col))
        for ch in s:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        i = m.end()
    out.append(Token("end", "", line, col))
    return out


# -- parser ----------------------------------------------------------------

class _Parser:
    def __init__(self, text: str, check: bool):
        self.toks = tokenize(text)
        self.i = 0
        self.check = check

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Optional[Token] = None):
        t = tok or self.tok
        raise ParseError(msg, t.line, t.col)

    def accept(self, text: str) -> Optional[Token]:
        if self.tok.kind == "op" and self.tok.text == text:
            t = self.tok
            self.i += 1
            return t
        return None

    def expect(self, text: str) -> Token:
        t = self.accept(text)
        if t is None:
            found = self.tok.text or "end of input"
            self.error(f"expected {text!r}, found {found!r}")
        return t

    def parse(self) -> Node:
        if self.tok.kind == "end":
            self.error("empty expression")
        node = self.expr()
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self) -> Node:
        node = self.term()
        while True:
            t = self.accept("+") or self.accept("-")
            if t is None:
                return node
            node = BinOp(t.text, node, self.term(), (t.line, t.col))

    def term(self) -> Node:
        node = self.unary()
        while True:
            t = self.accept("*") or self.accept("/")
            if t is None:
                return node
            node = BinOp(t.text, node, self.unary(), (t.line, t.col))

    def unary(self) -> Node:
        t = self.accept("-")
        if t is not None:
            return Neg(self.unary(), (t.line, t.col))
        return self.power()

    def power(self) -> Node:
        node = self.atom()
        t = self.accept("^")
        if t is not None:
            node = BinOp("^", node, self.unary(), (t.line, t.col))
        return node

    def atom(self) -> Node:
        t = self.tok
        pos = (t.line, t.col)
        if t.kind == "num":
            self.i += 1
            return Num(Fraction(t.text), pos)
        if t.kind == "name":
            self.i += 1
            if self.accept("("):
                return self.call(t)
            if self.check and not registry.is_known_name(t.text):
                hint = " (builder needs parentheses)" if t.text in registry.builders() else ""
                self.error(f"unknown name {t.text!r}{hint}", t)
            return Name(t.text, pos)
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        self.error(f"unexpected {t.text!r}" if t.text else "unexpected end of input")

    def call(self, name_tok: Token) -> Node:
        args, kwargs = [], []
        if not self.accept(")"):
            while True:
                t = self.tok
                nxt = self.toks[min(self.i + 1, len(self.toks) - 1)]
                if t.kind == "name" and nxt.kind == "op" and nxt.text == "=":
                    self.i += 2
                    kwargs.append((t.text, self.expr()))
                else:
                    if kwargs:
                        self.error("positional argument after keyword argument")
                    args.append(self.expr())
                if self.accept(")"):
                    break
                self.expect(",")
        if self.check:
            b = registry.builders().get(name_tok.text)
            if b is None:
                self.error(f"unknown builder {name_tok.text!r}", name_tok)
            msg = b.arity_error(len(args), tuple(k for k, _ in kwargs))
            if msg:
                self.error(msg, name_tok)
        return Call(name_tok.text, tuple(args), tuple(kwargs), (name_tok.line, name_tok.col))


def parse(text: str, check: bool = True) -> Node:
    """Parse ``text``; with ``check`` unknown names and bad arities are syntax errors."""
    return _Parser(text, check).parse()


# -- pretty-printer --------------------------------------------------------

def _num(v: Fraction) -> str:
    if v.denominator == 1:
        return str(v.numerator)
    d, twos, fives = v.denominator, 0, 0
    while d % 2 == 0:
        d, twos = d // 2, twos + 1
    while d % 5 == 0:
        d, fives = d // 5, fives + 1
    if d == 1:
        digits = max(twos, fives)
        whole, frac = divmod(v.numerator * 10**digits // v.denominator, 10**digits)
        return f"{whole}.{frac:0{digits}d}"
    return f"({v.numerator}/{v.denominator})"


def pretty(node: Node) -> str:
    """Fully parenthesized source text; ``parse(pretty(t)) == t``."""
    if isinstance(node, Num):
        return _num(node.value)
    if isinstance(node, Name):
        return node.id
    if isinstance(node, Call):
        parts = [pretty(a) for a in node.args] + [f"{k}={pretty(v)}" for k, v in node.kwargs]
        return f"{node.func}({', '.join(parts)})"
    if isinstance(node, Neg):
        return f"-{pretty(node.operand)}"
    if isinstance(node, BinOp):
        left = pretty(node.left)
        if node.op == "^" and isinstance(node.left, Neg):
            left = f"({left})"
        return f"({left} {node.op} {pretty(node.right)})"
    raise TypeError(f"not an expression node: {node!r}")


# -- evaluator -------------------------------------------------------------

def _scalar_op(op: str, a, b):
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        if not b:
            raise DomainError("division by zero")
        return a / b
    if isinstance(a, LogLinear):
        raise EvalError("cannot raise a logarithm to a power")
    return Fraction(a) ** as_int(b, "exponent")


def _binop(op: str, a, b, order: int):
    if op == "^":
        k = as_int(b, "exponent")
        if isinstance(a, SCALARS):
            return _scalar_op(op, a, k)
        if isinstance(a, (TruncatedSeries, ArithmeticFunction)):
            return a**k
        raise EvalError(f"cannot raise {type_name(a)} to a power")
    for v in (a, b):
        if isinstance(v, Word):
            raise EvalError(f"option {v} used as a value")
    if isinstance(a, SCALARS) and isinstance(b, SCALARS):
        return normalize(_scalar_op(op, a, b))
    fa, fb = isinstance(a, ArithmeticFunction), isinstance(b, ArithmeticFunction)
    if fa or fb:
        if not (fa or isinstance(a, SCALARS)) or not (fb or isinstance(b, SCALARS)):
            raise EvalError(f"cannot combine {type_name(a)} and {type_name(b)}")
    if isinstance(a, SCALARS) and isinstance(b, TruncatedSeries):
        a = TruncatedSeries.constant(a, b.order)
    try:
        return _scalar_op(op, a, b)
    except TypeError:
        raise EvalError(f"cannot combine {type_name(a)} and {type_name(b)} with {op!r}") from None


def evaluate_value(node: Node, order: int):
    """Evaluate to whatever value the node denotes (series, function, scalar, ...)."""
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Name):
        try:
            return registry.resolve_name(node.id, order)
        except KeyError:
            raise EvalError(f"unknown name {node.id!r}") from None
    if isinstance(node, Neg):
        v = evaluate_value(node.operand, order)
        if isinstance(v, Word):
            raise EvalError(f"option {v} used as a value")
        return -v
    if isinstance(node, BinOp):
        return _binop(node.op, evaluate_value(node.left, order), evaluate_value(node.right, order), order)
    if isinstance(node, Call):
        b = registry.builders().get(node.func)
        if b is None:
            raise EvalError(f"unknown builder {node.func!r}")
        msg = b.arity_error(len(node.args), tuple(k for k, _ in node.kwargs))
        if msg:
            raise EvalError(msg)
        args = [evaluate_value(a, order) for a in node.args]
        kwargs = {k: evaluate_value(v, order) for k, v in node.kwargs}
        return b(args, kwargs, order)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(expr, N: int) -> TruncatedSeries:
    """Evaluate ``expr`` (text or AST) to an exact series of order ``N``."""
    node = parse(expr) if isinstance(expr, str) else expr
    v = evaluate_value(node, N)
    if isinstance(v, LogQSeries):
        v = v.collapse()
        if isinstance(v, LogQSeries):
            raise DomainError("log(q) does not cancel")
    if isinstance(v, SCALARS):
        return TruncatedSeries.constant(v, N)
    if not isinstance(v, TruncatedSeries):
        raise EvalError(f"expression denotes a {type_name(v)}, not a series")
    if v.order > N:
        v = v.truncate(N)
    return v
