"""Surface syntax for elements of the free brace.

Grammar (whitespace is insignificant except inside a letter)::

    expr    := signed (("+" | "-") term)*
    signed  := "-" signed | term
    term    := smul ("." smul)*              group product, left-assoc
    smul    := [int] starred                 additive multiple
    starred := factor ("*" factor)*          star, left-assoc
    factor  := atom ["^" ["-"] int]          group power
    atom    := letter | "0" | "(" expr ")" | "-" atom
    letter  := "x" int ("." int)*            no spaces inside a letter

A leading minus at the start of an expression negates the whole first
term, so ``-x1 . x2`` is ``-(x1 . x2)``. A minus in operand position
(``x1 . -x2``) negates a single atom.

Letters with two or three subscripts name basis elements directly:
``x1.2`` is x_12, ``x1.1.2`` is x_112 and ``x1.2.3`` is x_123 (i < j).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from . import core
from .core import BraceError, Element, Index


class ParseError(BraceError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class EvaluationError(BraceError, ValueError):
    pass


@dataclass(frozen=True)
class Var:
    i: int


@dataclass(frozen=True)
class Letter:
    """A non-generator basis letter, subscripts as written."""

    subs: tuple[int, ...]


@dataclass(frozen=True)
class IntLit:
    n: int


@dataclass(frozen=True)
class Add:
    left: "Ast"
    right: "Ast"


@dataclass(frozen=True)
class Sub:
    left: "Ast"
    right: "Ast"


@dataclass(frozen=True)
class Neg:
    operand: "Ast"


@dataclass(frozen=True)
class SMul:
    n: int
    operand: "Ast"


@dataclass(frozen=True)
class Mul:
    left: "Ast"
    right: "Ast"


@dataclass(frozen=True)
class Star:
    left: "Ast"
    right: "Ast"


@dataclass(frozen=True)
class Pow:
    base: "Ast"
    n: int


@dataclass(frozen=True)
class Inv:
    operand: "Ast"


Ast = Union[Var, Letter, IntLit, Add, Sub, Neg, SMul, Mul, Star, Pow, Inv]

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<letter>x\d+(?:\.\d+)*)
  | (?P<int>\d+)
  | (?P<op>[-+.*^()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def tokenize(src: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            toks.append(_Tok(kind, m.group(), pos))
        pos = m.end()
    toks.append(_Tok("end", "", len(src)))
    return toks


class _Parser:
    def __init__(self, src: str):
        self.toks = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def at(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def advance(self) -> _Tok:
        t = self.tok
        self.i += 1
        return t

    def expect(self, text: str) -> None:
        if not self.at(text):
            raise ParseError(f"expected {text!r}, found {self.tok.text or 'end of input'!r}", self.tok.pos)
        self.advance()

    def parse(self) -> Ast:
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def expr(self) -> Ast:
        node = self.signed()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def signed(self) -> Ast:
        if self.at("-"):
            self.advance()
            return Neg(self.signed())
        return self.term()

    def term(self) -> Ast:
        node = self.smul()
        while self.at("."):
            self.advance()
            node = Mul(node, self.smul())
        return node

    def _starts_operand(self) -> bool:
        t = self.tok
        return t.kind in ("letter", "int") or self.at("(")

    def smul(self) -> Ast:
        if self.tok.kind == "int":
            lit = self.advance()
            if self._starts_operand():
                return SMul(int(lit.text), self.starred())
            if int(lit.text) != 0:
                raise ParseError(f"integer {lit.text} is not an element (only 0 is)", lit.pos)
            return self._finish_starred(self._finish_factor(IntLit(0)))
        return self.starred()

    def starred(self) -> Ast:
        return self._finish_starred(self.factor())

    def _finish_starred(self, node: Ast) -> Ast:
        while self.at("*"):
            self.advance()
            node = Star(node, self.factor())
        return node

    def factor(self) -> Ast:
        return self._finish_factor(self.atom())

    def _finish_factor(self, node: Ast) -> Ast:
        if self.at("^"):
            self.advance()
            sign = 1
            if self.at("-"):
                self.advance()
                sign = -1
            if self.tok.kind != "int":
                raise ParseError("exponent must be an integer", self.tok.pos)
            node = Pow(node, sign * int(self.advance().text))
        return node

    def atom(self) -> Ast:
        t = self.tok
        if t.kind == "letter":
            self.advance()
            return _letter(t)
        if t.kind == "int":
            if int(t.text) != 0:
                raise ParseError(f"integer {t.text} is not an element (only 0 is)", t.pos)
            self.advance()
            return IntLit(0)
        if self.at("("):
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if self.at("-"):
            self.advance()
            return Neg(self.atom())
        raise ParseError(f"expected an operand, found {t.text or 'end of input'!r}", t.pos)


def _letter(t: _Tok) -> Ast:
    subs = tuple(int(s) for s in t.text[1:].split("."))
    if len(subs) == 1:
        return Var(subs[0])
    if len(subs) > 3:
        raise ParseError(f"letter {t.text} has more than three subscripts", t.pos)
    if len(subs) == 3 and not (subs[0] == subs[1] or subs[0] < subs[1]):
        raise ParseError(f"letter {t.text} needs i = j or i < j", t.pos)
    return Letter(subs)


def parse(src: str) -> Ast:
    return _Parser(src).parse()


def letter_index(subs: tuple[int, ...]) -> Index:
    if len(subs) == 1:
        return Index.gen(subs[0])
    if len(subs) == 2:
        return Index.pair(*subs)
    i, j, k = subs
    if i == j:
        return Index.triple_rep(i, k)
    return Index.triple(i, j, k)


def evaluate(ast: Ast, r: int) -> Element:
    """Evaluate an Ast in D of rank r."""
    core.check_rank(r)
    return _eval(ast, r)


def _eval(node: Ast, r: int) -> Element:
    if isinstance(node, (Var, Letter)):
        subs = (node.i,) if isinstance(node, Var) else node.subs
        idx = letter_index(subs)
        if not idx.is_valid(r):
            raise EvaluationError(f"variable {idx.label()} out of range for rank {r}")
        return core.basis(r, idx)
    if isinstance(node, IntLit):
        if node.n != 0:
            raise EvaluationError(f"integer {node.n} is not an element")
        return core.zero(r)
    if isinstance(node, Add):
        return core.add(_eval(node.left, r), _eval(node.right, r))
    if isinstance(node, Sub):
        return core.sub(_eval(node.left, r), _eval(node.right, r))
    if isinstance(node, Neg):
        return core.neg(_eval(node.operand, r))
    if isinstance(node, SMul):
        return core.smul(node.n, _eval(node.operand, r))
    if isinstance(node, Mul):
        return core.mul(_eval(node.left, r), _eval(node.right, r))
    if isinstance(node, Star):
        return core.star(_eval(node.left, r), _eval(node.right, r))
    if isinstance(node, Pow):
        return core.power(_eval(node.base, r), node.n)
    if isinstance(node, Inv):
        return core.inv(_eval(node.operand, r))
    raise TypeError(f"not an Ast node: {node!r}")


def parse_element(src: str, r: int) -> Element:
    return evaluate(parse(src), r)


def format_terms(terms: list[tuple[str, int]]) -> str:
    """Join (label, coefficient) pairs as ``2 x1 - x1.1``; empty gives ``0``."""
    out = []
    for label, c in terms:
        mag = abs(c)
        body = label if mag == 1 else f"{mag} {label}"
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(out) if out else "0"


def format_canonical(x: Element) -> str:
    """Canonical text of x, terms in index order."""
    return format_terms([(idx.label(), c) for idx, c in x.items()])
