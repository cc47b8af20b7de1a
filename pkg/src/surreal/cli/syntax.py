"""Expression syntax: tokenizer, recursive-descent parser and printer.

    expr   := sum
    sum    := prod (("+" | "-") prod)*
    prod   := unary ("*" unary)*
    unary  := "-" unary | atom
    atom   := INT ["/" INT] | ORDINAL | SIGNS | bracket | NAME ["(" args ")"] | "(" expr ")"
    bracket:= "{" [items] "|" [items] "}"

An ordinal literal starts with ``w`` and extends greedily while the text
still reads as an ordinal, so ``w^2*3+1`` is one literal; write spaces
(``w + 1``) to get field arithmetic instead.  Sign strings are quoted:
``'+^w -^3 +'``.  ``_`` stands for an absent bound.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .. import ordinal as O
from ..surreal_core import Surreal, format_signs, parse_signs


class ParseError(ValueError):
    def __init__(self, msg, pos):
        super().__init__(f"{msg} at column {pos + 1}")
        self.pos = pos


# ---------------------------------------------------------------- AST

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Ord:
    value: O.Ordinal


@dataclass(frozen=True)
class Signs:
    value: Surreal


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class Blank:
    pass


@dataclass(frozen=True)
class Call:
    name: str
    args: Tuple


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Negative:
    operand: object


@dataclass(frozen=True)
class Bracket:
    left: Tuple
    right: Tuple


# ---------------------------------------------------------------- tokens

PUNCT = set("+-*/(),{}|")
ORD_CHARS = set("w0123456789^*+()")


def _ordinal_span(text, i):
    """Longest text from ``i`` that reads as an ordinal literal."""
    best = None
    depth = 0
    j = i
    while j < len(text) and text[j] in ORD_CHARS:
        depth += {"(": 1, ")": -1}.get(text[j], 0)
        if depth < 0:
            break
        j += 1
        if depth == 0:
            try:
                best = (j, O.parse_ordinal(text[i:j]))
            except ValueError:
                pass
    return best


def tokenize(text):
    out = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(("int", int(text[i:j]), i))
            i = j
        elif c in "'\"":
            j = text.find(c, i + 1)
            if j < 0:
                raise ParseError("unterminated sign string", i)
            try:
                out.append(("signs", parse_signs(text[i + 1:j]), i))
            except ValueError as e:
                raise ParseError(f"bad sign string: {e}", i) from None
            i = j + 1
        elif c.isalpha() or c == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] in "_?"):
                j += 1
            word = text[i:j]
            if word == "w":
                j, value = _ordinal_span(text, i)
                out.append(("ord", value, i))
            elif word == "_":
                out.append(("blank", None, i))
            else:
                out.append(("name", word, i))
            i = j
        elif c in PUNCT:
            out.append((c, c, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    out.append(("end", None, len(text)))
    return out


# ---------------------------------------------------------------- parser

class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            raise ParseError(f"expected {want}", tok[2])
        self.i += 1
        return tok

    def expr(self):
        node = self.prod()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            node = BinOp(op, node, self.prod())
        return node

    def prod(self):
        node = self.unary()
        while self.peek() == "*":
            self.take()
            node = BinOp("*", node, self.unary())
        return node

    def unary(self):
        if self.peek() == "-":
            self.take()
            return Negative(self.unary())
        return self.atom()

    def atom(self):
        kind, value, pos = self.take()
        if kind == "int":
            if self.peek() == "/":
                self.take()
                den = self.take("int")[1]
                if den == 0:
                    raise ParseError("zero denominator", pos)
                return Num(Fraction(value, den))
            return Num(Fraction(value))
        if kind == "ord":
            return Ord(value)
        if kind == "signs":
            return Signs(value)
        if kind == "blank":
            return Blank()
        if kind == "name":
            if self.peek() != "(":
                return Name(value)
            self.take()
            args = [] if self.peek() == ")" else self.items(")")
            self.take(")")
            return Call(value, tuple(args))
        if kind == "(":
            node = self.expr()
            self.take(")")
            return node
        if kind == "{":
            left = [] if self.peek() == "|" else self.items("|")
            self.take("|")
            right = [] if self.peek() == "}" else self.items("}")
            self.take("}")
            return Bracket(tuple(left), tuple(right))
        raise ParseError("expected a term", pos)

    def items(self, stop):
        out = [self.expr()]
        while self.peek() == ",":
            self.take()
            out.append(self.expr())
        return out


def parse(text):
    p = _Parser(text)
    node = p.expr()
    p.take("end")
    return node


# ---------------------------------------------------------------- printer

def unparse(node):
    """Text that parses back to ``node``."""
    if isinstance(node, Num):
        v = node.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(node, Ord):
        return O.format_ordinal(node.value)
    if isinstance(node, Signs):
        return f"'{format_signs(node.value)}'"
    if isinstance(node, Name):
        return node.name
    if isinstance(node, Blank):
        return "_"
    if isinstance(node, Call):
        return f"{node.name}(" + ", ".join(unparse(a) for a in node.args) + ")"
    if isinstance(node, Negative):
        return "-" + _wrap(node.operand, atomic=True)
    if isinstance(node, BinOp):
        if node.op == "*":
            return _wrap(node.left, sums=False) + " * " + _wrap(node.right, sums=False, right=True)
        return unparse(node.left) + f" {node.op} " + _wrap(node.right, right=True)
    if isinstance(node, Bracket):
        def side(items):
            return ", ".join(unparse(a) for a in items)
        return "{" + side(node.left) + " | " + side(node.right) + "}"
    raise TypeError(f"not an expression node: {node!r}")


def _wrap(node, sums=True, right=False, atomic=False):
    text = unparse(node)
    needs = isinstance(node, BinOp) and (atomic or right or (not sums and node.op in "+-"))
    return f"({text})" if needs else text
