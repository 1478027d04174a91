"""Formula ASTs, the s-expression parser and the printer.

Grammar (one formula per file, ``;`` starts a line comment)::

    formula := (forall v F) | (exists v F) | (and F+) | (or F+) | (not F)
             | (implies F F) | (= t t)
    term    := v | e | 0 | 1 | (* t t) | (inv t) | (+ t t) | (neg t)

``e``/``inv`` belong to the group sort, ``0``/``1``/``+``/``neg`` to the
ring sort; ``*`` is shared.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from ..errors import ParseError

Span = Optional[tuple]


# ------------------------------------------------------------------ terms

@dataclass(frozen=True)
class Var:
    name: str
    span: Span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Const:
    name: str                  # e | 0 | 1
    span: Span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class App:
    op: str                    # * | inv | + | neg
    args: tuple
    span: Span = field(default=None, compare=False, repr=False)


Term = Union[Var, Const, App]


# --------------------------------------------------------------- formulas

@dataclass(frozen=True)
class Eq:
    lhs: Term
    rhs: Term
    span: Span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Quant:
    kind: str                  # forall | exists
    var: str
    body: "Formula"
    span: Span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Conn:
    op: str                    # and | or | not | implies
    args: tuple
    span: Span = field(default=None, compare=False, repr=False)


Formula = Union[Eq, Quant, Conn]

ARITY = {"*": 2, "+": 2, "inv": 1, "neg": 1}
GROUP_OPS, RING_OPS = {"inv"}, {"+", "neg"}
CONSTS = {"e", "0", "1"}
KEYWORDS = {"forall", "exists", "and", "or", "not", "implies", "="} | set(ARITY) | CONSTS
VAR_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")


# ------------------------------------------------------------ constructors

def var(name: str) -> Var:
    return Var(name)


E = Const("e")
ZERO, ONE = Const("0"), Const("1")


def _t(x) -> Term:
    return Var(x) if isinstance(x, str) else x


def mul(*xs) -> Term:
    """Left-nested product of one or more terms."""
    xs = [_t(x) for x in xs]
    out = xs[0]
    for x in xs[1:]:
        out = App("*", (out, x))
    return out


def inv(x) -> Term:
    return App("inv", (_t(x),))


def add(*xs) -> Term:
    xs = [_t(x) for x in xs]
    out = xs[0]
    for x in xs[1:]:
        out = App("+", (out, x))
    return out


def neg(x) -> Term:
    return App("neg", (_t(x),))


def comm(x, y) -> Term:
    """x y x^-1 y^-1."""
    return mul(x, y, inv(x), inv(y))


def conj(x, y) -> Term:
    """x y x^-1."""
    return mul(x, y, inv(x))


def eq(a, b) -> Eq:
    return Eq(_t(a), _t(b))


def neq(a, b) -> Conn:
    return Conn("not", (eq(a, b),))


def and_(*fs) -> Formula:
    fs = [f for f in fs]
    return fs[0] if len(fs) == 1 else Conn("and", tuple(fs))


def or_(*fs) -> Formula:
    return fs[0] if len(fs) == 1 else Conn("or", tuple(fs))


def not_(f) -> Conn:
    return Conn("not", (f,))


def implies(a, b) -> Conn:
    return Conn("implies", (a, b))


def forall(vs, body) -> Formula:
    for v in reversed(_names(vs)):
        body = Quant("forall", v, body)
    return body


def exists(vs, body) -> Formula:
    for v in reversed(_names(vs)):
        body = Quant("exists", v, body)
    return body


def _names(vs) -> list:
    return vs.split() if isinstance(vs, str) else list(vs)


# ------------------------------------------------------------- utilities

def term_vars(t: Term) -> set:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, Const):
        return set()
    out = set()
    for a in t.args:
        out |= term_vars(a)
    return out


def free_vars(f: Formula) -> set:
    if isinstance(f, Eq):
        return term_vars(f.lhs) | term_vars(f.rhs)
    if isinstance(f, Quant):
        return free_vars(f.body) - {f.var}
    out = set()
    for a in f.args:
        out |= free_vars(a)
    return out


def bound_vars(f: Formula) -> set:
    if isinstance(f, Eq):
        return set()
    if isinstance(f, Quant):
        return {f.var} | bound_vars(f.body)
    out = set()
    for a in f.args:
        out |= bound_vars(a)
    return out


def is_closed(f: Formula) -> bool:
    return not free_vars(f)


def _term_sorts(t: Term, acc: set):
    if isinstance(t, Const):
        acc.add("group" if t.name == "e" else "ring")
    elif isinstance(t, App):
        if t.op in GROUP_OPS:
            acc.add("group")
        elif t.op in RING_OPS:
            acc.add("ring")
        for a in t.args:
            _term_sorts(a, acc)


def sorts(f: Formula) -> set:
    acc: set = set()

    def walk(g):
        if isinstance(g, Eq):
            _term_sorts(g.lhs, acc)
            _term_sorts(g.rhs, acc)
        elif isinstance(g, Quant):
            walk(g.body)
        else:
            for a in g.args:
                walk(a)
    walk(f)
    return acc


def sort_of(f: Formula) -> str:
    """group, ring or neutral (only variables and *)."""
    s = sorts(f)
    if len(s) > 1:
        raise ParseError("formula mixes group and ring symbols")
    return s.pop() if s else "neutral"


def subst_term(t: Term, mapping: dict) -> Term:
    if isinstance(t, Var):
        return mapping.get(t.name, t)
    if isinstance(t, Const):
        return t
    return App(t.op, tuple(subst_term(a, mapping) for a in t.args))


def fresh_name(base: str, avoid: set) -> str:
    k = 1
    while f"{base}_{k}" in avoid:
        k += 1
    return f"{base}_{k}"


def substitute(f: Formula, mapping: dict) -> Formula:
    """Capture-avoiding substitution of terms for free variables."""
    if isinstance(f, Eq):
        return Eq(subst_term(f.lhs, mapping), subst_term(f.rhs, mapping))
    if isinstance(f, Conn):
        return Conn(f.op, tuple(substitute(a, mapping) for a in f.args))
    mapping = {k: v for k, v in mapping.items() if k != f.var}
    if not mapping:
        return f
    incoming = set()
    for v in mapping.values():
        incoming |= term_vars(v)
    if f.var in incoming:
        new = fresh_name(f.var, incoming | free_vars(f.body) | set(mapping))
        body = substitute(f.body, {f.var: Var(new)})
        return Quant(f.kind, new, substitute(body, mapping))
    return Quant(f.kind, f.var, substitute(f.body, mapping))


# --------------------------------------------------------------- printing

def term_text(t: Term) -> str:
    if isinstance(t, (Var, Const)):
        return t.name
    return "(" + " ".join([t.op] + [term_text(a) for a in t.args]) + ")"


def to_text(f: Formula) -> str:
    if isinstance(f, Eq):
        return f"(= {term_text(f.lhs)} {term_text(f.rhs)})"
    if isinstance(f, Quant):
        return f"({f.kind} {f.var} {to_text(f.body)})"
    return "(" + " ".join([f.op] + [to_text(a) for a in f.args]) + ")"


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s+|;[^\n]*|\(|\)|[^\s();]+")


def _tokenize(text: str) -> list:
    toks, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        tok = m.group(0)
        if tok[0] not in " \t\r\n;":
            toks.append((tok, m.start(), m.end()))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def error(self, msg, offset):
        line = self.text.count("\n", 0, offset) + 1
        col = offset - (self.text.rfind("\n", 0, offset) + 1) + 1
        raise ParseError(msg, offset, line, col)

    def peek(self):
        if self.i >= len(self.toks):
            self.error("unexpected end of input", len(self.text))
        return self.toks[self.i]

    def next(self):
        t = self.peek()
        self.i += 1
        return t

    def expect_close(self):
        tok, s, _ = self.next()
        if tok != ")":
            self.error(f"expected ')' but found {tok!r}", s)
        return self.toks[self.i - 1][2]

    def varname(self):
        tok, s, _ = self.next()
        if tok in KEYWORDS or not VAR_RE.match(tok):
            self.error(f"bad variable name {tok!r}", s)
        return tok

    def formula(self) -> Formula:
        tok, start, _ = self.next()
        if tok != "(":
            self.error(f"expected '(' to start a formula, found {tok!r}", start)
        head, hs, _ = self.next()
        if head in ("forall", "exists"):
            v = self.varname()
            body = self.formula()
            return Quant(head, v, body, (start, self.expect_close()))
        if head in ("and", "or"):
            args = [self.formula()]
            while self.peek()[0] != ")":
                args.append(self.formula())
            return Conn(head, tuple(args), (start, self.expect_close()))
        if head == "not":
            a = self.formula()
            return Conn("not", (a,), (start, self.expect_close()))
        if head == "implies":
            a = self.formula()
            b = self.formula()
            return Conn("implies", (a, b), (start, self.expect_close()))
        if head == "=":
            a = self.term()
            b = self.term()
            return Eq(a, b, (start, self.expect_close()))
        self.error(f"unknown formula head {head!r}", hs)

    def term(self) -> Term:
        tok, start, end = self.next()
        if tok == ")":
            self.error("expected a term", start)
        if tok != "(":
            if tok in CONSTS:
                return Const(tok, (start, end))
            if tok in KEYWORDS or not VAR_RE.match(tok):
                self.error(f"bad term {tok!r}", start)
            return Var(tok, (start, end))
        op, os_, _ = self.next()
        if op not in ARITY:
            self.error(f"unknown operation {op!r}", os_)
        args = tuple(self.term() for _ in range(ARITY[op]))
        return App(op, args, (start, self.expect_close()))


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    if not p.toks:
        p.error("empty input", 0)
    f = p.formula()
    if p.i != len(p.toks):
        p.error("trailing input after formula", p.toks[p.i][1])
    sort_of(f)
    return f


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    if p.i != len(p.toks):
        p.error("trailing input after term", p.toks[p.i][1])
    return t


def strip_spans(x):
    """Rebuild a node without spans (spans never affect equality anyway)."""
    if isinstance(x, Var):
        return Var(x.name)
    if isinstance(x, Const):
        return Const(x.name)
    if isinstance(x, App):
        return App(x.op, tuple(strip_spans(a) for a in x.args))
    if isinstance(x, Eq):
        return Eq(strip_spans(x.lhs), strip_spans(x.rhs))
    if isinstance(x, Quant):
        return Quant(x.kind, x.var, strip_spans(x.body))
    return Conn(x.op, tuple(strip_spans(a) for a in x.args))


def conjuncts(f: Formula) -> list:
    if isinstance(f, Conn) and f.op == "and":
        out = []
        for a in f.args:
            out.extend(conjuncts(a))
        return out
    return [f]


def iter_nodes(f: Formula) -> Iterable:
    yield f
    if isinstance(f, Quant):
        yield from iter_nodes(f.body)
    elif isinstance(f, Conn):
        for a in f.args:
            yield from iter_nodes(a)
