"""Printable form of regexps, its parser, and a lossless AST text format.

Surface grammar (star > concatenation > union, chains nest to the right)::

    regexp  := concat (" U " concat)*
    concat  := starred starred*
    starred := atom "*"*
    atom    := "ε" | "%e" | symbol | "\\" metachar | "(" regexp ")"

AST format::

    (empty) | (sing "a") | (union X Y) | (concat X Y) | (star X)
"""

from __future__ import annotations

import re

from .regexp_core import (
    SYMBOL_CHARS,
    Concat,
    Empty,
    KleeneStar,
    Regexp,
    Singleton,
    Union,
    concat_left,
    concat_right,
    is_concat,
    is_empty,
    is_singleton,
    is_star,
    is_union,
    singleton_symbol,
    star_body,
    union_left,
    union_right,
)

EPSILON = "ε"
EPSILON_ALIAS = "%e"
UNION_SEP = " U "
METACHARS = frozenset(["(", ")", "*", "U", EPSILON, "\\", " "])


class ParseError(ValueError):
    """Malformed surface or AST text; `offset` is the 0-based character index."""

    def __init__(self, message: str, offset: int, text: str = ""):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset
        self.text = text


def _render_symbol(a: str) -> str:
    return "\\" + a if a in METACHARS else a


def render(r: Regexp) -> str:
    if is_empty(r):
        return EPSILON
    if is_singleton(r):
        return _render_symbol(singleton_symbol(r))
    if is_star(r):
        body = star_body(r)
        inner = render(body)
        # a concatenation under a star would otherwise read as a star on its last factor
        if is_concat(body):
            inner = "(" + inner + ")"
        return inner + "*"
    if is_union(r):
        return "(" + render(union_left(r)) + UNION_SEP + render(union_right(r)) + ")"
    return render(concat_left(r)) + render(concat_right(r))


class _SurfaceParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, offset: int | None = None):
        raise ParseError(message, self.pos if offset is None else offset, self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_union_sep(self) -> bool:
        return self.text.startswith(UNION_SEP, self.pos)

    def parse(self) -> Regexp:
        if not self.text:
            self.error("empty input")
        r = self.union()
        if self.pos < len(self.text):
            if self.peek() == ")":
                self.error("unbalanced parenthesis: unexpected ')'")
            self.error(f"stray metacharacter {self.peek()!r}")
        return r

    def union(self) -> Regexp:
        parts = [self.concat()]
        while self.at_union_sep():
            self.pos += len(UNION_SEP)
            parts.append(self.concat())
        return _fold_right(Union, parts)

    def concat(self) -> Regexp:
        parts = []
        while self.starts_atom():
            parts.append(self.starred())
        if not parts:
            c = self.peek()
            if c == "":
                self.error("expected an expression, found end of input")
            if c == "*":
                self.error("dangling '*' with nothing to repeat")
            if c == ")":
                self.error("expected an expression before ')'")
            if self.at_union_sep():
                self.error("expected an expression before ' U '")
            self.error(f"stray metacharacter {c!r}")
        return _fold_right(Concat, parts)

    def starts_atom(self) -> bool:
        c = self.peek()
        if c == "" or c in ")*U ":
            return False
        return True

    def starred(self) -> Regexp:
        r = self.atom()
        while self.peek() == "*":
            self.pos += 1
            r = KleeneStar(r)
        return r

    def atom(self) -> Regexp:
        start = self.pos
        c = self.peek()
        if c == EPSILON:
            self.pos += 1
            return Empty()
        if self.text.startswith(EPSILON_ALIAS, self.pos):
            self.pos += len(EPSILON_ALIAS)
            return Empty()
        if c == "(":
            self.pos += 1
            r = self.union()
            if self.peek() != ")":
                self.error("unbalanced parenthesis: '(' is never closed", start)
            self.pos += 1
            return r
        if c == "\\":
            self.pos += 1
            e = self.peek()
            if e == "":
                self.error("bad escape: '\\' at end of input", start)
            if e not in METACHARS or e not in SYMBOL_CHARS:
                self.error(f"bad escape: '\\{e}' does not name a symbol", start)
            self.pos += 1
            return Singleton(e)
        if c in SYMBOL_CHARS:
            self.pos += 1
            return Singleton(c)
        self.error(f"{c!r} is not a symbol")


def _fold_right(node, parts):
    r = parts[-1]
    for p in reversed(parts[:-1]):
        r = node(p, r)
    return r


def parse(text: str) -> Regexp:
    """Parse the printable form produced by :func:`render`."""
    return _SurfaceParser(text).parse()


# AST format

def render_ast(r: Regexp) -> str:
    if is_empty(r):
        return "(empty)"
    if is_singleton(r):
        a = singleton_symbol(r).replace("\\", "\\\\").replace('"', '\\"')
        return f'(sing "{a}")'
    if is_star(r):
        return f"(star {render_ast(star_body(r))})"
    if is_union(r):
        return f"(union {render_ast(union_left(r))} {render_ast(union_right(r))})"
    return f"(concat {render_ast(concat_left(r))} {render_ast(concat_right(r))})"


_AST_TOKEN = re.compile(r'\s*(?:(\()|(\))|([a-z]+)|"((?:[^"\\]|\\.)*)")')
_ARITY = {"empty": 0, "star": 1, "union": 2, "concat": 2}


def _ast_tokens(text: str):
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            return
        m = _AST_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected {text[pos]!r}", pos, text)
        start = m.start(m.lastindex)
        if m.group(1):
            yield "(", None, start
        elif m.group(2):
            yield ")", None, start
        elif m.group(3):
            yield "word", m.group(3), start
        else:
            yield "str", re.sub(r"\\(.)", r"\1", m.group(4)), start - 1
        pos = m.end()


def parse_ast(text: str) -> Regexp:
    """Inverse of :func:`render_ast`; whitespace between tokens is ignored."""
    tokens = list(_ast_tokens(text))
    i = 0

    def expect(kind):
        nonlocal i
        if i >= len(tokens):
            raise ParseError(f"expected {kind!r}, found end of input", len(text), text)
        tok = tokens[i]
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}", tok[2], text)
        i += 1
        return tok

    def node() -> Regexp:
        open_tok = expect("(")
        _, head, where = expect("word")
        if head == "sing":
            _, sym, sym_at = expect("str")
            try:
                r = Singleton(sym)
            except TypeError:
                raise ParseError(f"{sym!r} is not a symbol", sym_at, text) from None
        elif head in _ARITY:
            kids = [node() for _ in range(_ARITY[head])]
            r = {"empty": Empty, "star": KleeneStar, "union": Union, "concat": Concat}[head](*kids)
        else:
            raise ParseError(f"unknown node {head!r}", where, text)
        if i >= len(tokens):
            raise ParseError("unbalanced parenthesis: '(' is never closed", open_tok[2], text)
        expect(")")
        return r

    if not tokens:
        raise ParseError("empty input", 0, text)
    r = node()
    if i != len(tokens):
        raise ParseError("trailing input", tokens[i][2], text)
    return r
