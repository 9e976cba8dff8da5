"""Regular expression values.

A regexp is one of five immutable node types::

    Empty()              L = {ε}
    Singleton(a)         L = {a}
    Union(r1, r2)        L = L(r1) ∪ L(r2)
    Concat(r1, r2)       L = L(r1)L(r2)
    KleeneStar(r)        L = {ε} ∪ L(r) ∪ L(r)L(r) ∪ ...

Words are tuples of one-character strings. The empty word is the empty
tuple; there is no separate sentinel for it.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Tuple

Word = Tuple[str, ...]
EMPTY_WORD: Word = ()

LOWERCASE = frozenset(string.ascii_lowercase)
UPPERCASE = frozenset(string.ascii_uppercase)
DIGITS = frozenset(string.digits)
SPECIALS = frozenset("$&!*")

SYMBOL_CHARS = LOWERCASE | UPPERCASE | DIGITS | SPECIALS


class RegexpError(TypeError):
    """A regexp constructor was given something it cannot hold."""


def is_symbol(value) -> bool:
    return isinstance(value, str) and len(value) == 1 and value in SYMBOL_CHARS


class Regexp:
    """Base class of the five regexp node types."""

    __slots__ = ()


@dataclass(frozen=True)
class Empty(Regexp):
    pass


@dataclass(frozen=True)
class Singleton(Regexp):
    a: str

    def __post_init__(self):
        if not is_symbol(self.a):
            raise RegexpError(
                f"the input to singleton-regexp, {self.a!r}, must be a one-character "
                "string naming a lowercase letter, uppercase letter, digit, or one of $ & ! *"
            )


def _check_operand(value, position: str, ctor: str) -> None:
    if not isinstance(value, Regexp):
        raise RegexpError(f"{value!r} must be a regexp to be a valid {position}input to {ctor}")


@dataclass(frozen=True)
class Union(Regexp):
    r1: Regexp
    r2: Regexp

    def __post_init__(self):
        _check_operand(self.r1, "first ", "union-regexp")
        _check_operand(self.r2, "second ", "union-regexp")


@dataclass(frozen=True)
class Concat(Regexp):
    r1: Regexp
    r2: Regexp

    def __post_init__(self):
        _check_operand(self.r1, "first ", "concat-regexp")
        _check_operand(self.r2, "second ", "concat-regexp")


@dataclass(frozen=True)
class KleeneStar(Regexp):
    r: Regexp

    def __post_init__(self):
        _check_operand(self.r, "", "kleenestar-regexp")


# Constructors

def make_empty() -> Empty:
    return Empty()


def make_singleton(a: str) -> Singleton:
    return Singleton(a)


def make_union(r1: Regexp, r2: Regexp) -> Union:
    return Union(r1, r2)


def make_concat(r1: Regexp, r2: Regexp) -> Concat:
    return Concat(r1, r2)


def make_kleenestar(r: Regexp) -> KleeneStar:
    return KleeneStar(r)


# Predicates

def is_empty(r) -> bool:
    return isinstance(r, Empty)


def is_singleton(r) -> bool:
    return isinstance(r, Singleton)


def is_union(r) -> bool:
    return isinstance(r, Union)


def is_concat(r) -> bool:
    return isinstance(r, Concat)


def is_star(r) -> bool:
    return isinstance(r, KleeneStar)


# Selectors. Asking the wrong node type for a field is a programming error.

def _expect(r, cls, selector: str):
    if not isinstance(r, cls):
        raise TypeError(f"{selector} expects a {cls.__name__} regexp, got {r!r}")
    return r


def singleton_symbol(r: Singleton) -> str:
    return _expect(r, Singleton, "singleton_symbol").a


def union_left(r: Union) -> Regexp:
    return _expect(r, Union, "union_left").r1


def union_right(r: Union) -> Regexp:
    return _expect(r, Union, "union_right").r2


def concat_left(r: Concat) -> Regexp:
    return _expect(r, Concat, "concat_left").r1


def concat_right(r: Concat) -> Regexp:
    return _expect(r, Concat, "concat_right").r2


def star_body(r: KleeneStar) -> Regexp:
    return _expect(r, KleeneStar, "star_body").r


# Structural utilities

def alphabet_of(r: Regexp) -> frozenset:
    """Symbols occurring in the singleton leaves of `r`."""
    if is_empty(r):
        return frozenset()
    if is_singleton(r):
        return frozenset(singleton_symbol(r))
    if is_star(r):
        return alphabet_of(star_body(r))
    if is_union(r):
        return alphabet_of(union_left(r)) | alphabet_of(union_right(r))
    return alphabet_of(concat_left(r)) | alphabet_of(concat_right(r))


def structural_equal(r1: Regexp, r2: Regexp) -> bool:
    return r1 == r2


def depth(r: Regexp) -> int:
    if is_empty(r) or is_singleton(r):
        return 1
    if is_star(r):
        return 1 + depth(star_body(r))
    if is_union(r):
        return 1 + max(depth(union_left(r)), depth(union_right(r)))
    return 1 + max(depth(concat_left(r)), depth(concat_right(r)))
