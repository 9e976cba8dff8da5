"""Deterministic semantics of regexps: bounded enumeration and membership.

The two procedures are deliberately unrelated. Enumeration builds word
sets bottom-up; membership pushes sets of input positions through the tree,
collecting where each sub-expression can stop. Agreement between them is what
the generator gets checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

from .regexp_core import (
    EMPTY_WORD,
    Regexp,
    Word,
    concat_left,
    concat_right,
    is_empty,
    is_singleton,
    is_star,
    is_union,
    singleton_symbol,
    star_body,
    union_left,
    union_right,
)


def shortlex_key(w: Word):
    return (len(w), w)


@dataclass(frozen=True)
class LanguageSample:
    """Words of a language up to `bound` symbols long, in shortlex order."""

    words: Tuple[Word, ...]
    bound: int

    @classmethod
    def from_words(cls, words: Iterable[Word], bound: int) -> "LanguageSample":
        return cls(tuple(sorted(set(words), key=shortlex_key)), bound)

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, w):
        return tuple(w) in set(self.words)


def _enumerate(r: Regexp, n: int) -> frozenset:
    if is_empty(r):
        return frozenset([EMPTY_WORD])
    if is_singleton(r):
        return frozenset([(singleton_symbol(r),)]) if n >= 1 else frozenset()
    if is_star(r):
        steps = [w for w in _enumerate(star_body(r), n) if w]
        result = {EMPTY_WORD}
        frontier = {EMPTY_WORD}
        while frontier:
            grown = {u + v for u in steps for v in frontier if len(u) + len(v) <= n}
            frontier = grown - result
            result |= frontier
        return frozenset(result)
    if is_union(r):
        return _enumerate(union_left(r), n) | _enumerate(union_right(r), n)
    left = _enumerate(concat_left(r), n)
    right = _enumerate(concat_right(r), n)
    return frozenset(u + v for u in left for v in right if len(u) + len(v) <= n)


def enumerate_upto(r: Regexp, max_len: int) -> LanguageSample:
    """Every word of L(r) with at most `max_len` symbols."""
    if max_len < 0:
        raise ValueError(f"max_len must be a natural number, got {max_len}")
    return LanguageSample.from_words(_enumerate(r, max_len), max_len)


def _symbol_class(node: Regexp, cache: dict):
    """Symbols of a union built only from singletons, else None."""
    key = id(node)
    if key not in cache:
        if is_singleton(node):
            cache[key] = frozenset(singleton_symbol(node))
        elif is_union(node):
            left = _symbol_class(union_left(node), cache)
            right = _symbol_class(union_right(node), cache)
            cache[key] = left | right if left is not None and right is not None else None
        else:
            cache[key] = None
    return cache[key]


def member(r: Regexp, w) -> bool:
    """True iff `w` (a word or a plain string) is in L(r)."""
    word = tuple(w)
    n = len(word)
    classes = {}

    def ends(node: Regexp, starts: frozenset) -> frozenset:
        # every j such that word[i:j] is in L(node) for some i in starts
        if not starts:
            return starts
        if is_empty(node):
            return starts
        if is_singleton(node) or is_union(node):
            symbols = _symbol_class(node, classes)
            if symbols is not None:
                return frozenset(i + 1 for i in starts if i < n and word[i] in symbols)
            return ends(union_left(node), starts) | ends(union_right(node), starts)
        if is_star(node):
            # only positions not yet reached are fed back, so nullable bodies terminate
            body = star_body(node)
            reached = set(starts)
            frontier = starts
            while frontier:
                frontier = ends(body, frontier) - reached
                reached |= frontier
            return frozenset(reached)
        return ends(concat_right(node), ends(concat_left(node), starts))

    return n in ends(r, frozenset([0]))


def lang_equal_upto(r1: Regexp, r2: Regexp, max_len: int) -> bool:
    return enumerate_upto(r1, max_len).words == enumerate_upto(r2, max_len).words
