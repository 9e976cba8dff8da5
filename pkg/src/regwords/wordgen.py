"""Random word generation from a regexp.

Every choice the generator makes goes through a seedable
:class:`RandomSource`, so a (regexp, seed, bound) triple always yields the
same word.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

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

DEFAULT_MAX_STAR_REPS = 20


class RandomSource:
    """Uniform integer draws from a private, seedable generator.

    A source is owned by one generation at a time; give each thread its own.
    """

    def __init__(self, seed=None):
        self.seed = seed
        self._rng = random.Random(seed)

    def next_below(self, k: int) -> int:
        if k <= 0:
            raise ValueError(f"next_below needs a positive bound, got {k}")
        return self._rng.randrange(k)


@dataclass
class GenConfig:
    max_star_reps: int = DEFAULT_MAX_STAR_REPS
    rng: RandomSource = field(default_factory=RandomSource)

    def __post_init__(self):
        if not isinstance(self.max_star_reps, int) or self.max_star_reps < 0:
            raise ValueError(f"max_star_reps must be a natural number, got {self.max_star_reps!r}")


def union_alternatives(r: Regexp) -> list:
    """Flatten every union reachable from `r` through union fields, left to right."""
    if not is_union(r):
        raise TypeError(f"expected a union regexp, got {r!r}")
    out = []
    stack = [r]
    while stack:
        node = stack.pop()
        if is_union(node):
            stack.append(union_right(node))
            stack.append(union_left(node))
        else:
            out.append(node)
    return out


def pick_regexp(r: Regexp, rng: RandomSource) -> Regexp:
    """Choose one alternative of a union chain, uniformly."""
    alts = union_alternatives(r)
    return alts[rng.next_below(len(alts))]


def pick_reps(n: int, rng: RandomSource) -> int:
    return rng.next_below(n + 1)


def convert_singleton(r: Regexp) -> Word:
    if not is_singleton(r):
        raise TypeError(f"expected a singleton regexp, got {r!r}")
    return (singleton_symbol(r),)


def gen_word(r: Regexp, cfg: GenConfig) -> Word:
    """Generate a word of L(r).

    Each visit to a star draws its own repetition count in
    [0, cfg.max_star_reps]; empty body words are dropped before joining.
    """
    if is_empty(r):
        return EMPTY_WORD
    if is_singleton(r):
        return convert_singleton(r)
    if is_star(r):
        reps = pick_reps(cfg.max_star_reps, cfg.rng)
        body = star_body(r)
        words = [gen_word(body, cfg) for _ in range(reps)]
        return tuple(sym for w in words if w for sym in w)
    if is_union(r):
        return gen_word(pick_regexp(r, cfg.rng), cfg)
    w1 = gen_word(concat_left(r), cfg)
    w2 = gen_word(concat_right(r), cfg)
    return w1 + w2


def gen_word_default(r: Regexp, seed=None) -> Word:
    return gen_word(r, GenConfig(DEFAULT_MAX_STAR_REPS, RandomSource(seed)))
