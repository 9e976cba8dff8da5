"""Worked example languages: words ending in a, binary numerals, strings
containing "fsm", and a password generator built from a regexp.
"""

from __future__ import annotations

import string

from .regexp_core import (
    LOWERCASE,
    SPECIALS,
    SYMBOL_CHARS,
    UPPERCASE,
    Concat,
    KleeneStar,
    Regexp,
    Singleton,
    Union,
    Word,
)
from .wordgen import GenConfig, RandomSource, gen_word

# L = {w | w ends with an a}
A = Singleton("a")
B = Singleton("b")
AUB = Union(A, B)
AUB_STAR = KleeneStar(AUB)
ENDS_WITH_A = Concat(AUB_STAR, A)

# binary numbers without leading zeroes
ZERO = Singleton("0")
ONE = Singleton("1")
ZERO_OR_ONE_STAR = KleeneStar(Union(ZERO, ONE))
STARTS1 = Concat(ONE, ZERO_OR_ONE_STAR)
BIN_NUMS = Union(ZERO, STARTS1)

BIN_NUMS_DEFAULT_REPS = 10


def create_union_regexp(rs) -> Union:
    """Right-nested union of two or more regexps."""
    rs = list(rs)
    if len(rs) < 2:
        raise ValueError("create-union-regexp: list too short")
    r = Union(rs[-2], rs[-1])
    for x in reversed(rs[:-2]):
        r = Union(x, r)
    return r


# w = x'fsm y' over a small filler alphabet
FSM_SIGMA = ("f", "s", "m", "x", "y")
SIGMA_STAR = KleeneStar(create_union_regexp([Singleton(c) for c in FSM_SIGMA]))
CONTAINS_FSM = Concat(SIGMA_STAR, Concat(Singleton("f"), Concat(Singleton("s"), Concat(Singleton("m"), SIGMA_STAR))))


def is_ends_with_a(w) -> bool:
    w = tuple(w)
    return len(w) >= 1 and w[-1] == "a"


def is_bin_nums(w) -> bool:
    w = tuple(w)
    return (
        len(w) >= 1
        and (w == ("0",) or w[0] == "1")
        and all(bit in ("0", "1") for bit in w)
    )


def generate_bn(seed=None, max_reps: int | None = None) -> Word:
    reps = BIN_NUMS_DEFAULT_REPS if max_reps is None else max_reps
    return gen_word(BIN_NUMS, GenConfig(reps, RandomSource(seed)))


# Passwords: length >= 10 with at least one lowercase, uppercase and special.

LOWERS = tuple(string.ascii_lowercase)
UPPERS = tuple(string.ascii_uppercase)
SPCLS = ("$", "&", "!", "*")

LC = [Singleton(c) for c in LOWERS]
UC = [Singleton(c) for c in UPPERS]
SPC = [Singleton(c) for c in SPCLS]

LOWER = create_union_regexp(LC)
UPPER = create_union_regexp(UC)
SPCHS = create_union_regexp(SPC)
ARBTRY = KleeneStar(Union(LOWER, Union(UPPER, SPCHS)))

MAX_KLEENESTAR_REPS = 5
MIN_PASSWORD_LENGTH = 10
MAX_PASSWORD_ATTEMPTS = 10_000

_CLASS_REGEXPS = {"L": LOWER, "U": UPPER, "S": SPCHS}
ORDERINGS = ("LUS", "LSU", "SLU", "SUL", "USL", "ULS")


class PasswordGenerationError(RuntimeError):
    pass


def ordering_regexp(order: str) -> Regexp:
    """ARBTRY X ARBTRY Y ARBTRY Z ARBTRY for the required classes X, Y, Z."""
    r = ARBTRY
    for cls in reversed(order):
        r = Concat(ARBTRY, Concat(_CLASS_REGEXPS[cls], r))
    return r


def password_regexp() -> Regexp:
    return create_union_regexp([ordering_regexp(o) for o in ORDERINGS])


PASSWD = password_regexp()


def word_to_string(w) -> str:
    return "".join(w)


def string_to_word(s: str) -> Word:
    for i, c in enumerate(s):
        if c not in SYMBOL_CHARS:
            raise ValueError(f"{c!r} at index {i} of {s!r} is not a symbol")
    return tuple(s)


def is_passwd(p: str) -> bool:
    chars = set(p)
    return (
        len(p) >= MIN_PASSWORD_LENGTH
        and bool(chars & LOWERCASE)
        and bool(chars & UPPERCASE)
        and bool(chars & SPECIALS)
    )


def generate_password(seed=None, max_attempts: int = MAX_PASSWORD_ATTEMPTS) -> str:
    """Draw words from PASSWD until one is long enough.

    One random source is shared by all attempts, so a seed fixes the result.
    """
    cfg = GenConfig(MAX_KLEENESTAR_REPS, RandomSource(seed))
    for _ in range(max_attempts):
        candidate = word_to_string(gen_word(PASSWD, cfg))
        if len(candidate) >= MIN_PASSWORD_LENGTH:
            return candidate
    raise PasswordGenerationError(
        f"no password of length >= {MIN_PASSWORD_LENGTH} after {max_attempts} attempts"
    )
