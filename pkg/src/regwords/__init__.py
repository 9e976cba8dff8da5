"""Regular expressions as word generators, with an enumeration oracle."""

from .lang_oracle import LanguageSample, enumerate_upto, lang_equal_upto, member
from .regexp_core import (
    EMPTY_WORD,
    Concat,
    Empty,
    KleeneStar,
    Regexp,
    RegexpError,
    Singleton,
    Union,
    Word,
    alphabet_of,
    concat_left,
    concat_right,
    is_concat,
    is_empty,
    is_singleton,
    is_star,
    is_union,
    make_concat,
    make_empty,
    make_kleenestar,
    make_singleton,
    make_union,
    singleton_symbol,
    star_body,
    structural_equal,
    union_left,
    union_right,
)
from .syntax import ParseError, parse, parse_ast, render, render_ast
from .wordgen import (
    GenConfig,
    RandomSource,
    convert_singleton,
    gen_word,
    gen_word_default,
    pick_regexp,
    pick_reps,
)

__version__ = "0.1.0"
