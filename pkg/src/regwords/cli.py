"""Command-line interface.

Exit codes: 0 success or member, 1 non-member, 2 parse/usage error,
3 enumeration bound refused, 4 generation failure.
"""

from __future__ import annotations

import argparse
import os
import sys

from .lang_oracle import enumerate_upto, member
from .showcase import MAX_PASSWORD_ATTEMPTS, PasswordGenerationError, generate_password, word_to_string
from .syntax import EPSILON, ParseError, parse, parse_ast, render, render_ast
from .wordgen import DEFAULT_MAX_STAR_REPS, GenConfig, RandomSource, gen_word

EXIT_OK = 0
EXIT_NOT_MEMBER = 1
EXIT_PARSE = 2
EXIT_BOUND = 3
EXIT_GENERATION = 4

MAX_ENUM_LEN = 12


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _add_pattern(p: argparse.ArgumentParser) -> None:
    p.add_argument("pattern", nargs="?", help="pattern in surface syntax (or AST with --ast)")
    p.add_argument("--file", "-f", help="read the pattern from this file instead")
    p.add_argument("--ast", action="store_true", help="pattern is in the (sing \"a\") AST format")


def _add_seed(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, help="seed for reproducible output (required when CI is set)")


def _load_pattern(args):
    if (args.pattern is None) == (args.file is None):
        raise CliError("give exactly one of PATTERN or --file", EXIT_PARSE)
    if args.file is not None:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read().rstrip("\r\n")
        except OSError as e:
            raise CliError(f"cannot read {args.file}: {e.strerror}", EXIT_PARSE) from None
    else:
        text = args.pattern
    try:
        return parse_ast(text) if args.ast else parse(text)
    except ParseError as e:
        raise CliError(f"cannot parse pattern: {e}", EXIT_PARSE) from None


def _rng(args) -> RandomSource:
    if args.seed is None and os.environ.get("CI"):
        raise CliError("--seed is required when CI is set", EXIT_PARSE)
    return RandomSource(args.seed)


def _show(word, blank_empty=False) -> str:
    if not word:
        return "" if blank_empty else EPSILON
    return word_to_string(word)


def cmd_render(args, out):
    print(render(_load_pattern(args)), file=out)
    return EXIT_OK


def cmd_parse(args, out):
    print(render_ast(_load_pattern(args)), file=out)
    return EXIT_OK


def cmd_gen(args, out):
    r = _load_pattern(args)
    if args.max_reps < 0:
        raise CliError("--max-reps must be >= 0", EXIT_PARSE)
    cfg = GenConfig(args.max_reps, _rng(args))
    for _ in range(args.count):
        print(_show(gen_word(r, cfg), args.empty_as_blank), file=out)
    return EXIT_OK


def cmd_enum(args, out):
    r = _load_pattern(args)
    if args.max_len < 0:
        raise CliError("--max-len must be >= 0", EXIT_PARSE)
    if args.max_len > MAX_ENUM_LEN and not args.force:
        raise CliError(
            f"--max-len {args.max_len} exceeds {MAX_ENUM_LEN}; pass --force to run anyway", EXIT_BOUND
        )
    for w in enumerate_upto(r, args.max_len):
        print(_show(w), file=out)
    return EXIT_OK


def cmd_member(args, out):
    r = _load_pattern(args)
    text = "" if args.word == EPSILON else args.word
    found = member(r, tuple(text))
    print("true" if found else "false", file=out)
    return EXIT_OK if found else EXIT_NOT_MEMBER


def cmd_password(args, out):
    rng_args = _rng(args)
    # one seed per password keeps --count N a prefix of --count N+1
    seeds = [rng_args.next_below(2**32) for _ in range(args.count)]
    for s in seeds:
        try:
            print(generate_password(s, args.max_attempts), file=out)
        except PasswordGenerationError as e:
            raise CliError(str(e), EXIT_GENERATION) from None
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="regwords", description="Render, generate and enumerate regular languages.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("render", help="print the canonical printable form")
    _add_pattern(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("parse", help="print the AST form")
    _add_pattern(p)
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("gen", help="generate random words")
    _add_pattern(p)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--max-reps", type=int, default=DEFAULT_MAX_STAR_REPS)
    p.add_argument("--empty-as-blank", action="store_true", help="print the empty word as a blank line")
    _add_seed(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("enum", help="list every word up to a length, shortlex order")
    _add_pattern(p)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--force", action="store_true", help=f"allow --max-len above {MAX_ENUM_LEN}")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("member", help="test whether a word is in the language")
    _add_pattern(p)
    p.add_argument("word", help="the word; '' or 'ε' for the empty word")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("password", help="generate passwords")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--max-attempts", type=int, default=MAX_PASSWORD_ATTEMPTS, help="draws allowed per password")
    _add_seed(p)
    p.set_defaults(func=cmd_password)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except CliError as e:
        print(f"regwords: error: {e}", file=err)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
