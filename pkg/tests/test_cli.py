import io
import subprocess
import sys

import pytest

from regwords.cli import main
from regwords.lang_oracle import shortlex_key
from regwords.showcase import is_bin_nums, is_passwd

ENDS_A = "(a U b)*a"
BIN = "(0 U 1(0 U 1)*)"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(autouse=True)
def no_ci(monkeypatch):
    monkeypatch.delenv("CI", raising=False)


def test_render_from_ast():
    code, out, _ = run("render", "--ast", '(concat (star (union (sing "a") (sing "b"))) (sing "a"))')
    assert (code, out) == (0, "(a U b)*a\n")


def test_render_canonicalizes():
    assert run("render", "ε")[:2] == (0, "ε\n")
    assert run("render", "((a U b))*a")[:2] == (0, "(a U b)*a\n")


def test_render_parse_error():
    code, out, err = run("render", "(a U b")
    assert code == 2 and out == ""
    assert "offset 0" in err


def test_parse_prints_ast():
    code, out, _ = run("parse", "(ab)*")
    assert (code, out) == (0, '(star (concat (sing "a") (sing "b")))\n')


def test_pattern_from_file(tmp_path):
    f = tmp_path / "p.txt"
    f.write_text(BIN + "\n", encoding="utf-8")
    assert run("render", "--file", str(f))[:2] == (0, BIN + "\n")
    assert run("member", "--file", str(f), "101")[:2] == (0, "true\n")


def test_pattern_source_must_be_unique(tmp_path):
    f = tmp_path / "p.txt"
    f.write_text("a", encoding="utf-8")
    assert run("render", "a", "--file", str(f))[0] == 2
    assert run("render")[0] == 2
    assert run("render", "--file", str(tmp_path / "missing"))[0] == 2


def test_gen_bin_nums():
    code, out, _ = run("gen", BIN, "--count", "100", "--seed", "7")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 100
    assert all(is_bin_nums(line) for line in lines)


def test_gen_is_reproducible():
    assert run("gen", ENDS_A, "--count", "20", "--seed", "3") == run("gen", ENDS_A, "--count", "20", "--seed", "3")


def test_gen_empty_word():
    assert run("gen", "ε", "--seed", "1")[:2] == (0, "ε\n")
    assert run("gen", "ε", "--seed", "1", "--empty-as-blank")[:2] == (0, "\n")


def test_gen_max_reps():
    _, out, _ = run("gen", "a*", "--count", "200", "--max-reps", "3", "--seed", "0")
    assert {len(line) for line in out.splitlines() if line != "ε"} <= {1, 2, 3}
    assert run("gen", "a*", "--max-reps", "-1", "--seed", "0")[0] == 2


def test_gen_requires_seed_under_ci(monkeypatch):
    monkeypatch.setenv("CI", "1")
    assert run("gen", "a")[0] == 2
    assert run("gen", "a", "--seed", "1")[0] == 0


def test_enum():
    code, out, _ = run("enum", ENDS_A, "--max-len", "3")
    assert code == 0 and out.split() == ["a", "aa", "ba", "aaa", "aba", "baa", "bba"]
    assert len(run("enum", BIN, "--max-len", "3")[1].splitlines()) == 8
    assert run("enum", "ε", "--max-len", "0")[:2] == (0, "ε\n")


def test_enum_is_strictly_shortlex():
    lines = run("enum", "(a U b(a U ε))*", "--max-len", "6")[1].splitlines()
    words = [() if line == "ε" else tuple(line) for line in lines]
    assert all(shortlex_key(u) < shortlex_key(v) for u, v in zip(words, words[1:]))


def test_enum_bound():
    assert run("enum", "a", "--max-len", "13")[0] == 3
    assert run("enum", "a*", "--max-len", "13", "--force")[1].count("\n") == 14
    assert run("enum", "a", "--max-len", "12")[0] == 0


def test_member():
    assert run("member", ENDS_A, "bba")[:2] == (0, "true\n")
    assert run("member", BIN, "00011010")[:2] == (1, "false\n")
    assert run("member", "ε", "")[:2] == (0, "true\n")
    assert run("member", "ε", "ε")[:2] == (0, "true\n")
    assert run("member", "a", "#")[:2] == (1, "false\n")
    assert run("member", "(a", "a")[0] == 2


def test_password():
    code, out, _ = run("password", "--count", "5", "--seed", "1")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 5 and all(is_passwd(p) for p in lines)
    assert run("password", "--count", "5", "--seed", "1") == (code, out, "")
    assert run("password", "--count", "0")[:2] == (0, "")


def test_password_count_prefix():
    three = run("password", "--count", "3", "--seed", "8")[1].splitlines()
    five = run("password", "--count", "5", "--seed", "8")[1].splitlines()
    assert five[:3] == three


def test_password_failure_exit_code(monkeypatch):
    import regwords.cli as cli
    from regwords.showcase import PasswordGenerationError

    def boom(seed, max_attempts):
        raise PasswordGenerationError("no luck")

    monkeypatch.setattr(cli, "generate_password", boom)
    code, _, err = run("password", "--seed", "1")
    assert code == 4 and "no luck" in err


def test_password_attempt_bound_flag():
    code, out, err = run("password", "--seed", "1", "--max-attempts", "0")
    assert (code, out) == (4, "") and "attempts" in err


def test_usage_errors_exit_2():
    assert run()[0] == 2
    assert run("bogus")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "regwords", "render", "(ab)*"], capture_output=True, text=True, encoding="utf-8"
    )
    assert proc.returncode == 0 and proc.stdout == "(ab)*\n"
